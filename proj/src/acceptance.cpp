#include "wpd2d/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <vector>

#include "wpd2d/energy_trading.hpp"
#include "wpd2d/errors.hpp"
#include "wpd2d/non_energy_trading.hpp"
#include "wpd2d/numerics.hpp"
#include "wpd2d/rng.hpp"
#include "wpd2d/secrecy.hpp"
#include "wpd2d/social_welfare.hpp"
#include "wpd2d/sweep.hpp"
#include "wpd2d/utilities.hpp"

namespace wpd2d::harness {

namespace {

using energy_trading::ThetaMode;

constexpr double kInf = std::numeric_limits<double>::infinity();

double uniform(SplitMix64& rng, double lo, double hi) {
    return lo + (hi - lo) * rng.next_unit();
}

double log_uniform(SplitMix64& rng, double lo, double hi) {
    return lo * std::exp(rng.next_unit() * std::log(hi / lo));
}

struct Scenario {
    SystemParams params;
    ChannelRealization chan;
};

Scenario random_scenario(SplitMix64& rng) {
    Scenario s;
    s.params.n_t = 2 + static_cast<int>(rng.next() % 7);
    s.params.k_eves = 1 + static_cast<int>(rng.next() % 4);
    s.params.xi = uniform(rng, 0.1, 0.9);
    s.params.eps_outage = uniform(rng, 0.05, 0.5);
    s.params.mu = log_uniform(rng, 0.1, 10.0);
    s.params.cost_a = log_uniform(rng, 0.1, 10.0);
    s.params.cost_b = log_uniform(rng, 0.1, 10.0);
    s.params.sigma_s2 = log_uniform(rng, 0.1, 10.0);
    s.params.gamma_e2 = log_uniform(rng, 0.1, 10.0);
    s.params.delta_e2 = log_uniform(rng, 0.1, 10.0);
    s.chan = sample_channels(s.params, rng.next());
    return s;
}

// a scenario on which every scheme admits a proper equilibrium (operating is
// profitable for each deviating player, so opting out is never an improvement)
Scenario random_equilibrium_scenario(SplitMix64& rng) {
    for (int attempt = 0; attempt < 5000; ++attempt) {
        Scenario s = random_scenario(rng);
        try {
            const auto et = energy_trading::solve(s.params, s.chan);
            if (et.diagnostics.negative_leader_utility) continue;
            const auto sw = social_welfare::solve(s.params, s.chan);
            if (sw.diagnostics.welfare < 0.0) continue;
            const auto net = non_energy_trading::solve(s.params, s.chan, 0.5);
            if (net.u_leader < 0.0) continue;  // follower would rather opt out
            return s;
        } catch (const Error&) {
            continue;
        }
    }
    throw Error("acceptance: could not sample an equilibrium scenario");
}

bool close(double actual, double expected, double rel = 1e-6, double abs_tol = 1e-9) {
    const double scale = std::max(std::abs(actual), std::abs(expected));
    return std::abs(actual - expected) <= std::max(abs_tol, rel * scale);
}

// normalized gap used for worst-residual reporting
double gap_of(double actual, double expected) {
    const double scale = std::max({std::abs(actual), std::abs(expected), 1.0});
    return std::abs(actual - expected) / scale;
}

// expand [hi0, ...] upward until the objective starts decreasing; the
// objectives here are unimodal above their peak
double expand_upper(const std::function<double(double)>& f, double hi0) {
    double hi = hi0;
    for (int i = 0; i < 120 && f(2.0 * hi) > f(hi); ++i) hi *= 2.0;
    return 4.0 * hi;
}

double expand_lower(const std::function<double(double)>& f, double lo0) {
    double lo = lo0;
    for (int i = 0; i < 120 && f(0.5 * lo) > f(lo); ++i) lo *= 0.5;
    return 0.25 * lo;
}

struct Elapsed {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string format_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ------------------------------------------------------------------
// criterion 1: closed forms vs grid+refine oracles
// ------------------------------------------------------------------

CriterionResult criterion_oracle_equivalence(int n_scenarios, std::uint64_t seed) {
    CriterionResult r;
    r.name = "oracle-equivalence";
    Elapsed clock;
    SplitMix64 rng(mix_seed(seed, 1));

    for (int i = 0; i < n_scenarios; ++i) {
        const Scenario s = random_scenario(rng);
        const SystemParams& p = s.params;
        const ChannelRealization& chan = s.chan;
        const double h2 = chan.h_norm2;
        const double hs2 = chan.h_s_abs2;
        const double theta = uniform(rng, 0.05, 0.95);
        const double mu_eff = mu_effective(p);

        // BS best response to a posted price (quadratic cost model)
        {
            const double lambda = p.cost_b / h2 * log_uniform(rng, 0.3, 10.0);
            auto u_bs = [&](double pw) {
                return theta * (lambda * pw * h2 - p.cost_a * pw * pw - p.cost_b * pw);
            };
            const double hi = lambda * h2 / p.cost_a + 1.0;
            const auto oracle = numerics::grid_refine_maximize(u_bs, 0.0, hi, 2000, 1e-11 * hi);
            const double closed = energy_trading::follower_power(p, chan, lambda);
            ++r.checks;
            r.worst = std::max(r.worst, gap_of(closed, oracle.argmax));
            if (!close(closed, oracle.argmax)) ++r.failures;
        }

        // optimal price for a fixed split
        {
            const double cq = theta * h2 * h2 / (2.0 * p.cost_a);
            const double dl = theta * p.cost_b * h2 / (4.0 * p.cost_a);
            const double a = mu_eff * (1.0 - theta);
            const double d = p.xi * hs2 / ((1.0 - theta) * p.sigma_s2);
            // leakage term is price-free, so it drops out of the oracle objective
            auto u_l = [&](double lam) {
                const double arg = 1.0 + d * (lam * cq - 2.0 * dl);
                if (arg <= 0.0) return -kInf;
                return a * std::log(arg) - lam * lam * cq + 2.0 * lam * dl;
            };
            const double lo = std::max(0.0, (2.0 * dl - 1.0 / std::max(d, 1e-300)) / cq);
            const double hi = expand_upper(u_l, std::max(1.0, 4.0 * dl / cq + 1.0 / cq));
            const auto oracle =
                numerics::grid_refine_maximize(u_l, lo, hi, 4000, 1e-11 * (hi - lo));
            const double closed = energy_trading::optimal_price(p, chan, theta);
            ++r.checks;
            r.worst = std::max(r.worst, gap_of(closed, oracle.argmax));
            if (!close(closed, oracle.argmax)) ++r.failures;
        }

        // reversed-game price (cubic) against the substituted BS profit
        {
            const double x_const = mu_eff * (1.0 - theta) / (theta * h2);
            const double y_const = (1.0 - theta) * p.sigma_s2 / (p.xi * theta * h2 * hs2);
            auto u_bs = [&](double lam) {
                const double pw = x_const / lam - y_const;  // unclamped demand
                return theta * (lam * pw * h2 - p.cost_a * pw * pw - p.cost_b * pw);
            };
            const double shutdown = x_const / y_const;
            const double lo = expand_lower(u_bs, 0.5 * shutdown);
            const double hi = expand_upper(u_bs, shutdown);
            const auto oracle =
                numerics::grid_refine_maximize(u_bs, lo, hi, 4000, 1e-11 * (hi - lo));
            const double closed = non_energy_trading::leader_price(p, chan, theta);
            ++r.checks;
            r.worst = std::max(r.worst, gap_of(closed, oracle.argmax));
            if (!close(closed, oracle.argmax)) ++r.failures;
        }

        // welfare-optimal BS power for a fixed split
        {
            const double d = theta * p.xi * h2 * hs2 / ((1.0 - theta) * p.sigma_s2);
            const double a = mu_eff * (1.0 - theta);
            auto u_sw = [&](double pw) {
                return a * std::log1p(d * pw) -
                       theta * (p.cost_a * pw * pw + p.cost_b * pw);
            };
            const double hi = a * d / (2.0 * theta * p.cost_a) + 1.0;
            const auto oracle = numerics::grid_refine_maximize(u_sw, 0.0, hi, 2000, 1e-11 * hi);
            const double closed = social_welfare::optimal_power(p, chan, theta);
            ++r.checks;
            r.worst = std::max(r.worst, gap_of(closed, oracle.argmax));
            if (!close(closed, oracle.argmax)) ++r.failures;
        }
    }

    r.seconds = clock.seconds();
    r.pass = r.failures == 0 && r.seconds < 60.0;
    r.detail = std::to_string(n_scenarios) + " scenarios x 4 closed forms, worst gap " +
               format_num(r.worst);
    return r;
}

// ------------------------------------------------------------------
// criterion 2: outage closed form vs Monte Carlo, and the eps identity
// ------------------------------------------------------------------

CriterionResult criterion_outage_consistency(std::uint64_t seed) {
    CriterionResult r;
    r.name = "outage-consistency";
    Elapsed clock;
    SplitMix64 rng(mix_seed(seed, 2));

    constexpr int kPoints = 20;
    constexpr std::int64_t kTrials = 1000000;
    double worst_z = 0.0;
    double worst_eps_gap = 0.0;

    for (int i = 0; i < kPoints; ++i) {
        const Scenario s = random_scenario(rng);
        const SystemParams& p = s.params;
        const double theta = uniform(rng, 0.1, 0.9);
        const double p_bs = log_uniform(rng, 0.1, 10.0);
        const double p_s = theta * p.xi * p_bs * s.chan.h_norm2 / (1.0 - theta);
        const double rho_opt = energy_trading::inner_optima(p, s.chan, theta, p_bs).rho_e;

        // tight-threshold identity: substituting the optimum must hit eps
        const double at_opt = secrecy::outage_closed_form(p, p_s, p_bs, rho_opt);
        worst_eps_gap = std::max(worst_eps_gap, std::abs(at_opt - p.eps_outage));

        // Monte-Carlo agreement in a band around the tight threshold
        const double rho = rho_opt * std::exp(uniform(rng, -1.0, 1.0));
        const double closed = secrecy::outage_closed_form(p, p_s, p_bs, rho);
        const auto est = secrecy::outage_monte_carlo(p, p_s, p_bs, rho, kTrials,
                                                     mix_seed(seed, 1000 + i));
        const double se = std::max({est.std_error,
                                    std::sqrt(closed * (1.0 - closed) / kTrials),
                                    1.0 / kTrials});
        const double z = std::abs(est.estimate - closed) / se;
        worst_z = std::max(worst_z, z);
        ++r.checks;
        if (z > 4.0) ++r.failures;
    }

    r.seconds = clock.seconds();
    r.pass = (kPoints - r.failures) >= 19 && worst_eps_gap <= 1e-9;
    r.worst = worst_eps_gap;
    r.detail = std::to_string(kPoints - r.failures) + "/" + std::to_string(kPoints) +
               " MC points within 4 sigma (worst z " + format_num(worst_z) +
               "), worst eps gap " + format_num(worst_eps_gap);
    return r;
}

// ------------------------------------------------------------------
// criterion 3: no unilateral deviation improves a player's utility
// ------------------------------------------------------------------

CriterionResult criterion_equilibrium_conditions(std::uint64_t seed) {
    CriterionResult r;
    r.name = "equilibrium-conditions";
    Elapsed clock;
    SplitMix64 rng(mix_seed(seed, 3));

    constexpr int kScenarios = 20;
    constexpr int kDeviations = 100;
    constexpr double kSlack = 1e-8;
    double worst_gain = -kInf;

    for (int i = 0; i < kScenarios; ++i) {
        const Scenario s = random_equilibrium_scenario(rng);
        const SystemParams& p = s.params;
        const ChannelRealization& chan = s.chan;

        // energy trading: leader deviates in (split, price), follower in power
        {
            const auto pt = energy_trading::solve(p, chan);
            for (int k = 0; k < kDeviations; ++k) {
                const double th = uniform(rng, 0.001, 0.999);
                const double lam = uniform(rng, 0.0, 3.0 * pt.lambda_price + 1e-3);
                const double pw = energy_trading::follower_power(p, chan, lam);
                const double gain = leader_utility(p, chan, th, lam, pw) - pt.u_leader;
                worst_gain = std::max(worst_gain, gain);
                ++r.checks;
                if (gain > kSlack) ++r.failures;
            }
            for (int k = 0; k < kDeviations; ++k) {
                const double pw = uniform(rng, 0.0, 4.0 * pt.p_bs + 1.0);
                const double gain =
                    bs_utility(p, chan, pt.theta, pt.lambda_price, pw) - pt.u_bs;
                worst_gain = std::max(worst_gain, gain);
                ++r.checks;
                if (gain > kSlack) ++r.failures;
            }
        }

        // reversed game at theta = 0.5: BS deviates in price, D2D in power
        {
            const double theta = 0.5;
            const auto pt = non_energy_trading::solve(p, chan, theta);
            const auto nc = non_energy_trading::constants(p, chan, theta);
            for (int k = 0; k < kDeviations; ++k) {
                const double lam = uniform(
                    rng, 1e-9, 3.0 * std::max(pt.lambda_price, nc.shutdown_price()));
                const double demand =
                    non_energy_trading::follower_power_demand(p, chan, theta, lam);
                const double gain = bs_utility(p, chan, theta, lam, demand) - pt.u_bs;
                worst_gain = std::max(worst_gain, gain);
                ++r.checks;
                if (gain > kSlack) ++r.failures;
            }
            for (int k = 0; k < kDeviations; ++k) {
                const double pw = uniform(rng, 0.0, 4.0 * pt.p_bs + 1.0);
                const double gain =
                    leader_utility(p, chan, theta, pt.lambda_price, pw) - pt.u_leader;
                worst_gain = std::max(worst_gain, gain);
                ++r.checks;
                if (gain > kSlack) ++r.failures;
            }
        }

        // social welfare: joint (split, power) deviations
        {
            const auto pt = social_welfare::solve(p, chan);
            for (int k = 0; k < kDeviations; ++k) {
                const double th = uniform(rng, 0.001, 0.999);
                const double pw = uniform(rng, 0.0, 4.0 * pt.p_bs + 1.0);
                const double gain =
                    welfare_utility(p, chan, th, pw) - pt.diagnostics.welfare;
                worst_gain = std::max(worst_gain, gain);
                ++r.checks;
                if (gain > kSlack) ++r.failures;
            }
        }
    }

    r.seconds = clock.seconds();
    r.pass = r.failures == 0;
    r.worst = worst_gain;
    r.detail = std::to_string(r.checks) + " deviations, best improvement found " +
               format_num(worst_gain);
    return r;
}

// ------------------------------------------------------------------
// criterion 4: welfare identity and welfare dominance
// ------------------------------------------------------------------

CriterionResult criterion_welfare_identity(std::uint64_t seed) {
    CriterionResult r;
    r.name = "welfare-identity";
    Elapsed clock;
    SplitMix64 rng(mix_seed(seed, 4));

    constexpr int kScenarios = 20;
    double worst_identity = 0.0;
    double worst_dominance = -kInf;

    for (int i = 0; i < kScenarios; ++i) {
        // identity U_SW = U_L + U_BS holds at arbitrary common points
        {
            const Scenario s = random_scenario(rng);
            for (int k = 0; k < 100; ++k) {
                const double th = uniform(rng, 0.01, 0.99);
                const double lam = log_uniform(rng, 0.01, 100.0);
                const double pw = log_uniform(rng, 0.01, 100.0);
                const double sum = leader_utility(s.params, s.chan, th, lam, pw) +
                                   bs_utility(s.params, s.chan, th, lam, pw);
                const double sw = welfare_utility(s.params, s.chan, th, pw);
                worst_identity = std::max(worst_identity, std::abs(sw - sum));
                ++r.checks;
                if (std::abs(sw - sum) > 1e-10) ++r.failures;
            }
        }
        // cooperation cannot do worse than the sum at the trading equilibrium
        {
            const Scenario s = random_equilibrium_scenario(rng);
            const auto et = energy_trading::solve(s.params, s.chan);
            const auto sw = social_welfare::solve(s.params, s.chan);
            const double shortfall = (et.u_leader + et.u_bs) - sw.diagnostics.welfare;
            worst_dominance = std::max(worst_dominance, shortfall);
            ++r.checks;
            if (shortfall > 1e-9) ++r.failures;
        }
    }

    r.seconds = clock.seconds();
    r.pass = r.failures == 0;
    r.worst = worst_identity;
    r.detail = "worst identity gap " + format_num(worst_identity) +
               ", worst dominance shortfall " + format_num(worst_dominance);
    return r;
}

// ------------------------------------------------------------------
// criterion 5: trend suite at the default scenario
// ------------------------------------------------------------------

// per-draw points over a sweep grid; draw i uses seed base_seed + i at every
// grid value so trends compare like with like
std::vector<std::vector<PointOutcome>> trend_matrix(const SystemParams& base,
                                                    SweepVariable variable,
                                                    const std::vector<double>& values,
                                                    Scheme scheme,
                                                    std::optional<double> fixed_theta,
                                                    int n_draws, std::uint64_t seed) {
    std::vector<std::vector<PointOutcome>> m(values.size());
    for (std::size_t v = 0; v < values.size(); ++v) {
        const SystemParams p = override_variable(base, variable, values[v]);
        const std::optional<double> fixed = variable == SweepVariable::theta
                                                ? std::optional<double>(values[v])
                                                : fixed_theta;
        m[v].reserve(n_draws);
        for (int i = 0; i < n_draws; ++i) {
            const auto chan = sample_channels(p, seed + i);
            m[v].push_back(solve_point(p, chan, scheme, fixed, ThetaMode::nested));
        }
    }
    return m;
}

// means over draws that solved at every grid value
std::vector<double> filtered_means(const std::vector<std::vector<PointOutcome>>& m,
                                   const std::function<double(const PointOutcome&)>& get,
                                   int* n_kept) {
    const std::size_t n_values = m.size();
    const std::size_t n_draws = m.empty() ? 0 : m.front().size();
    std::vector<double> means(n_values, 0.0);
    int kept = 0;
    for (std::size_t i = 0; i < n_draws; ++i) {
        bool all_ok = true;
        for (std::size_t v = 0; v < n_values; ++v) all_ok = all_ok && m[v][i].ok;
        if (!all_ok) continue;
        ++kept;
        for (std::size_t v = 0; v < n_values; ++v) means[v] += get(m[v][i]);
    }
    if (kept > 0) {
        for (auto& x : means) x /= kept;
    }
    if (n_kept) *n_kept = kept;
    return means;
}

struct TrendOutcome {
    bool pass = true;
    double worst = 0.0;  // largest step violating the direction
};

TrendOutcome check_monotone(const std::vector<double>& means, int direction,
                            double tol = 1e-9) {
    TrendOutcome t;
    for (std::size_t i = 1; i < means.size(); ++i) {
        const double step = (means[i] - means[i - 1]) * direction;
        if (step < -tol) {
            t.pass = false;
            t.worst = std::max(t.worst, -step);
        }
    }
    return t;
}

CriterionResult criterion_trend_suite(const SystemParams& defaults, std::uint64_t seed) {
    CriterionResult r;
    r.name = "trend-suite";
    Elapsed clock;

    constexpr int kDraws = 200;
    std::vector<double> theta_grid;
    for (int i = 0; i <= 15; ++i) theta_grid.push_back(0.20 + 0.05 * i);
    std::vector<double> xi_grid;
    for (int i = 1; i <= 9; ++i) xi_grid.push_back(0.1 * i);
    std::vector<double> delta_grid;
    for (int i = 1; i <= 8; ++i) delta_grid.push_back(0.25 * i);
    std::vector<double> k_grid;
    for (int i = 1; i <= 8; ++i) k_grid.push_back(i);

    auto get_payment = [](const PointOutcome& o) { return o.point.payment; };
    auto get_pbs = [](const PointOutcome& o) { return o.point.p_bs; };
    auto get_ps = [](const PointOutcome& o) { return o.point.p_s; };
    auto get_uleader = [](const PointOutcome& o) { return o.point.u_leader; };
    auto get_welfare = [](const PointOutcome& o) { return o.point.diagnostics.welfare; };
    auto get_theta = [](const PointOutcome& o) { return o.point.theta; };
    auto get_ts = [](const PointOutcome& o) { return o.throughput; };

    std::string failed;
    double worst = 0.0;
    auto run_trend = [&](const char* name, const SystemParams& base, SweepVariable var,
                         const std::vector<double>& grid, Scheme scheme,
                         std::optional<double> fixed_theta,
                         const std::function<double(const PointOutcome&)>& get,
                         int direction) {
        const auto m = trend_matrix(base, var, grid, scheme, fixed_theta, kDraws,
                                    mix_seed(seed, 5));
        int kept = 0;
        const auto means = filtered_means(m, get, &kept);
        ++r.checks;
        if (kept == 0) {
            ++r.failures;
            failed += std::string(" ") + name + "(no-data)";
            return;
        }
        const auto t = check_monotone(means, direction);
        worst = std::max(worst, t.worst);
        if (!t.pass) {
            ++r.failures;
            failed += std::string(" ") + name;
        }
    };

    const Scheme et = Scheme::energy_trading;
    const Scheme net = Scheme::non_energy_trading;
    const Scheme sw = Scheme::social_welfare;

    // payment and power profiles against the time split
    run_trend("payment(theta)-et", defaults, SweepVariable::theta, theta_grid, et, {}, get_payment, -1);
    run_trend("payment(theta)-net", defaults, SweepVariable::theta, theta_grid, net, {}, get_payment, -1);
    run_trend("p_bs(theta)-et", defaults, SweepVariable::theta, theta_grid, et, {}, get_pbs, -1);
    run_trend("p_bs(theta)-net", defaults, SweepVariable::theta, theta_grid, net, {}, get_pbs, -1);
    run_trend("p_bs(theta)-sw", defaults, SweepVariable::theta, theta_grid, sw, {}, get_pbs, -1);
    run_trend("p_s(theta)-et", defaults, SweepVariable::theta, theta_grid, et, {}, get_ps, +1);
    run_trend("p_s(theta)-net", defaults, SweepVariable::theta, theta_grid, net, {}, get_ps, +1);
    run_trend("p_s(theta)-sw", defaults, SweepVariable::theta, theta_grid, sw, {}, get_ps, +1);

    // harvest efficiency: throughput rises, the optimal split falls
    run_trend("throughput(xi)-et", defaults, SweepVariable::xi, xi_grid, et, {}, get_ts, +1);
    run_trend("throughput(xi)-sw", defaults, SweepVariable::xi, xi_grid, sw, {}, get_ts, +1);
    run_trend("throughput(xi)-net", defaults, SweepVariable::xi, xi_grid, net, 0.5, get_ts, +1);
    run_trend("theta_opt(xi)-et", defaults, SweepVariable::xi, xi_grid, et, {}, get_theta, -1);
    run_trend("theta_opt(xi)-sw", defaults, SweepVariable::xi, xi_grid, sw, {}, get_theta, -1);

    // stronger intercept channel hurts every scheme
    run_trend("u_leader(delta)-et", defaults, SweepVariable::delta_e2, delta_grid, et, {}, get_uleader, -1);
    run_trend("welfare(delta)-sw", defaults, SweepVariable::delta_e2, delta_grid, sw, {}, get_welfare, -1);
    run_trend("u_leader(delta)-net", defaults, SweepVariable::delta_e2, delta_grid, net, 0.5, get_uleader, -1);

    // more eavesdroppers hurt every scheme
    run_trend("u_leader(k)-et", defaults, SweepVariable::k_eves, k_grid, et, {}, get_uleader, -1);
    run_trend("welfare(k)-sw", defaults, SweepVariable::k_eves, k_grid, sw, {}, get_welfare, -1);
    run_trend("u_leader(k)-net", defaults, SweepVariable::k_eves, k_grid, net, 0.5, get_uleader, -1);

    r.seconds = clock.seconds();
    r.pass = r.failures == 0 && r.seconds < 300.0;
    r.worst = worst;
    r.detail = failed.empty() ? std::to_string(r.checks) + " trends monotone"
                              : "violations:" + failed;
    return r;
}

// ------------------------------------------------------------------
// criterion 6: polynomial residuals of the root solvers
// ------------------------------------------------------------------

CriterionResult criterion_root_residuals(std::uint64_t seed) {
    CriterionResult r;
    r.name = "root-residuals";
    Elapsed clock;
    SplitMix64 rng(mix_seed(seed, 6));

    // coefficient magnitudes follow the random-parameter convention of the
    // oracle family; far outside it the absolute residual bound drops below
    // what double evaluation of the polynomial can resolve
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double a2 = log_uniform(rng, 0.1, 10.0);
        const double a1 = log_uniform(rng, 0.1, 10.0) * (rng.next() % 2 ? 1.0 : -1.0);
        const double a0 = log_uniform(rng, 0.1, 10.0) * (rng.next() % 2 ? 1.0 : -1.0);
        const auto root = numerics::solve_quadratic_positive(a2, a1, a0);
        if (!root) continue;
        const double x = *root;
        const double res = std::abs((a2 * x + a1) * x + a0);
        const double bound = 1e-8 * std::max(1.0, std::abs(a0));
        worst = std::max(worst, res / bound);
        ++r.checks;
        if (res > bound) ++r.failures;
    }
    for (int i = 0; i < 1000; ++i) {
        const double b = log_uniform(rng, 0.1, 10.0) * (rng.next() % 2 ? 1.0 : -1.0);
        const double c = -log_uniform(rng, 0.1, 10.0);
        double x = 0.0;
        try {
            x = numerics::solve_depressed_cubic_positive(b, c);
        } catch (const NoPositiveRoot&) {
            ++r.failures;  // impossible for c < 0
            ++r.checks;
            continue;
        }
        const double res = std::abs((x * x + b) * x + c);
        const double bound = 1e-8 * std::max(1.0, std::abs(c));
        worst = std::max(worst, res / bound);
        ++r.checks;
        if (res > bound || !(x > 0.0)) ++r.failures;
    }

    r.seconds = clock.seconds();
    r.pass = r.failures == 0;
    r.worst = worst;
    r.detail = std::to_string(r.checks) + " roots, worst residual at " +
               format_num(worst) + "x the bound";
    return r;
}

}  // namespace

AcceptanceReport run_acceptance(const SystemParams& defaults, int n_scenarios,
                                std::uint64_t seed, bool include_trends) {
    if (n_scenarios < 20) throw DomainError("run_acceptance: need at least 20 scenarios");
    defaults.validate();

    AcceptanceReport report;
    report.criteria.push_back(criterion_oracle_equivalence(n_scenarios, seed));
    report.criteria.push_back(criterion_outage_consistency(seed));
    report.criteria.push_back(criterion_equilibrium_conditions(seed));
    report.criteria.push_back(criterion_welfare_identity(seed));
    if (include_trends) {
        report.criteria.push_back(criterion_trend_suite(defaults, seed));
    }
    report.criteria.push_back(criterion_root_residuals(seed));
    report.all_pass = true;
    for (const auto& c : report.criteria) report.all_pass = report.all_pass && c.pass;
    return report;
}

void print_report(const AcceptanceReport& report, std::ostream& out) {
    int idx = 0;
    for (const auto& c : report.criteria) {
        ++idx;
        char secs[32];
        std::snprintf(secs, sizeof(secs), "%.1f", c.seconds);
        out << "[" << idx << "/" << report.criteria.size() << "] " << c.name << " ... "
            << (c.pass ? "PASS" : "FAIL") << " (" << c.detail << ") [" << secs
            << " s]\n";
    }
    out << (report.all_pass ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: FAILURES present")
        << "\n";
}

}  // namespace wpd2d::harness
