#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wpd2d/acceptance.hpp"
#include "wpd2d/config.hpp"
#include "wpd2d/energy_trading.hpp"
#include "wpd2d/errors.hpp"
#include "wpd2d/non_energy_trading.hpp"
#include "wpd2d/secrecy.hpp"
#include "wpd2d/social_welfare.hpp"
#include "wpd2d/sweep.hpp"
#include "wpd2d/utilities.hpp"

namespace {

using namespace wpd2d;
using harness::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

struct CommonOpts {
    std::string config_path;
    std::optional<int> n_t, k_eves;
    std::optional<double> xi, eps_outage, mu, cost_a, cost_b, sigma_s2, gamma_e2,
        delta_e2, log_base, h_var, hs_var;
    std::uint64_t seed = 1;
};

void add_common_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "flat key=value config file");
    cmd->add_option("--n-t", o.n_t, "BS transmit antennas");
    cmd->add_option("--k-eves", o.k_eves, "number of eavesdroppers");
    cmd->add_option("--xi", o.xi, "energy-harvesting efficiency");
    cmd->add_option("--eps-outage", o.eps_outage, "secrecy outage budget");
    cmd->add_option("--mu", o.mu, "gain per unit secrecy throughput");
    cmd->add_option("--cost-a", o.cost_a, "quadratic energy-cost coefficient");
    cmd->add_option("--cost-b", o.cost_b, "linear energy-cost coefficient");
    cmd->add_option("--sigma-s2", o.sigma_s2, "noise-plus-interference power");
    cmd->add_option("--gamma-e2", o.gamma_e2, "projected jamming-channel variance");
    cmd->add_option("--delta-e2", o.delta_e2, "intercept-channel variance");
    cmd->add_option("--log-base", o.log_base, "rate logarithm base");
    cmd->add_option("--h-var", o.h_var, "BS->D2D channel entry variance");
    cmd->add_option("--hs-var", o.hs_var, "D2D link coefficient variance");
    cmd->add_option("--seed", o.seed, "channel RNG seed");
}

RunConfig build_config(const CommonOpts& o) {
    RunConfig cfg;
    if (!o.config_path.empty()) {
        cfg = harness::apply_config(harness::load_config_file(o.config_path), cfg);
    }
    if (o.n_t) cfg.params.n_t = *o.n_t;
    if (o.k_eves) cfg.params.k_eves = *o.k_eves;
    if (o.xi) cfg.params.xi = *o.xi;
    if (o.eps_outage) cfg.params.eps_outage = *o.eps_outage;
    if (o.mu) cfg.params.mu = *o.mu;
    if (o.cost_a) cfg.params.cost_a = *o.cost_a;
    if (o.cost_b) cfg.params.cost_b = *o.cost_b;
    if (o.sigma_s2) cfg.params.sigma_s2 = *o.sigma_s2;
    if (o.gamma_e2) cfg.params.gamma_e2 = *o.gamma_e2;
    if (o.delta_e2) cfg.params.delta_e2 = *o.delta_e2;
    if (o.log_base) cfg.params.log_base = *o.log_base;
    if (o.h_var) cfg.variances.h_var = *o.h_var;
    if (o.hs_var) cfg.variances.hs_var = *o.hs_var;
    try {
        cfg.params.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

void print_point(const EquilibriumPoint& pt, std::ostream& out) {
    const auto& d = pt.diagnostics;
    out << "scheme=" << scheme_name(pt.scheme_tag) << "\n"
        << "theta=" << pt.theta << "\n"
        << "lambda=" << pt.lambda_price << "\n"
        << "p_bs=" << pt.p_bs << "\n"
        << "p_s=" << pt.p_s << "\n"
        << "rho_e=" << pt.rho_e << "\n"
        << "u_leader=" << pt.u_leader << "\n"
        << "u_bs=" << pt.u_bs << "\n"
        << "payment=" << pt.payment << "\n"
        << "welfare=" << d.welfare << "\n"
        << "stationarity_residual=" << d.stationarity_residual << "\n"
        << "outage_gap=" << d.outage_gap << "\n"
        << "no_trade=" << (d.no_trade ? 1 : 0) << "\n"
        << "negative_leader_utility=" << (d.negative_leader_utility ? 1 : 0) << "\n";
}

int run_solve(const CommonOpts& opts, const std::string& scheme_str,
              std::optional<double> theta) {
    const RunConfig cfg = build_config(opts);
    const Scheme scheme = scheme_from_name(scheme_str);
    const auto chan = sample_channels(cfg.params, opts.seed, cfg.variances);
    const auto outcome =
        harness::solve_point(cfg.params, chan, scheme, theta, cfg.et_theta_mode);
    if (!outcome.ok) {
        std::cerr << "solve failed: " << outcome.error << "\n";
        return kExitInfeasible;
    }
    print_point(outcome.point, std::cout);
    std::cout << "secrecy_throughput=" << outcome.throughput << "\n";
    return kExitOk;
}

int run_sweep_cmd(const CommonOpts& opts, const std::string& out_path) {
    RunConfig cfg = build_config(opts);
    if (!cfg.has_sweep) {
        throw ConfigError("sweep: config file must define variable/values/schemes");
    }
    if (cfg.sweep.base_seed == 1 && opts.seed != 1) cfg.sweep.base_seed = opts.seed;
    const auto result =
        harness::run_sweep(cfg.sweep, cfg.params, cfg.variances, cfg.et_theta_mode);

    bool any_ok = false;
    for (const auto& row : result.rows) any_ok = any_ok || row.n_ok > 0;

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("sweep: cannot open output file " + out_path);
    harness::write_csv(result, out);
    std::cout << "wrote " << result.rows.size() << " rows to " << out_path << "\n";
    return any_ok ? kExitOk : kExitInfeasible;
}

int run_outage_mc(const CommonOpts& opts, double p_s, double p_bs, double rho_e,
                  std::int64_t n_trials) {
    const RunConfig cfg = build_config(opts);
    const double closed = secrecy::outage_closed_form(cfg.params, p_s, p_bs, rho_e);
    const auto est =
        secrecy::outage_monte_carlo(cfg.params, p_s, p_bs, rho_e, n_trials, opts.seed);
    const double se = est.std_error > 0.0 ? est.std_error : 1.0 / n_trials;
    std::cout << "closed_form=" << closed << "\n"
              << "mc_estimate=" << est.estimate << "\n"
              << "mc_std_error=" << est.std_error << "\n"
              << "n_trials=" << est.n_trials << "\n"
              << "z_score=" << (est.estimate - closed) / se << "\n";
    return kExitOk;
}

int run_accept(const CommonOpts& opts, int n_scenarios) {
    const RunConfig cfg = build_config(opts);
    const auto report = harness::run_acceptance(cfg.params, n_scenarios, opts.seed);
    harness::print_report(report, std::cout);
    return report.all_pass ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stackelberg equilibria and welfare optima for a secure "
                 "wireless-powered D2D link with a cooperative-jamming base station"};
    app.require_subcommand(1);

    CommonOpts solve_opts, sweep_opts, mc_opts, accept_opts;

    auto* solve_cmd = app.add_subcommand("solve", "solve one scenario under one scheme");
    add_common_options(solve_cmd, solve_opts);
    std::string scheme_str = "energy_trading";
    std::optional<double> theta;
    solve_cmd->add_option("--scheme", scheme_str,
                          "energy_trading | non_energy_trading | social_welfare");
    solve_cmd->add_option("--theta", theta,
                          "fix the charging-time split instead of optimizing it");

    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep, write CSV");
    add_common_options(sweep_cmd, sweep_opts);
    std::string out_path = "sweep.csv";
    sweep_cmd->add_option("--out", out_path, "output CSV path");

    auto* mc_cmd = app.add_subcommand(
        "outage-mc", "secrecy outage: closed form vs Monte Carlo at one point");
    add_common_options(mc_cmd, mc_opts);
    double p_s = 1.0, p_bs = 1.0, rho_e = 1.0;
    std::int64_t n_trials = 1000000;
    mc_cmd->add_option("--p-s", p_s, "D2D transmit power");
    mc_cmd->add_option("--p-bs", p_bs, "BS transmit/jamming power");
    mc_cmd->add_option("--rho-e", rho_e, "eavesdropper SNR threshold");
    mc_cmd->add_option("--n-trials", n_trials, "Monte-Carlo trials (>= 1e4)");

    auto* accept_cmd =
        app.add_subcommand("accept", "run the full acceptance suite and report");
    add_common_options(accept_cmd, accept_opts);
    int n_scenarios = 50;
    accept_cmd->add_option("--n-scenarios", n_scenarios,
                           "random scenarios for the oracle family (>= 20)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return run_solve(solve_opts, scheme_str, theta);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_opts, out_path);
        if (mc_cmd->parsed()) return run_outage_mc(mc_opts, p_s, p_bs, rho_e, n_trials);
        if (accept_cmd->parsed()) return run_accept(accept_opts, n_scenarios);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const NoPositiveSecrecy& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
