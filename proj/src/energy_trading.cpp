#include "wpd2d/energy_trading.hpp"

#include <cmath>
#include <limits>

#include "wpd2d/errors.hpp"
#include "wpd2d/numerics.hpp"
#include "wpd2d/secrecy.hpp"
#include "wpd2d/utilities.hpp"

namespace wpd2d::energy_trading {

namespace {

constexpr double kThetaLo = 0.001;
constexpr double kThetaHi = 0.999;
constexpr int kThetaGrid = 2000;
constexpr double kThetaTol = 1e-10;

void check_theta(double theta) {
    if (!(theta > 0.0 && theta < 1.0)) {
        throw DomainError("theta must lie strictly inside (0,1)");
    }
}

// price-problem constants for a fixed split
struct PriceModel {
    double cq;  // payment curvature: theta ||h||^4 / (2A)
    double dl;  // payment linear offset: theta B ||h||^2 / (4A)
    double a;   // throughput gain against natural-log rates
    double d;   // main-channel SNR slope in the price
};

PriceModel price_model(const SystemParams& p, const ChannelRealization& chan,
                       double theta) {
    const double h2 = chan.h_norm2;
    PriceModel m;
    m.cq = theta * h2 * h2 / (2.0 * p.cost_a);
    m.dl = theta * p.cost_b * h2 / (4.0 * p.cost_a);
    m.a = mu_effective(p) * (1.0 - theta);
    m.d = p.xi * chan.h_s_abs2 / ((1.0 - theta) * p.sigma_s2);
    return m;
}

// first-order condition of the price problem; zero at the optimum when the
// BS participates
double price_stationarity(const PriceModel& m, double lambda) {
    const double arg = 1.0 + m.d * (lambda * m.cq - 2.0 * m.dl);
    if (arg <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return m.a * m.d * m.cq / arg - 2.0 * lambda * m.cq + 2.0 * m.dl;
}

double stationarity_residual_at(const SystemParams& p, const ChannelRealization& chan,
                                double theta, double lambda) {
    const double r = price_stationarity(price_model(p, chan, theta), lambda);
    return std::isfinite(r) ? std::abs(r) : 0.0;
}

}  // namespace

double follower_power(const SystemParams& p, const ChannelRealization& chan,
                      double lambda_price) {
    if (lambda_price < 0.0) throw DomainError("lambda_price must be nonnegative");
    const double raw = (lambda_price * chan.h_norm2 - p.cost_b) / (2.0 * p.cost_a);
    return raw > 0.0 ? raw : 0.0;
}

double rho_e_threshold(const SystemParams& p, double p_s, double p_bs) {
    if (!(p_bs > 0.0)) throw DomainError("rho_e_threshold: p_bs must be positive");
    return (p.n_t - 1) * outage_margin(p) * p.delta_e2 * p_s / (p_bs * p.gamma_e2);
}

InnerOptima inner_optima(const SystemParams& p, const ChannelRealization& chan,
                         double theta, double p_bs) {
    check_theta(theta);
    if (p_bs < 0.0) throw DomainError("p_bs must be nonnegative");
    if (p_bs == 0.0) return {0.0, 0.0};

    InnerOptima inner;
    inner.p_s = theta * p.xi * p_bs * chan.h_norm2 / (1.0 - theta);
    inner.rho_e = theta * p.xi * chan.h_norm2 * (p.n_t - 1) * outage_margin(p) *
                  p.delta_e2 / ((1.0 - theta) * p.gamma_e2);
    return inner;
}

double optimal_price(const SystemParams& p, const ChannelRealization& chan,
                     double theta) {
    check_theta(theta);
    const PriceModel m = price_model(p, chan, theta);
    if (m.d <= 0.0) return m.dl / m.cq;  // dead D2D link: stationarity limit

    // positive branch of the stationarity quadratic, written so the surd
    // never cancels against (1 - d*D)
    const double one_minus_dD = 1.0 - m.d * m.dl;
    const double s =
        std::sqrt(one_minus_dD * one_minus_dD + 2.0 * m.a * m.d * m.d * m.cq);
    const double bracket = one_minus_dD > 0.0
                               ? 2.0 * m.a * m.d * m.d * m.cq / (one_minus_dD + s)
                               : s - one_minus_dD;
    return (2.0 * m.d * m.dl + bracket) / (2.0 * m.d * m.cq);
}

ThetaConstants theta_constants(const SystemParams& p, const ChannelRealization& chan,
                               double lambda_price) {
    const double h2 = chan.h_norm2;
    ThetaConstants tc;
    tc.t1 = p.xi * chan.h_s_abs2 * (lambda_price * h2 * h2 - p.cost_b * h2) /
            (2.0 * p.cost_a * p.sigma_s2);
    tc.t2 = p.xi * h2 * (p.n_t - 1) * outage_margin(p) * p.delta_e2 / p.gamma_e2;
    tc.t3 = lambda_price * lambda_price * h2 * h2 / (2.0 * p.cost_a) -
            lambda_price * p.cost_b * h2 / (2.0 * p.cost_a);
    return tc;
}

double leader_utility_frozen_price(const SystemParams& p,
                                   const ChannelRealization& chan, double theta,
                                   double lambda_price) {
    check_theta(theta);
    const ThetaConstants tc = theta_constants(p, chan, lambda_price);
    const double w = theta / (1.0 - theta);
    const double arg1 = 1.0 + tc.t1 * w;
    if (arg1 <= 0.0) return -std::numeric_limits<double>::infinity();
    const double mu_eff = mu_effective(p);
    return mu_eff * (1.0 - theta) * (std::log(arg1) - std::log1p(tc.t2 * w)) -
           theta * tc.t3;
}

double theta_crossing_frozen_price(const SystemParams& p,
                                   const ChannelRealization& chan,
                                   double lambda_price, double tol) {
    const ThetaConstants tc = theta_constants(p, chan, lambda_price);
    if (!(tc.t1 > tc.t2)) {
        throw NoPositiveSecrecy("frozen-price split problem has no positive secrecy rate");
    }
    const double mu_eff = mu_effective(p);
    // increasing and decreasing sides of dU/dtheta = 0
    auto f = [&](double th) {
        return mu_eff * std::log(((tc.t1 - 1.0) * th + 1.0) / ((tc.t2 - 1.0) * th + 1.0));
    };
    auto g = [&](double th) {
        const double m1 = (tc.t1 - 1.0) / ((tc.t1 - 1.0) * th + 1.0);
        const double m2 = (tc.t2 - 1.0) / ((tc.t2 - 1.0) * th + 1.0);
        return mu_eff * (1.0 - th) * (m1 - m2) - tc.t3;
    };
    return numerics::bisect_increasing_decreasing(f, g, 0.0, 1.0, tol);
}

ThetaSolution optimal_theta(const SystemParams& p, const ChannelRealization& chan,
                            ThetaMode mode) {
    p.validate();

    bool feasible = false;
    auto composite = [&](double theta) {
        const double lambda = optimal_price(p, chan, theta);
        const double pbs = follower_power(p, chan, lambda);
        const auto inner = inner_optima(p, chan, theta, pbs);
        if (secrecy::secrecy_rate(p, chan, inner.p_s, inner.rho_e) > 0.0) feasible = true;
        return leader_utility(p, chan, theta, lambda, pbs);
    };

    if (mode == ThetaMode::nested) {
        const auto rep =
            numerics::grid_refine_maximize(composite, kThetaLo, kThetaHi, kThetaGrid, kThetaTol);
        if (!feasible) {
            throw NoPositiveSecrecy("no time split yields a positive secrecy rate");
        }
        return {rep.argmax, optimal_price(p, chan, rep.argmax)};
    }

    // frozen-price fixed point: scan feasibility once, then alternate price
    // refresh and split search
    for (int i = 0; i <= kThetaGrid; ++i) {
        composite(kThetaLo + (kThetaHi - kThetaLo) * i / kThetaGrid);
    }
    if (!feasible) {
        throw NoPositiveSecrecy("no time split yields a positive secrecy rate");
    }

    double theta = 0.5;
    double lambda = optimal_price(p, chan, theta);
    for (int iter = 0; iter < 64; ++iter) {
        double next;
        try {
            next = theta_crossing_frozen_price(p, chan, lambda);
        } catch (const Error&) {
            // crossing bracket unavailable: fall back to a grid pass on the
            // frozen objective
            auto frozen = [&](double th) {
                return leader_utility_frozen_price(p, chan, th, lambda);
            };
            next = numerics::grid_refine_maximize(frozen, kThetaLo, kThetaHi, kThetaGrid,
                                                  kThetaTol)
                       .argmax;
        }
        const double moved = std::abs(next - theta);
        theta = next;
        lambda = optimal_price(p, chan, theta);
        if (moved <= 1e-9) break;
    }
    return {theta, lambda};
}

EquilibriumPoint solve_fixed_theta(const SystemParams& p,
                                   const ChannelRealization& chan, double theta) {
    p.validate();
    check_theta(theta);
    const double lambda = optimal_price(p, chan, theta);
    const double pbs = follower_power(p, chan, lambda);
    EquilibriumPoint pt =
        assemble_point(p, chan, Scheme::energy_trading, theta, lambda, pbs);
    pt.diagnostics.stationarity_residual = stationarity_residual_at(p, chan, theta, lambda);
    return pt;
}

EquilibriumPoint solve(const SystemParams& p, const ChannelRealization& chan,
                       ThetaMode mode) {
    const ThetaSolution ts = optimal_theta(p, chan, mode);
    EquilibriumPoint pt = solve_fixed_theta(p, chan, ts.theta);
    return pt;
}

}  // namespace wpd2d::energy_trading
