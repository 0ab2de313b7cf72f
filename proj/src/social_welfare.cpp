#include "wpd2d/social_welfare.hpp"

#include <cmath>

#include "wpd2d/energy_trading.hpp"
#include "wpd2d/errors.hpp"
#include "wpd2d/numerics.hpp"
#include "wpd2d/secrecy.hpp"
#include "wpd2d/utilities.hpp"

namespace wpd2d::social_welfare {

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

// combined SNR slope of the BS power after the harvest substitution
double snr_slope(const SystemParams& p, const ChannelRealization& chan, double theta) {
    return theta * p.xi * chan.h_norm2 * chan.h_s_abs2 / ((1.0 - theta) * p.sigma_s2);
}

}  // namespace

double welfare(const SystemParams& p, const ChannelRealization& chan, double theta,
               double p_bs) {
    check_theta(theta);
    if (p_bs < 0.0) throw DomainError("p_bs must be nonnegative");
    return welfare_utility(p, chan, theta, p_bs);
}

double optimal_power(const SystemParams& p, const ChannelRealization& chan,
                     double theta) {
    check_theta(theta);
    const double d = snr_slope(p, chan, theta);
    if (d <= 0.0) return 0.0;
    const double a = mu_effective(p) * (1.0 - theta);
    const double a2 = 2.0 * theta * p.cost_a * d;
    const double a1 = 2.0 * theta * p.cost_a + d * p.cost_b * theta;
    const double a0 = p.cost_b * theta - a * d;
    const auto root = numerics::solve_quadratic_positive(a2, a1, a0);
    if (!root || *root <= 0.0) return 0.0;  // marginal benefit below cost at the origin
    return *root;
}

EquilibriumPoint solve_fixed_theta(const SystemParams& p,
                                   const ChannelRealization& chan, double theta) {
    p.validate();
    const double pbs = optimal_power(p, chan, theta);
    EquilibriumPoint pt =
        assemble_point(p, chan, Scheme::social_welfare, theta, 0.0, pbs);
    if (pbs > 0.0) {
        const double d = snr_slope(p, chan, theta);
        const double a = mu_effective(p) * (1.0 - theta);
        const double foc =
            a * d / (1.0 + d * pbs) - 2.0 * theta * p.cost_a * pbs - theta * p.cost_b;
        pt.diagnostics.stationarity_residual = std::abs(foc);
    }
    return pt;
}

EquilibriumPoint solve(const SystemParams& p, const ChannelRealization& chan) {
    p.validate();

    bool feasible = false;
    auto objective = [&](double theta) {
        const double pbs = optimal_power(p, chan, theta);
        if (pbs > 0.0) {
            const auto inner = energy_trading::inner_optima(p, chan, theta, pbs);
            if (secrecy::secrecy_rate(p, chan, inner.p_s, inner.rho_e) > 0.0) {
                feasible = true;
            }
        }
        return welfare(p, chan, theta, pbs);
    };
    const auto rep =
        numerics::grid_refine_maximize(objective, kThetaLo, kThetaHi, kThetaGrid, kThetaTol);
    if (!feasible) {
        throw NoPositiveSecrecy("no time split yields a positive secrecy rate");
    }
    return solve_fixed_theta(p, chan, rep.argmax);
}

}  // namespace wpd2d::social_welfare
