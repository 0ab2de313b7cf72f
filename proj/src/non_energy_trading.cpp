#include "wpd2d/non_energy_trading.hpp"

#include <cmath>

#include "wpd2d/errors.hpp"
#include "wpd2d/numerics.hpp"
#include "wpd2d/utilities.hpp"

namespace wpd2d::non_energy_trading {

namespace {

void check_theta(double theta) {
    if (!(theta > 0.0 && theta < 1.0)) {
        throw DomainError("theta must lie strictly inside (0,1)");
    }
}

}  // namespace

NetGameConstants constants(const SystemParams& p, const ChannelRealization& chan,
                           double theta) {
    check_theta(theta);
    if (!(chan.h_s_abs2 > 0.0)) {
        throw DomainError("non_energy_trading: D2D link gain is zero, demand never positive");
    }
    const double h2 = chan.h_norm2;
    NetGameConstants nc;
    nc.x_const = mu_effective(p) * (1.0 - theta) / (theta * h2);
    nc.y_const = (1.0 - theta) * p.sigma_s2 / (p.xi * theta * h2 * chan.h_s_abs2);
    nc.b_coef = (2.0 * p.cost_a * nc.x_const * nc.y_const - p.cost_b * nc.x_const) /
                (nc.y_const * h2);
    nc.c_coef = -2.0 * p.cost_a * nc.x_const * nc.x_const / (nc.y_const * h2);
    return nc;
}

double follower_power_demand(const SystemParams& p, const ChannelRealization& chan,
                             double theta, double lambda_price) {
    if (lambda_price < 0.0) throw DomainError("lambda_price must be nonnegative");
    if (lambda_price == 0.0) {
        throw DomainError("follower_power_demand: demand unbounded at a zero price");
    }
    const NetGameConstants nc = constants(p, chan, theta);
    const double raw = nc.x_const / lambda_price - nc.y_const;
    return raw > 0.0 ? raw : 0.0;
}

double leader_price(const SystemParams& p, const ChannelRealization& chan,
                    double theta) {
    const NetGameConstants nc = constants(p, chan, theta);
    // with several positive roots the BS profit breaks the tie (cannot happen
    // while c_coef < 0, which the constants guarantee)
    auto bs_profit = [&](double lambda) {
        const double demand = std::max(nc.x_const / lambda - nc.y_const, 0.0);
        return bs_utility(p, chan, theta, lambda, demand);
    };
    return numerics::solve_depressed_cubic_positive(nc.b_coef, nc.c_coef, bs_profit);
}

EquilibriumPoint solve(const SystemParams& p, const ChannelRealization& chan,
                       double theta) {
    p.validate();
    check_theta(theta);

    if (!(chan.h_s_abs2 > 0.0)) {
        EquilibriumPoint pt =
            assemble_point(p, chan, Scheme::non_energy_trading, theta, 0.0, 0.0);
        pt.diagnostics.no_trade = true;
        return pt;
    }

    const NetGameConstants nc = constants(p, chan, theta);
    const double root = leader_price(p, chan, theta);
    const double shutdown = nc.shutdown_price();

    if (root >= shutdown) {
        // stationary price sits past the point where demand dries up; the BS
        // can do no better than the boundary with nothing traded
        EquilibriumPoint pt =
            assemble_point(p, chan, Scheme::non_energy_trading, theta, shutdown, 0.0);
        pt.diagnostics.no_trade = true;
        return pt;
    }

    const double demand = nc.x_const / root - nc.y_const;
    EquilibriumPoint pt =
        assemble_point(p, chan, Scheme::non_energy_trading, theta, root, demand);
    const double r = ((root * root + nc.b_coef) * root + nc.c_coef);
    pt.diagnostics.stationarity_residual = std::abs(r);
    return pt;
}

}  // namespace wpd2d::non_energy_trading
