#pragma once

#include "wpd2d/channel.hpp"
#include "wpd2d/equilibrium.hpp"
#include "wpd2d/params.hpp"

namespace wpd2d::non_energy_trading {

// Reduced constants of the reversed game at a fixed split. The D2D demand is
// [x_const / lambda - y_const]+ and the BS price stationarity is the
// depressed cubic lambda^3 + b_coef * lambda + c_coef = 0.
struct NetGameConstants {
    double x_const = 0.0;
    double y_const = 0.0;
    double b_coef = 0.0;
    double c_coef = 0.0;  // negative whenever the D2D channel is nonzero

    double shutdown_price() const { return y_const > 0 ? x_const / y_const : 0.0; }
};

NetGameConstants constants(const SystemParams& p, const ChannelRealization& chan,
                           double theta);

// BS power the D2D side asks for at a posted price. Throws DomainError at
// lambda = 0 (demand unbounded).
double follower_power_demand(const SystemParams& p, const ChannelRealization& chan,
                             double theta, double lambda_price);

// Price maximizing the BS utility against the demand curve: the positive real
// root of the stationarity cubic. May exceed the shutdown price; solve()
// handles that corner.
double leader_price(const SystemParams& p, const ChannelRealization& chan,
                    double theta);

// Equilibrium at a fixed split. When the cubic root is at or above the
// shutdown price no energy changes hands: the point comes back with zero
// power and the no_trade flag set.
EquilibriumPoint solve(const SystemParams& p, const ChannelRealization& chan,
                       double theta);

}  // namespace wpd2d::non_energy_trading
