#pragma once

#include "wpd2d/channel.hpp"
#include "wpd2d/equilibrium.hpp"
#include "wpd2d/params.hpp"

namespace wpd2d {

// Utility functions of the game, evaluated from their definitions. The D2D
// side always operates at the inner optimum (full harvested power, outage-
// tight threshold) for the given split and BS power.

// energy payment lambda * theta * p_bs * ||h||^2
double payment(const ChannelRealization& chan, double theta, double lambda_price,
               double p_bs);

// D2D-side utility: mu * secrecy throughput - payment
double leader_utility(const SystemParams& p, const ChannelRealization& chan,
                      double theta, double lambda_price, double p_bs);

// BS-side utility: theta * (revenue - quadratic energy cost)
double bs_utility(const SystemParams& p, const ChannelRealization& chan,
                  double theta, double lambda_price, double p_bs);

// joint utility; the payment cancels, so this equals leader + BS at any price
double welfare_utility(const SystemParams& p, const ChannelRealization& chan,
                       double theta, double p_bs);

// Fills every derived field of an operating point (inner optimum, utilities,
// payment, outage gap, welfare, flags) from the primal decisions. Scheme
// solvers add their own stationarity residuals afterwards.
EquilibriumPoint assemble_point(const SystemParams& p, const ChannelRealization& chan,
                                Scheme scheme, double theta, double lambda_price,
                                double p_bs);

}  // namespace wpd2d
