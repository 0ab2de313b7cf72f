#pragma once

#include "wpd2d/channel.hpp"
#include "wpd2d/equilibrium.hpp"
#include "wpd2d/params.hpp"

namespace wpd2d::social_welfare {

// Joint utility at a given split and BS power, with the D2D side at its inner
// optimum. Exactly 0 at p_bs = 0 (nothing harvested, nothing leaked).
double welfare(const SystemParams& p, const ChannelRealization& chan, double theta,
               double p_bs);

// BS power maximizing welfare for a fixed split: positive branch of the cost-
// benefit quadratic, clamped at zero.
double optimal_power(const SystemParams& p, const ChannelRealization& chan,
                     double theta);

// Welfare-optimal point at a caller-chosen split.
EquilibriumPoint solve_fixed_theta(const SystemParams& p,
                                   const ChannelRealization& chan, double theta);

// Joint optimum over split and power. Price and payment are zero by
// construction; diagnostics.welfare carries the objective. Throws
// NoPositiveSecrecy when no split admits a positive secrecy rate at its
// optimal power.
EquilibriumPoint solve(const SystemParams& p, const ChannelRealization& chan);

}  // namespace wpd2d::social_welfare
