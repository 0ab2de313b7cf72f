#pragma once

#include "wpd2d/channel.hpp"
#include "wpd2d/equilibrium.hpp"
#include "wpd2d/params.hpp"

namespace wpd2d::energy_trading {

// BS best response to an offered price: [(lambda ||h||^2 - B) / (2A)]+.
// Independent of the time split.
double follower_power(const SystemParams& p, const ChannelRealization& chan,
                      double lambda_price);

struct InnerOptima {
    double p_s = 0.0;
    double rho_e = 0.0;
};

// D2D transmit power (all harvested energy) and the outage-tight SNR
// threshold for a given split and BS power.
InnerOptima inner_optima(const SystemParams& p, const ChannelRealization& chan,
                         double theta, double p_bs);

// Outage-tight threshold as a function of the D2D power alone; linear in p_s.
double rho_e_threshold(const SystemParams& p, double p_s, double p_bs);

// Price maximizing the D2D utility for a fixed split, positive branch of the
// stationarity quadratic. Always positive; the log argument it induces is
// always positive as well.
double optimal_price(const SystemParams& p, const ChannelRealization& chan,
                     double theta);

// How the outer split search treats the price:
//   nested        - price re-optimized at every candidate split (default)
//   frozen_lambda - alternate fixed-point iteration: freeze the price, solve
//                   the split by the first-order-condition crossing, refresh
//                   the price, repeat
enum class ThetaMode { nested, frozen_lambda };

struct ThetaSolution {
    double theta = 0.0;
    double lambda_price = 0.0;
};

// Split maximizing the D2D utility. Throws NoPositiveSecrecy when no split in
// the search grid yields a positive secrecy rate.
ThetaSolution optimal_theta(const SystemParams& p, const ChannelRealization& chan,
                            ThetaMode mode = ThetaMode::nested);

// Pieces of the frozen-price split problem. t1 drives the main-channel term,
// t2 the leakage term (split-free), t3 the payment term.
struct ThetaConstants {
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;
};

ThetaConstants theta_constants(const SystemParams& p, const ChannelRealization& chan,
                               double lambda_price);

// D2D utility as a function of the split with the price frozen. Written in
// the t1/t2/t3 form; -inf where the main-channel log argument is nonpositive.
double leader_utility_frozen_price(const SystemParams& p,
                                   const ChannelRealization& chan, double theta,
                                   double lambda_price);

// Stationary split for a frozen price, located as the crossing of the
// increasing and decreasing sides of the first-order condition.
double theta_crossing_frozen_price(const SystemParams& p,
                                   const ChannelRealization& chan,
                                   double lambda_price, double tol = 1e-9);

// Operating point at a caller-chosen split (price and power from the closed
// forms).
EquilibriumPoint solve_fixed_theta(const SystemParams& p,
                                   const ChannelRealization& chan, double theta);

// Full equilibrium: split, price, BS best response, inner optima.
EquilibriumPoint solve(const SystemParams& p, const ChannelRealization& chan,
                       ThetaMode mode = ThetaMode::nested);

}  // namespace wpd2d::energy_trading
