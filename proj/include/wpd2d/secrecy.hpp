#pragma once

#include <cstdint>

#include "wpd2d/channel.hpp"
#include "wpd2d/params.hpp"

namespace wpd2d::secrecy {

// One operating point of the link.
struct SecrecyPoint {
    double p_s = 0.0;    // D2D transmit power
    double p_bs = 0.0;   // BS transmit/jamming power
    double rho_e = 0.0;  // eavesdropper SNR threshold
    double theta = 0.5;  // charging-time fraction
};

double capacity_d2d(const SystemParams& p, const ChannelRealization& chan, double p_s);

// main-channel rate minus the tolerated leakage rate; may be negative
double secrecy_rate(const SystemParams& p, const ChannelRealization& chan,
                    double p_s, double rho_e);

// Probability that the best eavesdropper's SNR exceeds rho_e, in closed form.
// rho_e = 0 always returns 1. Throws DomainError for p_s = 0 with rho_e > 0.
double outage_closed_form(const SystemParams& p, double p_s, double p_bs, double rho_e);

struct OutageEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::int64_t n_trials = 0;
};

// Outage events over the trial index range [first, last). Each trial draws its
// own seeded stream, so any partition of the range sums to the same count.
std::int64_t outage_mc_count(const SystemParams& p, double p_s, double p_bs,
                             double rho_e, std::int64_t first, std::int64_t last,
                             std::uint64_t seed);

OutageEstimate outage_monte_carlo(const SystemParams& p, double p_s, double p_bs,
                                  double rho_e, std::int64_t n_trials,
                                  std::uint64_t seed);

// confidential bits per block: (1-theta) * secrecy rate
double secrecy_throughput(const SystemParams& p, const ChannelRealization& chan,
                          const SecrecyPoint& point);

}  // namespace wpd2d::secrecy
