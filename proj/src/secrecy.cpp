#include "wpd2d/secrecy.hpp"

#include <algorithm>
#include <cmath>

#include "wpd2d/errors.hpp"
#include "wpd2d/rng.hpp"

namespace wpd2d::secrecy {

double capacity_d2d(const SystemParams& p, const ChannelRealization& chan, double p_s) {
    if (p_s < 0.0) throw DomainError("p_s must be nonnegative");
    return rate_of(p, p_s * chan.h_s_abs2 / p.sigma_s2);
}

double secrecy_rate(const SystemParams& p, const ChannelRealization& chan,
                    double p_s, double rho_e) {
    if (rho_e < 0.0) throw DomainError("rho_e must be nonnegative");
    return capacity_d2d(p, chan, p_s) - rate_of(p, rho_e);
}

double outage_closed_form(const SystemParams& p, double p_s, double p_bs, double rho_e) {
    if (rho_e < 0.0 || p_s < 0.0 || p_bs < 0.0) {
        throw DomainError("outage_closed_form: negative argument");
    }
    if (rho_e == 0.0) return 1.0;  // any positive eavesdropper SNR exceeds it
    if (p_s == 0.0) {
        throw DomainError("outage_closed_form: p_s = 0 with rho_e > 0 leaves the SNR ratio undefined");
    }
    const double ratio = rho_e * p_bs * p.gamma_e2 / (p_s * p.delta_e2 * (p.n_t - 1));
    const double per_eve_safe = 1.0 - std::pow(1.0 + ratio, 1.0 - p.n_t);
    const double out = 1.0 - std::pow(per_eve_safe, p.k_eves);
    return std::clamp(out, 0.0, 1.0);
}

std::int64_t outage_mc_count(const SystemParams& p, double p_s, double p_bs,
                             double rho_e, std::int64_t first, std::int64_t last,
                             std::uint64_t seed) {
    if (rho_e < 0.0 || p_bs < 0.0) throw DomainError("outage_mc_count: negative argument");
    if (!(p_s > 0.0)) throw DomainError("outage_mc_count: p_s must be positive");

    const int m = p.n_t - 1;  // jamming dimensions
    std::int64_t hits = 0;
    for (std::int64_t t = first; t < last; ++t) {
        // One stream per trial, consumed eavesdropper by eavesdropper: adding
        // eavesdroppers never changes the draws the first K see.
        SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(t), 0x6f757467ULL));
        for (int k = 0; k < p.k_eves; ++k) {
            // intercept channel, then the projected jamming vector
            const double he2 = std::norm(rng.next_cgauss(p.delta_e2));
            double jam2 = 0.0;
            for (int j = 0; j < m; ++j) jam2 += std::norm(rng.next_cgauss(p.gamma_e2));
            const double snr = p_s * m * he2 / (p_bs * jam2);
            if (snr > rho_e) {
                ++hits;
                break;
            }
        }
    }
    return hits;
}

OutageEstimate outage_monte_carlo(const SystemParams& p, double p_s, double p_bs,
                                  double rho_e, std::int64_t n_trials,
                                  std::uint64_t seed) {
    if (n_trials < 10000) throw DomainError("outage_monte_carlo: need at least 1e4 trials");
    const std::int64_t hits = outage_mc_count(p, p_s, p_bs, rho_e, 0, n_trials, seed);
    OutageEstimate est;
    est.n_trials = n_trials;
    est.estimate = static_cast<double>(hits) / static_cast<double>(n_trials);
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) /
                              static_cast<double>(n_trials));
    return est;
}

double secrecy_throughput(const SystemParams& p, const ChannelRealization& chan,
                          const SecrecyPoint& point) {
    if (!(point.theta > 0.0 && point.theta < 1.0)) {
        throw DomainError("secrecy_throughput: theta must lie in (0,1)");
    }
    return (1.0 - point.theta) * secrecy_rate(p, chan, point.p_s, point.rho_e);
}

}  // namespace wpd2d::secrecy
