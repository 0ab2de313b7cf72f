#pragma once

namespace wpd2d {

// Scenario constants for one secured wireless-powered D2D link.
//
// Eavesdropper statistics: delta_e2 scales the channel on which the
// eavesdroppers overhear the D2D transmission, gamma_e2 scales the jamming
// field they receive through the null-space projection. Only the ratio
// delta_e2/gamma_e2 enters the closed forms.
//
// Rates are logarithms of base `log_base` (default 2, i.e. bits/channel use).
// The base never cancels in the utility functions: it rescales the value of
// mu. Keep mu and log_base consistent when comparing runs.
struct SystemParams {
    int n_t = 5;               // BS transmit antennas, >= 2
    int k_eves = 2;            // eavesdroppers, >= 1
    double xi = 0.8;           // energy-harvesting efficiency, in (0,1)
    double eps_outage = 0.1;   // secrecy outage budget, in (0,1)
    double mu = 100.0;         // gain per unit secrecy throughput
    double cost_a = 1.0;       // quadratic energy-cost coefficient
    double cost_b = 1.0;       // linear energy-cost coefficient
    double sigma_s2 = 1.0;     // noise-plus-interference power at the D2D receiver
    double gamma_e2 = 1.0;     // per-entry variance of the projected jamming channel
    double delta_e2 = 1.0;     // variance of the D2D-to-eavesdropper coefficient
    double log_base = 2.0;     // rate logarithm base

    void validate() const;  // throws DomainError
};

// rate of an SNR x: log_base(1 + x)
double rate_of(const SystemParams& p, double snr);

// mu expressed against natural-log rates; closed forms use this wherever mu
// multiplies a rate
double mu_effective(const SystemParams& p);

// [1 - (1-eps)^(1/K)]^(1/(1-N_T)) - 1: the per-eavesdropper SNR margin at
// which the outage constraint is tight
double outage_margin(const SystemParams& p);

}  // namespace wpd2d
