#pragma once

#include <string>

namespace wpd2d {

enum class Scheme { energy_trading, non_energy_trading, social_welfare };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);  // throws ConfigError

struct Diagnostics {
    double stationarity_residual = 0.0;  // first-order condition at the solution
    double outage_gap = 0.0;             // |p_out - eps| at the returned point
    double welfare = 0.0;                // joint utility at the returned point
    bool no_trade = false;               // price at/above shutdown, zero power traded
    bool negative_leader_utility = false;
};

// A solved operating point of one scheme.
struct EquilibriumPoint {
    double theta = 0.0;
    double lambda_price = 0.0;
    double p_bs = 0.0;
    double p_s = 0.0;
    double rho_e = 0.0;
    double u_leader = 0.0;  // D2D-side utility
    double u_bs = 0.0;      // BS-side utility
    double payment = 0.0;   // energy payment lambda * theta * p_bs * ||h||^2
    Scheme scheme_tag = Scheme::energy_trading;
    Diagnostics diagnostics;
};

}  // namespace wpd2d
