#include "wpd2d/params.hpp"

#include <cmath>
#include <string>

#include "wpd2d/errors.hpp"

namespace wpd2d {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError("SystemParams: " + what);
}

}  // namespace

void SystemParams::validate() const {
    require(n_t >= 2, "n_t must be >= 2 (the jamming null space must be nonempty)");
    require(k_eves >= 1, "k_eves must be >= 1");
    require(xi > 0.0 && xi < 1.0, "xi must lie in (0,1)");
    require(eps_outage > 0.0 && eps_outage < 1.0, "eps_outage must lie in (0,1)");
    require(mu > 0.0, "mu must be positive");
    require(cost_a > 0.0, "cost_a must be positive");
    require(cost_b > 0.0, "cost_b must be positive");
    require(sigma_s2 > 0.0, "sigma_s2 must be positive");
    require(gamma_e2 > 0.0, "gamma_e2 must be positive");
    require(delta_e2 > 0.0, "delta_e2 must be positive");
    require(log_base > 1.0, "log_base must exceed 1");
}

double rate_of(const SystemParams& p, double snr) {
    return std::log1p(snr) / std::log(p.log_base);
}

double mu_effective(const SystemParams& p) {
    return p.mu / std::log(p.log_base);
}

double outage_margin(const SystemParams& p) {
    const double per_eve = 1.0 - std::pow(1.0 - p.eps_outage, 1.0 / p.k_eves);
    return std::pow(per_eve, 1.0 / (1.0 - p.n_t)) - 1.0;
}

}  // namespace wpd2d
