#include "wpd2d/equilibrium.hpp"

#include "wpd2d/errors.hpp"

namespace wpd2d {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::energy_trading: return "energy_trading";
        case Scheme::non_energy_trading: return "non_energy_trading";
        case Scheme::social_welfare: return "social_welfare";
    }
    return "unknown";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "energy_trading") return Scheme::energy_trading;
    if (name == "non_energy_trading") return Scheme::non_energy_trading;
    if (name == "social_welfare") return Scheme::social_welfare;
    throw ConfigError("unknown scheme: " + name);
}

}  // namespace wpd2d
