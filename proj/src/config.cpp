#include "wpd2d/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "wpd2d/errors.hpp"

namespace wpd2d::harness {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + value);
    }
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value for '" + key + "': " + value);
    }
}

}  // namespace

KeyValues parse_config_text(const std::string& text) {
    KeyValues kv;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": empty key or value");
        }
        if (!kv.emplace(key, value).second) {
            throw ConfigError("config: duplicate key '" + key + "'");
        }
    }
    return kv;
}

KeyValues load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

RunConfig apply_config(const KeyValues& kv, RunConfig cfg) {
    for (const auto& [key, value] : kv) {
        if (key == "n_t") {
            cfg.params.n_t = static_cast<int>(parse_long(key, value));
        } else if (key == "k_eves") {
            cfg.params.k_eves = static_cast<int>(parse_long(key, value));
        } else if (key == "xi") {
            cfg.params.xi = parse_double(key, value);
        } else if (key == "eps_outage") {
            cfg.params.eps_outage = parse_double(key, value);
        } else if (key == "mu") {
            cfg.params.mu = parse_double(key, value);
        } else if (key == "cost_a") {
            cfg.params.cost_a = parse_double(key, value);
        } else if (key == "cost_b") {
            cfg.params.cost_b = parse_double(key, value);
        } else if (key == "sigma_s2") {
            cfg.params.sigma_s2 = parse_double(key, value);
        } else if (key == "gamma_e2") {
            cfg.params.gamma_e2 = parse_double(key, value);
        } else if (key == "delta_e2") {
            cfg.params.delta_e2 = parse_double(key, value);
        } else if (key == "log_base") {
            cfg.params.log_base = parse_double(key, value);
        } else if (key == "h_var") {
            cfg.variances.h_var = parse_double(key, value);
        } else if (key == "hs_var") {
            cfg.variances.hs_var = parse_double(key, value);
        } else if (key == "et_theta_mode") {
            if (value == "nested") {
                cfg.et_theta_mode = energy_trading::ThetaMode::nested;
            } else if (value == "frozen_lambda") {
                cfg.et_theta_mode = energy_trading::ThetaMode::frozen_lambda;
            } else {
                throw ConfigError("config: et_theta_mode must be nested or frozen_lambda");
            }
        } else if (key == "variable") {
            cfg.sweep.variable = sweep_variable_from_name(value);
            cfg.has_sweep = true;
        } else if (key == "values") {
            cfg.sweep.values.clear();
            for (const auto& item : split(value, ',')) {
                cfg.sweep.values.push_back(parse_double(key, item));
            }
            cfg.has_sweep = true;
        } else if (key == "schemes") {
            cfg.sweep.schemes.clear();
            for (const auto& item : split(value, ',')) {
                cfg.sweep.schemes.push_back(scheme_from_name(item));
            }
            cfg.has_sweep = true;
        } else if (key == "n_channel_draws") {
            cfg.sweep.n_channel_draws = static_cast<int>(parse_long(key, value));
            cfg.has_sweep = true;
        } else if (key == "base_seed") {
            cfg.sweep.base_seed = static_cast<std::uint64_t>(parse_long(key, value));
            cfg.has_sweep = true;
        } else if (key == "fixed_theta") {
            cfg.sweep.fixed_theta = parse_double(key, value);
            cfg.has_sweep = true;
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }
    try {
        cfg.params.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

}  // namespace wpd2d::harness
