#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wpd2d/channel.hpp"
#include "wpd2d/energy_trading.hpp"
#include "wpd2d/equilibrium.hpp"
#include "wpd2d/params.hpp"

namespace wpd2d::harness {

enum class SweepVariable { theta, xi, delta_e2, k_eves, mu };

const char* sweep_variable_name(SweepVariable v);
SweepVariable sweep_variable_from_name(const std::string& name);  // throws ConfigError

// Declarative 1-D sweep. Sweeping theta runs every scheme at that fixed
// split; for the other variables energy trading and social welfare optimize
// the split unless fixed_theta pins it, and non-energy trading always runs at
// fixed_theta (0.5 when unset).
struct SweepSpec {
    SweepVariable variable = SweepVariable::theta;
    std::vector<double> values;  // strictly increasing
    std::vector<Scheme> schemes;
    int n_channel_draws = 200;
    std::uint64_t base_seed = 1;
    std::optional<double> fixed_theta;

    void validate() const;  // throws ConfigError
};

struct QuantityStats {
    double mean = 0.0;
    double stddev = 0.0;  // sample stddev over channel draws
};

struct SweepRow {
    double value = 0.0;
    Scheme scheme = Scheme::energy_trading;
    QuantityStats u_leader, u_bs, welfare, payment, p_bs, p_s, theta_opt,
        secrecy_throughput;
    int n_ok = 0;
    int n_fail = 0;
    std::string status;  // "ok" or "<error>:<count>"
};

struct SweepResult {
    std::vector<SweepRow> rows;  // |values| x |schemes|, values-major
};

SystemParams override_variable(SystemParams p, SweepVariable v, double value);

// Outcome of one scheme solve under the sweep's split policy.
struct PointOutcome {
    bool ok = false;
    std::string error;
    EquilibriumPoint point;
    double throughput = 0.0;
};

PointOutcome solve_point(const SystemParams& p, const ChannelRealization& chan,
                         Scheme scheme, std::optional<double> fixed_theta,
                         energy_trading::ThetaMode mode);

SweepResult run_sweep(const SweepSpec& spec, const SystemParams& base,
                      const ChannelVariances& var = {},
                      energy_trading::ThetaMode mode = energy_trading::ThetaMode::nested);

void write_csv(const SweepResult& result, std::ostream& out);

}  // namespace wpd2d::harness
