#include "wpd2d/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "wpd2d/errors.hpp"
#include "wpd2d/non_energy_trading.hpp"
#include "wpd2d/secrecy.hpp"
#include "wpd2d/social_welfare.hpp"

namespace wpd2d::harness {

namespace {

constexpr double kDefaultFixedTheta = 0.5;

struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    void add(double x) {
        sum += x;
        sum_sq += x * x;
    }
    QuantityStats stats(int n) const {
        QuantityStats s;
        if (n <= 0) return s;
        s.mean = sum / n;
        if (n >= 2) {
            const double var = (sum_sq - sum * sum / n) / (n - 1);
            s.stddev = var > 0.0 ? std::sqrt(var) : 0.0;
        }
        return s;
    }
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

const char* sweep_variable_name(SweepVariable v) {
    switch (v) {
        case SweepVariable::theta: return "theta";
        case SweepVariable::xi: return "xi";
        case SweepVariable::delta_e2: return "delta_e2";
        case SweepVariable::k_eves: return "k_eves";
        case SweepVariable::mu: return "mu";
    }
    return "unknown";
}

SweepVariable sweep_variable_from_name(const std::string& name) {
    if (name == "theta") return SweepVariable::theta;
    if (name == "xi") return SweepVariable::xi;
    if (name == "delta_e2") return SweepVariable::delta_e2;
    if (name == "k_eves") return SweepVariable::k_eves;
    if (name == "mu") return SweepVariable::mu;
    throw ConfigError("unknown sweep variable: " + name);
}

void SweepSpec::validate() const {
    if (values.empty()) throw ConfigError("sweep: values must be nonempty");
    if (schemes.empty()) throw ConfigError("sweep: schemes must be nonempty");
    if (n_channel_draws < 1) throw ConfigError("sweep: n_channel_draws must be >= 1");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) {
            throw ConfigError("sweep: values must be strictly increasing");
        }
    }
    for (double v : values) {
        switch (variable) {
            case SweepVariable::theta:
                if (!(v > 0.0 && v < 1.0)) throw ConfigError("sweep: theta values must lie in (0,1)");
                break;
            case SweepVariable::xi:
                if (!(v > 0.0 && v < 1.0)) throw ConfigError("sweep: xi values must lie in (0,1)");
                break;
            case SweepVariable::delta_e2:
                if (!(v > 0.0)) throw ConfigError("sweep: delta_e2 values must be positive");
                break;
            case SweepVariable::mu:
                if (!(v > 0.0)) throw ConfigError("sweep: mu values must be positive");
                break;
            case SweepVariable::k_eves:
                if (!(v >= 1.0) || std::abs(v - std::round(v)) > 1e-9) {
                    throw ConfigError("sweep: k_eves values must be integers >= 1");
                }
                break;
        }
    }
    if (fixed_theta && !(*fixed_theta > 0.0 && *fixed_theta < 1.0)) {
        throw ConfigError("sweep: fixed_theta must lie in (0,1)");
    }
}

SystemParams override_variable(SystemParams p, SweepVariable v, double value) {
    switch (v) {
        case SweepVariable::theta: break;  // split is a decision, not a parameter
        case SweepVariable::xi: p.xi = value; break;
        case SweepVariable::delta_e2: p.delta_e2 = value; break;
        case SweepVariable::k_eves: p.k_eves = static_cast<int>(std::llround(value)); break;
        case SweepVariable::mu: p.mu = value; break;
    }
    return p;
}

PointOutcome solve_point(const SystemParams& p, const ChannelRealization& chan,
                         Scheme scheme, std::optional<double> fixed_theta,
                         energy_trading::ThetaMode mode) {
    PointOutcome out;
    try {
        switch (scheme) {
            case Scheme::energy_trading:
                out.point = fixed_theta
                                ? energy_trading::solve_fixed_theta(p, chan, *fixed_theta)
                                : energy_trading::solve(p, chan, mode);
                break;
            case Scheme::social_welfare:
                out.point = fixed_theta
                                ? social_welfare::solve_fixed_theta(p, chan, *fixed_theta)
                                : social_welfare::solve(p, chan);
                break;
            case Scheme::non_energy_trading:
                out.point = non_energy_trading::solve(
                    p, chan, fixed_theta.value_or(kDefaultFixedTheta));
                break;
        }
        const secrecy::SecrecyPoint sp{out.point.p_s, out.point.p_bs, out.point.rho_e,
                                       out.point.theta};
        out.throughput = secrecy::secrecy_throughput(p, chan, sp);
        out.ok = true;
    } catch (const NoPositiveSecrecy&) {
        out.error = "no_positive_secrecy";
    } catch (const Error& e) {
        out.error = std::string("error: ") + e.what();
    }
    return out;
}

SweepResult run_sweep(const SweepSpec& spec, const SystemParams& base,
                      const ChannelVariances& var, energy_trading::ThetaMode mode) {
    spec.validate();
    base.validate();

    SweepResult result;
    result.rows.reserve(spec.values.size() * spec.schemes.size());

    for (double value : spec.values) {
        const SystemParams p = override_variable(base, spec.variable, value);
        p.validate();
        const std::optional<double> fixed =
            spec.variable == SweepVariable::theta ? std::optional<double>(value)
                                                  : spec.fixed_theta;
        for (Scheme scheme : spec.schemes) {
            SweepRow row;
            row.value = value;
            row.scheme = scheme;
            Accumulator u_leader, u_bs, welfare, payment, p_bs, p_s, theta_opt, throughput;
            std::map<std::string, int> errors;
            for (int i = 0; i < spec.n_channel_draws; ++i) {
                const auto chan = sample_channels(p, spec.base_seed + i, var);
                const auto outcome = solve_point(p, chan, scheme, fixed, mode);
                if (!outcome.ok) {
                    ++row.n_fail;
                    ++errors[outcome.error];
                    continue;
                }
                ++row.n_ok;
                u_leader.add(outcome.point.u_leader);
                u_bs.add(outcome.point.u_bs);
                welfare.add(outcome.point.diagnostics.welfare);
                payment.add(outcome.point.payment);
                p_bs.add(outcome.point.p_bs);
                p_s.add(outcome.point.p_s);
                theta_opt.add(outcome.point.theta);
                throughput.add(outcome.throughput);
            }
            row.u_leader = u_leader.stats(row.n_ok);
            row.u_bs = u_bs.stats(row.n_ok);
            row.welfare = welfare.stats(row.n_ok);
            row.payment = payment.stats(row.n_ok);
            row.p_bs = p_bs.stats(row.n_ok);
            row.p_s = p_s.stats(row.n_ok);
            row.theta_opt = theta_opt.stats(row.n_ok);
            row.secrecy_throughput = throughput.stats(row.n_ok);
            if (errors.empty()) {
                row.status = "ok";
            } else {
                std::string status;
                for (const auto& [what, count] : errors) {
                    if (!status.empty()) status += ";";
                    status += what + ":" + std::to_string(count);
                }
                row.status = status;
            }
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

void write_csv(const SweepResult& result, std::ostream& out) {
    out << "value,scheme,u_leader_mean,u_leader_std,u_bs_mean,u_bs_std,"
           "welfare_mean,welfare_std,payment_mean,payment_std,p_bs_mean,p_bs_std,"
           "p_s_mean,p_s_std,theta_opt_mean,theta_opt_std,"
           "secrecy_throughput_mean,secrecy_throughput_std,n_ok,status\n";
    for (const auto& row : result.rows) {
        out << format_double(row.value) << ',' << scheme_name(row.scheme);
        for (const auto* q : {&row.u_leader, &row.u_bs, &row.welfare, &row.payment,
                              &row.p_bs, &row.p_s, &row.theta_opt,
                              &row.secrecy_throughput}) {
            out << ',' << format_double(q->mean) << ',' << format_double(q->stddev);
        }
        out << ',' << row.n_ok << ',' << row.status << '\n';
    }
}

}  // namespace wpd2d::harness
