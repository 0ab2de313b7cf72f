#include "wpd2d/channel.hpp"

#include <cmath>

#include "wpd2d/errors.hpp"
#include "wpd2d/rng.hpp"

namespace wpd2d {

namespace {

double norm2(const cvec& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return s;
}

void check_theta(double theta) {
    if (!(theta > 0.0 && theta < 1.0)) {
        throw DomainError("theta must lie strictly inside (0,1)");
    }
}

}  // namespace

ChannelRealization sample_channels(const SystemParams& p, std::uint64_t seed,
                                   const ChannelVariances& var) {
    p.validate();
    if (!(var.h_var > 0.0 && var.hs_var > 0.0)) {
        throw DomainError("channel variances must be positive");
    }

    SplitMix64 rng(mix_seed(seed, 0x6368616e6eULL));  // stream tag: "chann"
    ChannelRealization chan;
    chan.rng_seed = seed;
    chan.h.reserve(p.n_t);
    for (int i = 0; i < p.n_t; ++i) chan.h.push_back(rng.next_cgauss(var.h_var));
    chan.h_norm2 = norm2(chan.h);
    chan.h_s_abs2 = std::norm(rng.next_cgauss(var.hs_var));
    chan.g_s.reserve(p.n_t);
    for (int i = 0; i < p.n_t; ++i) chan.g_s.push_back(rng.next_cgauss(1.0));
    return chan;
}

JammingBasis null_space_basis(const cvec& g_s) {
    const std::size_t n = g_s.size();
    const double g_norm = std::sqrt(norm2(g_s));
    if (!(g_norm > 1e-14)) throw ZeroVector("null_space_basis: g_s is numerically zero");
    if (n < 2) throw DomainError("null_space_basis: need at least two antennas");

    // Householder reflector H = I - 2 v v^H / ||v||^2 with v = u + s e_1,
    // u = conj(g_s)/||g_s||. H is unitary and maps u onto the first axis, so
    // its remaining columns are an orthonormal basis of the complement:
    // exactly the directions invisible to the D2D receiver.
    cvec u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = std::conj(g_s[i]) / g_norm;

    const double u0_abs = std::abs(u[0]);
    const std::complex<double> s = u0_abs > 0.0 ? u[0] / u0_abs : std::complex<double>(1.0, 0.0);

    cvec v = u;
    v[0] += s;
    const double v_norm2 = norm2(v);

    JammingBasis basis;
    basis.t_matrix.reserve(n - 1);
    for (std::size_t j = 1; j < n; ++j) {
        cvec col(n);
        // column j of H: e_j - 2 v conj(v_j) / ||v||^2
        const std::complex<double> scale = 2.0 * std::conj(v[j]) / v_norm2;
        for (std::size_t i = 0; i < n; ++i) col[i] = -scale * v[i];
        col[j] += 1.0;
        basis.t_matrix.push_back(std::move(col));
    }
    return basis;
}

double harvested_energy(const SystemParams& p, const ChannelRealization& chan,
                        double theta, double p_bs) {
    check_theta(theta);
    if (p_bs < 0.0) throw DomainError("p_bs must be nonnegative");
    return p.xi * theta * p_bs * chan.h_norm2;
}

double max_d2d_power(const SystemParams& p, const ChannelRealization& chan,
                     double theta, double p_bs) {
    return harvested_energy(p, chan, theta, p_bs) / (1.0 - theta);
}

}  // namespace wpd2d
