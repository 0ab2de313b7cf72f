#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "wpd2d/params.hpp"

namespace wpd2d {

using cvec = std::vector<std::complex<double>>;

// Per-entry variances for the sampled channels. The closed forms never see
// these; they only shape the random draws.
struct ChannelVariances {
    double h_var = 1.0;   // BS -> D2D transmitter, per antenna
    double hs_var = 1.0;  // D2D transmitter -> D2D receiver
};

struct ChannelRealization {
    cvec h;                     // BS -> D2D transmitter
    double h_norm2 = 0.0;       // ||h||^2
    double h_s_abs2 = 0.0;      // |h_s|^2
    cvec g_s;                   // BS -> D2D receiver
    std::uint64_t rng_seed = 0;
};

// Deterministic for a fixed (params, seed); i.i.d. circularly-symmetric
// complex Gaussian entries.
ChannelRealization sample_channels(const SystemParams& p, std::uint64_t seed,
                                   const ChannelVariances& var = {});

// Orthonormal basis of the null space of g_s; the jamming beam lives in its
// column span so the D2D receiver sees none of it.
struct JammingBasis {
    std::vector<cvec> t_matrix;  // n_t - 1 columns of length n_t

    std::size_t rows() const { return t_matrix.empty() ? 0 : t_matrix.front().size(); }
    std::size_t cols() const { return t_matrix.size(); }
};

JammingBasis null_space_basis(const cvec& g_s);  // throws ZeroVector

// Energy captured during the charging phase of a unit block
double harvested_energy(const SystemParams& p, const ChannelRealization& chan,
                        double theta, double p_bs);

// Largest D2D transmit power sustainable through the remaining 1-theta of the
// block
double max_d2d_power(const SystemParams& p, const ChannelRealization& chan,
                     double theta, double p_bs);

}  // namespace wpd2d
