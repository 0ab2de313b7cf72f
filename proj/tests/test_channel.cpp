#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "wpd2d/channel.hpp"
#include "wpd2d/errors.hpp"
#include "wpd2d/rng.hpp"

using namespace wpd2d;

namespace {

ChannelRealization make_channel(double h_norm2, double h_s_abs2, int n_t = 5) {
    ChannelRealization chan;
    chan.h.assign(n_t, 0.0);
    chan.h[0] = std::sqrt(h_norm2);
    chan.h_norm2 = h_norm2;
    chan.h_s_abs2 = h_s_abs2;
    chan.g_s.assign(n_t, 0.0);
    chan.g_s[0] = 1.0;
    return chan;
}

std::complex<double> col_dot(const cvec& a, const cvec& b) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

}  // namespace

TEST_CASE("sampling is deterministic for a fixed seed") {
    SystemParams p;
    const auto a = sample_channels(p, 42);
    const auto b = sample_channels(p, 42);
    REQUIRE(a.h.size() == b.h.size());
    for (std::size_t i = 0; i < a.h.size(); ++i) {
        CHECK(a.h[i].real() == b.h[i].real());
        CHECK(a.h[i].imag() == b.h[i].imag());
        CHECK(a.g_s[i].real() == b.g_s[i].real());
        CHECK(a.g_s[i].imag() == b.g_s[i].imag());
    }
    CHECK(a.h_norm2 == b.h_norm2);
    CHECK(a.h_s_abs2 == b.h_s_abs2);
    CHECK(a.rng_seed == 42);
}

TEST_CASE("different seeds give different draws") {
    SystemParams p;
    const auto a = sample_channels(p, 1);
    const auto b = sample_channels(p, 2);
    CHECK(a.h[0] != b.h[0]);
}

TEST_CASE("stored norm matches the vector") {
    SystemParams p;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto chan = sample_channels(p, seed);
        double n2 = 0.0;
        for (const auto& x : chan.h) n2 += std::norm(x);
        CHECK(std::abs(chan.h_norm2 - n2) <= 1e-12 * std::max(1.0, n2));
        CHECK(chan.h_s_abs2 >= 0.0);
    }
}

TEST_CASE("mean of ||h||^2 over many draws matches the antenna count") {
    SystemParams p;
    p.n_t = 4;
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += sample_channels(p, i).h_norm2;
    const double mean = sum / n;
    // ||h||^2 is a sum of n_t unit-mean exponentials: mean n_t, variance n_t
    const double stderr_mean = std::sqrt(static_cast<double>(p.n_t) / n);
    CHECK(std::abs(mean - p.n_t) <= 3.0 * stderr_mean);
}

TEST_CASE("harvested energy and peak D2D power") {
    SystemParams p;
    p.xi = 0.8;
    const auto chan = make_channel(2.0, 1.0);

    CHECK(harvested_energy(p, chan, 0.5, 10.0) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(harvested_energy(p, chan, 0.5, 0.0) == 0.0);
    CHECK(max_d2d_power(p, chan, 0.5, 10.0) == doctest::Approx(16.0).epsilon(1e-12));

    // linear in theta
    const double e1 = harvested_energy(p, chan, 0.2, 10.0);
    const double e2 = harvested_energy(p, chan, 0.4, 10.0);
    const double e4 = harvested_energy(p, chan, 0.8, 10.0);
    CHECK(e2 / e1 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e4 / e1 == doctest::Approx(4.0).epsilon(1e-12));

    // definitional ratio and the pole toward theta = 1
    CHECK(max_d2d_power(p, chan, 0.5, 10.0) ==
          doctest::Approx(harvested_energy(p, chan, 0.5, 10.0) / 0.5));
    double prev = 0.0;
    for (double th : {0.9, 0.99, 0.999}) {
        const double v = max_d2d_power(p, chan, th, 10.0);
        CHECK(v > prev);
        prev = v;
    }

    CHECK_THROWS_AS(harvested_energy(p, chan, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(harvested_energy(p, chan, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(max_d2d_power(p, chan, -0.1, 1.0), DomainError);
}

TEST_CASE("energy beamforming form agrees with the norm form") {
    SystemParams p;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto chan = sample_channels(p, seed);
        cvec w(chan.h.size());
        const double norm = std::sqrt(chan.h_norm2);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = chan.h[i] / norm;
        double w_norm2 = 0.0;
        for (const auto& x : w) w_norm2 += std::norm(x);
        CHECK(std::abs(w_norm2 - 1.0) <= 1e-12);
        // received energy through the beam: |h . w^H|^2
        const double captured = std::norm(col_dot(w, chan.h));
        const double direct = harvested_energy(p, chan, 0.5, 10.0);
        const double via_beam = p.xi * 0.5 * 10.0 * captured;
        CHECK(std::abs(direct - via_beam) <= 1e-10 * std::max(1.0, direct));
    }
}

TEST_CASE("null-space basis on a coordinate axis") {
    cvec g(5, 0.0);
    g[0] = 1.0;
    const auto basis = null_space_basis(g);
    REQUIRE(basis.cols() == 4);
    REQUIRE(basis.rows() == 5);
    for (std::size_t j = 0; j < 4; ++j) {
        // columns are the remaining coordinate axes up to sign
        for (std::size_t i = 0; i < 5; ++i) {
            const double expected = (i == j + 1) ? 1.0 : 0.0;
            CHECK(std::abs(std::abs(basis.t_matrix[j][i]) - expected) <= 1e-12);
        }
    }
}

TEST_CASE("two antennas leave a single orthogonal direction") {
    const double s = 1.0 / std::sqrt(2.0);
    cvec g = {s, s};
    const auto basis = null_space_basis(g);
    REQUIRE(basis.cols() == 1);
    const auto& t = basis.t_matrix[0];
    CHECK(std::abs(std::norm(t[0]) + std::norm(t[1]) - 1.0) <= 1e-12);
    // proportional to (1,-1)/sqrt(2): full overlap up to phase
    cvec ref = {s, -s};
    CHECK(std::abs(col_dot(ref, t)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("basis invariants hold across random channels") {
    SplitMix64 rng(2024);
    for (int n_t = 2; n_t <= 8; ++n_t) {
        for (int rep = 0; rep < 143; ++rep) {
            cvec g(n_t);
            for (auto& x : g) x = rng.next_cgauss(1.0);
            const auto basis = null_space_basis(g);
            REQUIRE(basis.cols() == static_cast<std::size_t>(n_t - 1));
            for (std::size_t j = 0; j < basis.cols(); ++j) {
                // orthonormal columns
                for (std::size_t k = j; k < basis.cols(); ++k) {
                    const auto ip = col_dot(basis.t_matrix[j], basis.t_matrix[k]);
                    const double expected = j == k ? 1.0 : 0.0;
                    CHECK(std::abs(ip - expected) <= 1e-10);
                }
                // invisible to the receiver: g_s . t = 0 entrywise
                std::complex<double> row = 0.0;
                for (int i = 0; i < n_t; ++i) row += g[i] * basis.t_matrix[j][i];
                CHECK(std::abs(row) <= 1e-10);
            }
        }
    }
}

TEST_CASE("zero vector is rejected") {
    cvec g(4, 0.0);
    CHECK_THROWS_AS(null_space_basis(g), ZeroVector);
    g[2] = 1e-15;
    CHECK_THROWS_AS(null_space_basis(g), ZeroVector);
}

TEST_CASE("projection through the basis preserves the eavesdropper statistics") {
    // the outage model treats the projected jamming entries as i.i.d.
    // complex Gaussians with the original per-entry variance; verify both
    // moments empirically for one fixed basis
    SplitMix64 rng(909);
    cvec g_s(5);
    for (auto& x : g_s) x = rng.next_cgauss(1.0);
    const auto basis = null_space_basis(g_s);
    const double variance = 2.3;
    const int n_draws = 20000;

    std::vector<double> power(basis.cols(), 0.0);
    std::vector<std::complex<double>> cross(basis.cols() - 1, 0.0);
    for (int m = 0; m < n_draws; ++m) {
        cvec g_e(5);
        for (auto& x : g_e) x = rng.next_cgauss(variance);
        std::vector<std::complex<double>> y(basis.cols(), 0.0);
        for (std::size_t j = 0; j < basis.cols(); ++j) {
            for (std::size_t i = 0; i < 5; ++i) y[j] += g_e[i] * basis.t_matrix[j][i];
            power[j] += std::norm(y[j]);
        }
        for (std::size_t j = 0; j + 1 < basis.cols(); ++j) {
            cross[j] += y[j] * std::conj(y[j + 1]);
        }
    }
    const double stderr_pow = variance / std::sqrt(static_cast<double>(n_draws));
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        CHECK(std::abs(power[j] / n_draws - variance) <= 4.0 * stderr_pow);
    }
    for (std::size_t j = 0; j + 1 < basis.cols(); ++j) {
        CHECK(std::abs(cross[j]) / n_draws <= 4.0 * stderr_pow);
    }
}
