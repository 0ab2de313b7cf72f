#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

namespace wpd2d {

// splitmix64 (Steele/Lea/Flood). Construction is two arithmetic ops, so every
// Monte-Carlo trial gets its own stream and estimates are independent of how
// trials are partitioned across blocks or threads.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform on (0,1]; never 0 so log() stays finite
    double next_unit() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // standard normal pair (Box-Muller)
    std::pair<double, double> next_gaussian_pair() {
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * M_PI * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    // circularly-symmetric complex Gaussian with E|x|^2 = variance
    std::complex<double> next_cgauss(double variance) {
        const auto [re, im] = next_gaussian_pair();
        const double s = std::sqrt(0.5 * variance);
        return {re * s, im * s};
    }

  private:
    std::uint64_t state_;
};

// Full-avalanche combine for deriving substream seeds.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a * 0x9e3779b97f4a7c15ULL + b + 0x632be59bd9b4e019ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix_seed(mix_seed(a, b), c);
}

}  // namespace wpd2d
