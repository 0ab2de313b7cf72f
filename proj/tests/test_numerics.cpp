#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "wpd2d/errors.hpp"
#include "wpd2d/numerics.hpp"
#include "wpd2d/rng.hpp"

using namespace wpd2d;
using namespace wpd2d::numerics;

TEST_CASE("quadratic roots") {
    // x^2 + x - 4
    auto r = solve_quadratic_positive(1.0, 1.0, -4.0);
    REQUIRE(r.has_value());
    CHECK(*r == doctest::Approx((-1.0 + std::sqrt(17.0)) / 2.0).epsilon(1e-12));

    // perfect square
    r = solve_quadratic_positive(1.0, -2.0, 1.0);
    REQUIRE(r.has_value());
    CHECK(*r == doctest::Approx(1.0).epsilon(1e-12));

    // no real root
    CHECK(!solve_quadratic_positive(1.0, 0.0, 1.0).has_value());

    CHECK_THROWS_AS(solve_quadratic_positive(0.0, 1.0, 1.0), DegenerateLeading);
}

TEST_CASE("quadratic residual property") {
    SplitMix64 rng(31);
    auto lu = [&](double lo, double hi) {
        return lo * std::exp(rng.next_unit() * std::log(hi / lo));
    };
    int solved = 0;
    for (int i = 0; i < 1000; ++i) {
        const double a2 = lu(0.1, 10.0);
        const double a1 = lu(0.1, 10.0) * (rng.next() % 2 ? 1.0 : -1.0);
        const double a0 = lu(0.1, 10.0) * (rng.next() % 2 ? 1.0 : -1.0);
        const auto r = solve_quadratic_positive(a2, a1, a0);
        if (!r) continue;
        ++solved;
        const double res = std::abs((a2 * *r + a1) * *r + a0);
        CHECK(res <= 1e-8 * std::max(1.0, std::abs(a0)));
    }
    CHECK(solved > 500);
}

TEST_CASE("depressed cubic roots") {
    // three real roots {3, -1, -2}; the positive one is wanted
    CHECK(solve_depressed_cubic_positive(-7.0, -6.0) ==
          doctest::Approx(3.0).epsilon(1e-12));

    // pure cube
    CHECK(solve_depressed_cubic_positive(0.0, -8.0) ==
          doctest::Approx(2.0).epsilon(1e-12));

    // no positive real root
    CHECK_THROWS_AS(solve_depressed_cubic_positive(1.0, 1.0), NoPositiveRoot);
}

TEST_CASE("objective breaks ties between positive roots") {
    // roots {1, 2, -3}: two positive candidates
    auto prefer_two = [](double x) { return -(x - 2.0) * (x - 2.0); };
    CHECK(solve_depressed_cubic_positive(-7.0, 6.0, prefer_two) ==
          doctest::Approx(2.0).epsilon(1e-12));
    auto prefer_one = [](double x) { return -(x - 1.0) * (x - 1.0); };
    CHECK(solve_depressed_cubic_positive(-7.0, 6.0, prefer_one) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cubic residual property with negative constant term") {
    SplitMix64 rng(32);
    auto lu = [&](double lo, double hi) {
        return lo * std::exp(rng.next_unit() * std::log(hi / lo));
    };
    for (int i = 0; i < 1000; ++i) {
        const double b = lu(0.1, 10.0) * (rng.next() % 2 ? 1.0 : -1.0);
        const double c = -lu(0.1, 10.0);
        const double x = solve_depressed_cubic_positive(b, c);
        CHECK(x > 0.0);
        const double res = std::abs((x * x + b) * x + c);
        CHECK(res <= 1e-8 * std::max(1.0, std::abs(c)));
    }
}

TEST_CASE("bisection of increasing against decreasing") {
    auto id = [](double x) { return x; };
    auto mirror = [](double x) { return 1.0 - x; };
    CHECK(bisect_increasing_decreasing(id, mirror, 0.0, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-8));

    auto square = [](double x) { return x * x; };
    auto quarter = [](double) { return 0.25; };
    CHECK(bisect_increasing_decreasing(square, quarter, 0.0, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-8));

    CHECK_THROWS_AS(bisect_increasing_decreasing(mirror, id, 0.0, 1.0), BracketError);
}

TEST_CASE("grid refinement finds an interior maximum") {
    auto f = [](double x) { return -(x - 0.3) * (x - 0.3); };
    const auto rep = grid_refine_maximize(f, 0.0, 1.0, 2000, 1e-10);
    CHECK(std::abs(rep.argmax - 0.3) <= 1e-7);
    // value dominates the grid neighbours of the argmax
    CHECK(rep.value >= f(rep.argmax - rep.grid_step));
    CHECK(rep.value >= f(rep.argmax + rep.grid_step));
}

TEST_CASE("plateaus resolve to the lowest grid index") {
    auto f = [](double x) { return std::min(x, 0.4150001); };
    const auto rep = grid_refine_maximize(f, 0.0, 1.0, 1000, 1e-10);
    // first grid point on the plateau: ceil at the grid resolution
    const double step = 1.0 / 1000;
    const double expected = std::ceil(0.4150001 / step) * step;
    CHECK(rep.argmax == doctest::Approx(expected).epsilon(1e-12));
    CHECK(!rep.refined);
}

TEST_CASE("grid scan does not depend on evaluation order") {
    auto f = [](double x) { return std::sin(5.0 * x) - 0.2 * x; };
    const int n = 1500;
    const auto rep = grid_refine_maximize(f, 0.0, 2.0, n, 1e-10);

    // reduce the same grid in reverse order with the same tie-break
    const double step = 2.0 / n;
    int best_i = n;
    double best_f = f(2.0);
    for (int i = n - 1; i >= 0; --i) {
        const double fx = f(i * step);
        if (fx >= best_f) {  // scanning backwards, >= keeps the lowest index
            best_i = i;
            best_f = fx;
        }
    }
    const double grid_argmax = best_i == n ? 2.0 : best_i * step;
    CHECK(std::abs(rep.argmax - grid_argmax) <= step + 1e-12);
    CHECK(rep.value >= best_f);
}

TEST_CASE("undefined regions lose against finite values") {
    auto f = [](double x) {
        return x < 0.5 ? std::numeric_limits<double>::quiet_NaN() : -(x - 0.7) * (x - 0.7);
    };
    const auto rep = grid_refine_maximize(f, 0.0, 1.0, 1000, 1e-10);
    CHECK(std::abs(rep.argmax - 0.7) <= 1e-7);
}
