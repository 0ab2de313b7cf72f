#pragma once

#include <array>
#include <functional>
#include <optional>

namespace wpd2d::numerics {

struct OracleReport {
    double argmax = 0.0;
    double value = 0.0;
    double grid_step = 0.0;
    bool refined = false;  // golden-section strictly improved on the grid point
};

// Larger real root of a2 x^2 + a1 x + a0, computed via the q-form to avoid
// cancellation. nullopt when the discriminant is negative.
std::optional<double> solve_quadratic_positive(double a2, double a1, double a0);

// All real roots of x^3 + b x + c. Returns the count; roots are Newton-polished.
int depressed_cubic_real_roots(double b, double c, std::array<double, 3>& roots);

// Positive real root of x^3 + b x + c. With several positive roots the
// objective (when given) breaks the tie, otherwise the largest wins. The
// returned root always satisfies |r^3 + b r + c| <= 1e-8 * max(1, |c|).
double solve_depressed_cubic_positive(
    double b, double c,
    const std::function<double(double)>& objective = nullptr);

// Crossing of an increasing f and a decreasing g on [lo, hi].
// Requires f(lo) < g(lo) and f(hi) > g(hi), else BracketError.
double bisect_increasing_decreasing(const std::function<double(double)>& f,
                                    const std::function<double(double)>& g,
                                    double lo, double hi, double tol = 1e-9);

// Coarse midpoint grid over (lo, hi), lowest-index tie-break, then
// golden-section refinement inside the bracketing cell. The refined point is
// kept only when it strictly beats the grid argmax, so plateaus resolve to the
// grid tie-break. Deterministic.
OracleReport grid_refine_maximize(const std::function<double(double)>& objective,
                                  double lo, double hi, int coarse_n, double tol);

}  // namespace wpd2d::numerics
