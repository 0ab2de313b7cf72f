#include "wpd2d/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "wpd2d/errors.hpp"

namespace wpd2d::numerics {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1/phi

double cubic_value(double b, double c, double x) { return (x * x + b) * x + c; }

// One and a half Newton steps cost nothing and clean up cbrt/trig rounding.
double polish_cubic_root(double b, double c, double x) {
    for (int i = 0; i < 2; ++i) {
        const double deriv = 3.0 * x * x + b;
        if (deriv == 0.0) break;
        const double step = cubic_value(b, c, x) / deriv;
        if (!std::isfinite(step)) break;
        x -= step;
    }
    return x;
}

}  // namespace

std::optional<double> solve_quadratic_positive(double a2, double a1, double a0) {
    if (!(a2 > 1e-300)) throw DegenerateLeading("quadratic leading coefficient too small");
    const double disc = a1 * a1 - 4.0 * a2 * a0;
    if (disc < 0.0) return std::nullopt;
    const double s = std::sqrt(disc);
    const double q = -0.5 * (a1 + std::copysign(s, a1));
    if (q == 0.0) return 0.0;  // a1 = 0 and a0 = 0: double root at the origin
    const double r1 = q / a2;
    const double r2 = a0 / q;
    return std::max(r1, r2);
}

int depressed_cubic_real_roots(double b, double c, std::array<double, 3>& roots) {
    const double delta = b * b * b / 27.0 + c * c / 4.0;
    if (delta > 0.0) {
        const double sd = std::sqrt(delta);
        const double u = std::cbrt(-0.5 * c + sd);
        const double v = std::cbrt(-0.5 * c - sd);
        roots[0] = polish_cubic_root(b, c, u + v);
        return 1;
    }
    if (delta == 0.0) {
        if (b == 0.0 && c == 0.0) {
            roots[0] = 0.0;
            return 1;
        }
        const double u = std::cbrt(-0.5 * c);
        roots[0] = polish_cubic_root(b, c, 2.0 * u);
        roots[1] = polish_cubic_root(b, c, -u);
        return 2;
    }
    // three distinct real roots; b < 0 here
    const double m = 2.0 * std::sqrt(-b / 3.0);
    const double arg = std::clamp(3.0 * c / (b * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
        roots[k] = polish_cubic_root(b, c, m * std::cos(phi - 2.0 * M_PI * k / 3.0));
    }
    return 3;
}

double solve_depressed_cubic_positive(double b, double c,
                                      const std::function<double(double)>& objective) {
    std::array<double, 3> roots{};
    const int n = depressed_cubic_real_roots(b, c, roots);

    double best = std::numeric_limits<double>::quiet_NaN();
    double best_score = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        if (!(roots[i] > 0.0)) continue;
        const double score = objective ? objective(roots[i]) : roots[i];
        if (std::isnan(best) || score > best_score) {
            best = roots[i];
            best_score = score;
        }
    }
    if (std::isnan(best)) {
        throw NoPositiveRoot("depressed cubic has no positive real root");
    }
    const double residual = std::abs(cubic_value(b, c, best));
    if (!(residual <= 1e-8 * std::max(1.0, std::abs(c)))) {
        throw NoPositiveRoot("cubic root failed its residual check");
    }
    return best;
}

double bisect_increasing_decreasing(const std::function<double(double)>& f,
                                    const std::function<double(double)>& g,
                                    double lo, double hi, double tol) {
    if (!(lo < hi)) throw BracketError("bisect: empty interval");
    if (!(f(lo) < g(lo)) || !(f(hi) > g(hi))) {
        throw BracketError("bisect: endpoints do not bracket a crossing");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double diff = f(mid) - g(mid);
        if (std::abs(diff) <= tol) return mid;
        if (diff < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

OracleReport grid_refine_maximize(const std::function<double(double)>& objective,
                                  double lo, double hi, int coarse_n, double tol) {
    if (!(lo < hi)) throw DomainError("grid_refine_maximize: empty interval");
    if (coarse_n < 3) throw DomainError("grid_refine_maximize: grid too coarse");

    // NaN (objective undefined there) loses against everything
    auto eval = [&](double x) {
        const double v = objective(x);
        return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
    };

    const double step = (hi - lo) / coarse_n;
    int best_i = -1;
    double best_x = lo;
    double best_f = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= coarse_n; ++i) {
        const double x = i == coarse_n ? hi : lo + i * step;
        const double fx = eval(x);
        if (fx > best_f) {  // strict: ties resolve to the lowest index
            best_i = i;
            best_x = x;
            best_f = fx;
        }
    }
    if (best_i < 0) throw DomainError("grid_refine_maximize: objective nowhere finite");

    // golden-section inside the bracketing cell
    double a = std::max(lo, best_x - step);
    double d = std::min(hi, best_x + step);
    tol = std::max(tol, 1e-15 * (hi - lo));
    double x1 = d - kInvPhi * (d - a);
    double x2 = a + kInvPhi * (d - a);
    double f1 = eval(x1);
    double f2 = eval(x2);
    double ref_x = f1 >= f2 ? x1 : x2;
    double ref_f = std::max(f1, f2);
    for (int iter = 0; iter < 200 && d - a > tol; ++iter) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (d - a);
            f2 = eval(x2);
        } else {
            d = x2;
            x2 = x1;
            f2 = f1;
            x1 = d - kInvPhi * (d - a);
            f1 = eval(x1);
        }
        const double cand_x = f1 >= f2 ? x1 : x2;
        const double cand_f = std::max(f1, f2);
        if (cand_f > ref_f) {
            ref_x = cand_x;
            ref_f = cand_f;
        }
    }

    OracleReport report;
    report.grid_step = step;
    if (ref_f > best_f) {
        report.argmax = ref_x;
        report.value = ref_f;
        report.refined = true;
    } else {
        // plateau or flat cell: keep the grid tie-break
        report.argmax = best_x;
        report.value = best_f;
        report.refined = false;
    }
    return report;
}

}  // namespace wpd2d::numerics
