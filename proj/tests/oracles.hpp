// Test-only analytic oracles, independent of the library's quadrature paths.
#ifndef EIKO_TEST_ORACLES_HPP
#define EIKO_TEST_ORACLES_HPP

#include <cmath>
#include <functional>

#include "eiko/bump.hpp"
#include "eiko/generators.hpp"

namespace eiko::oracles {

/// Composite Simpson on [a, b] (n even).
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n = 20000) {
    if (n % 2) ++n;
    double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int k = 1; k < n; ++k) acc += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

/// int zeta(x1, c) dx1 along a horizontal line through the bump.
inline double bump_line_integral(const TestBump& z, double y_line, int n = 200000) {
    double a = z.center.x() - z.radius, b = z.center.x() + z.radius;
    return simpson([&](double x) { return z.value({x, y_line}); }, a, b, n);
}

/// Vortex field closed form (alpha = +1 unless stated).
inline Vec2 vortex_value(const Vec2& x, const Vec2& p = Vec2::Zero(), double alpha = 1.0) {
    Vec2 d = x - p;
    return alpha * Vec2{-d.y(), d.x()} / d.norm();
}

/// Grid spec centered on [-L, L]^2 with nx = ny = n (pre half-shift).
inline GridSpec centered_grid(int n, double L) {
    GridSpec g;
    g.nx = g.ny = n;
    g.h = 2.0 * L / (n - 1);
    g.x0 = g.y0 = -L;
    return g;
}

} // namespace eiko::oracles

#endif
