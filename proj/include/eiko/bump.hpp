#ifndef EIKO_BUMP_HPP
#define EIKO_BUMP_HPP

#include "eiko/grid.hpp"

namespace eiko {

/// Compactly supported radial bump
///   zeta(x) = A exp(-1 / (1 - |x-c|^2/R^2))   for |x-c| < R, else 0,
/// with analytic gradient. Supports of weak pairings must stay >= 2h
/// inside the field domain.
struct TestBump {
    Vec2 center{0.0, 0.0};
    double radius = 1.0;
    double amplitude = 1.0;

    double value(const Vec2& p) const {
        double s = (p - center).squaredNorm() / (radius * radius);
        if (s >= 1.0 - 1e-14) return 0.0;
        return amplitude * std::exp(-1.0 / (1.0 - s));
    }

    Vec2 gradient(const Vec2& p) const {
        double s = (p - center).squaredNorm() / (radius * radius);
        if (s >= 1.0 - 1e-14) return Vec2::Zero();
        double t = 1.0 - s;
        double f = -amplitude * std::exp(-1.0 / t) / (t * t);
        return f * 2.0 * (p - center) / (radius * radius);
    }

    /// Closed support strictly inside the domain, with the 2h quadrature margin.
    void require_inside(const GridSpec& g, double margin_cells = 2.0) const {
        double m = margin_cells * g.h;
        if (center.x() - radius < g.x0 + m || center.x() + radius > g.xmax() - m ||
            center.y() - radius < g.y0 + m || center.y() + radius > g.ymax() - m)
            throw ValidationError("test bump support overflows the field domain");
    }
};

} // namespace eiko

#endif
