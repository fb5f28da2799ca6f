#include "eiko/grid.hpp"

#include <algorithm>
#include <cmath>

namespace eiko {

Window Window::from_rect(const GridSpec& g, double xlo, double ylo, double xhi, double yhi) {
    int i0 = static_cast<int>(std::ceil((xlo - g.x0) / g.h - 1e-12));
    int j0 = static_cast<int>(std::ceil((ylo - g.y0) / g.h - 1e-12));
    int i1 = static_cast<int>(std::floor((xhi - g.x0) / g.h + 1e-12));
    int j1 = static_cast<int>(std::floor((yhi - g.y0) / g.h + 1e-12));
    i0 = std::max(i0, 0);
    j0 = std::max(j0, 0);
    i1 = std::min(i1, g.nx - 1);
    j1 = std::min(j1, g.ny - 1);
    Window w{i0, j0, i1 - i0 + 1, j1 - j0 + 1};
    if (w.ni < 1 || w.nj < 1) throw ValidationError("window rectangle contains no grid nodes");
    return w;
}

Vec2 GridField2::interpolate(const Vec2& p) const {
    const GridSpec& g = spec;
    double fx = (p.x() - g.x0) / g.h;
    double fy = (p.y() - g.y0) / g.h;
    int i = std::clamp(static_cast<int>(std::floor(fx)), 0, g.nx - 2);
    int j = std::clamp(static_cast<int>(std::floor(fy)), 0, g.ny - 2);
    double tx = std::clamp(fx - i, 0.0, 1.0);
    double ty = std::clamp(fy - j, 0.0, 1.0);
    Vec2 v00 = at(i, j), v10 = at(i + 1, j), v01 = at(i, j + 1), v11 = at(i + 1, j + 1);
    return (1 - tx) * (1 - ty) * v00 + tx * (1 - ty) * v10 + (1 - tx) * ty * v01 + tx * ty * v11;
}

} // namespace eiko
