#include "eiko/weak.hpp"

#include <algorithm>
#include <cmath>

namespace eiko {

namespace {

// Cell range [ilo, ihi) x [jlo, jhi) covering supp(zeta).
struct CellBox {
    int ilo, ihi, jlo, jhi;
};

CellBox support_cells(const GridSpec& g, const TestBump& zeta) {
    int ilo = std::max(0, static_cast<int>(std::floor((zeta.center.x() - zeta.radius - g.x0) / g.h)));
    int jlo = std::max(0, static_cast<int>(std::floor((zeta.center.y() - zeta.radius - g.y0) / g.h)));
    int ihi = std::min(g.nx - 1, static_cast<int>(std::ceil((zeta.center.x() + zeta.radius - g.x0) / g.h)));
    int jhi = std::min(g.ny - 1, static_cast<int>(std::ceil((zeta.center.y() + zeta.radius - g.y0) / g.h)));
    return {ilo, ihi, jlo, jhi};
}

} // namespace

double weak_divergence_pairing(const GridSpec& g, const Eigen::ArrayX2d& nodal,
                               const TestBump& zeta) {
    zeta.require_inside(g);
    CellBox b = support_cells(g, zeta);
    double acc = 0.0;
    for (int j = b.jlo; j < b.jhi; ++j) {
        double rowacc = 0.0;
        for (int i = b.ilo; i < b.ihi; ++i) {
            Vec2 c{g.x0 + (i + 0.5) * g.h, g.y0 + (j + 0.5) * g.h};
            Vec2 gz = zeta.gradient(c);
            if (gz.isZero()) continue;
            std::int64_t n00 = g.index(i, j);
            std::int64_t n10 = n00 + 1;
            std::int64_t n01 = n00 + g.nx;
            std::int64_t n11 = n01 + 1;
            double f1 = 0.25 * (nodal(n00, 0) + nodal(n10, 0) + nodal(n01, 0) + nodal(n11, 0));
            double f2 = 0.25 * (nodal(n00, 1) + nodal(n10, 1) + nodal(n01, 1) + nodal(n11, 1));
            rowacc += f1 * gz.x() + f2 * gz.y();
        }
        acc += rowacc;
    }
    return -acc * g.h * g.h;
}

double divergence_weak(const GridField2& u, const TestBump& zeta) {
    return weak_divergence_pairing(u.spec, u.values, zeta);
}

double cell_integral(const GridSpec& g, const Eigen::ArrayXd& nodal) {
    double acc = 0.0;
    for (int j = 0; j + 1 < g.ny; ++j) {
        double rowacc = 0.0;
        for (int i = 0; i + 1 < g.nx; ++i) {
            std::int64_t n00 = g.index(i, j);
            rowacc += 0.25 * (nodal[n00] + nodal[n00 + 1] + nodal[n00 + g.nx] + nodal[n00 + g.nx + 1]);
        }
        acc += rowacc;
    }
    return acc * g.h * g.h;
}

} // namespace eiko
