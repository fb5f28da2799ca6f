#include "eiko/production.hpp"

#include "eiko/mollifier.hpp"
#include "eiko/weak.hpp"

namespace eiko {

namespace {

template <class Compose>
Eigen::ArrayX2d compose_nodes(const GridField2& u, Compose&& f) {
    Eigen::ArrayX2d out(u.values.rows(), 2);
    for (std::int64_t n = 0; n < u.values.rows(); ++n) {
        Vec2 v = f(Vec2(u.values(n, 0), u.values(n, 1)));
        out(n, 0) = v.x();
        out(n, 1) = v.y();
    }
    return out;
}

} // namespace

double entropy_production(const Entropy& Phi, const GridField2& u, const TestBump& zeta) {
    auto nodal = compose_nodes(u, [&](const Vec2& z) { return Phi.value(z); });
    return weak_divergence_pairing(u.spec, nodal, zeta);
}

double entropy_production(const ElementaryEntropy& Phi, const GridField2& u,
                          const TestBump& zeta) {
    auto nodal = compose_nodes(u, [&](const Vec2& z) { return Phi.value(z); });
    return weak_divergence_pairing(u.spec, nodal, zeta);
}

ProductionDecomposition production_decomposition(const ExtendedEntropy& Phi,
                                                 const GridField2& u, double eps,
                                                 const TestBump& zeta) {
    GridField2 ue = mollify(u, eps);
    GridScalar d = defect(u, eps);  // = 1 - |u_eps|^2 exactly for unit fields
    const GridSpec& g = ue.spec;
    zeta.require_inside(g);

    ProductionDecomposition out;
    out.subgrid = g;

    // total = -int Phi_tilde(u_eps) . grad(zeta)
    auto phit = compose_nodes(ue, [&](const Vec2& z) { return Phi.value(z); });
    out.total = weak_divergence_pairing(g, phit, zeta);

    // I = -int [Psi(u_eps) (1-|u_eps|^2)] . grad(zeta)
    Eigen::ArrayX2d psid(g.count(), 2);
    Eigen::ArrayX2d psiv(g.count(), 2);
    for (std::int64_t n = 0; n < g.count(); ++n) {
        Vec2 p = Phi.psi(Vec2(ue.values(n, 0), ue.values(n, 1)));
        psiv(n, 0) = p.x();
        psiv(n, 1) = p.y();
        psid(n, 0) = p.x() * d.values[n];
        psid(n, 1) = p.y() * d.values[n];
    }
    out.i_eps = weak_divergence_pairing(g, psid, zeta);

    // II = int zeta (1-|u_eps|^2) div[Psi(u_eps)], centered differences on the
    // composed field (one-sided at the subgrid edge, where zeta vanishes)
    Eigen::ArrayXd integrand(g.count());
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            auto ddx = [&](int comp) {
                if (i == 0) return (psiv(g.index(1, j), comp) - psiv(g.index(0, j), comp)) / g.h;
                if (i == g.nx - 1)
                    return (psiv(g.index(i, j), comp) - psiv(g.index(i - 1, j), comp)) / g.h;
                return (psiv(g.index(i + 1, j), comp) - psiv(g.index(i - 1, j), comp)) /
                       (2 * g.h);
            };
            auto ddy = [&](int comp) {
                if (j == 0) return (psiv(g.index(i, 1), comp) - psiv(g.index(i, 0), comp)) / g.h;
                if (j == g.ny - 1)
                    return (psiv(g.index(i, j), comp) - psiv(g.index(i, j - 1), comp)) / g.h;
                return (psiv(g.index(i, j + 1), comp) - psiv(g.index(i, j - 1), comp)) /
                       (2 * g.h);
            };
            double div = ddx(0) + ddy(1);
            std::int64_t n = g.index(i, j);
            integrand[n] = zeta.value(g.node(i, j)) * d.values[n] * div;
        }
    out.ii_eps = cell_integral(g, integrand);
    return out;
}

} // namespace eiko
