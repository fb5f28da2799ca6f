#include "eiko/kinetic.hpp"

#include "eiko/util.hpp"
#include "eiko/weak.hpp"

namespace eiko {

KineticSlice chi(const GridField2& u, const Vec2& xi) {
    KineticSlice s;
    s.xi = xi;
    s.spec = u.spec;
    s.indicator = ((u.values.col(0) * xi.x() + u.values.col(1) * xi.y()) > 0.0).cast<double>();
    return s;
}

GridField2 average_reconstruct(const GridField2& u, const DirectionFan& fan) {
    if (fan.n < 1) throw ValidationError("direction fan needs at least one direction");
    GridField2 out;
    out.spec = u.spec;
    out.values = Eigen::ArrayX2d::Zero(u.values.rows(), 2);
    out.unit = false;
    const double wgt = 0.5 * 2.0 * std::numbers::pi / fan.n;
    for (int j = 0; j < fan.n; ++j) {
        Vec2 xi = fan.direction(j);
        Eigen::ArrayXd ind =
            ((u.values.col(0) * xi.x() + u.values.col(1) * xi.y()) > 0.0).cast<double>();
        out.values.col(0) += wgt * xi.x() * ind;
        out.values.col(1) += wgt * xi.y() * ind;
    }
    return out;
}

ReconstructionReport reconstruction_error(const GridField2& u, const DirectionFan& fan) {
    GridField2 r = average_reconstruct(u, fan);
    Eigen::ArrayXd err = (r.values - u.values).matrix().rowwise().norm().array();
    ReconstructionReport rep;
    rep.n = fan.n;
    rep.max_error = err.maxCoeff();
    rep.l2_error = std::sqrt((err * err).sum() * u.spec.h * u.spec.h);
    return rep;
}

double kinetic_residual(const GridField2& u, const Vec2& xi, const TestBump& zeta) {
    KineticSlice s = chi(u, xi);
    Eigen::ArrayX2d nodal(s.indicator.size(), 2);
    nodal.col(0) = s.indicator * xi.x();
    nodal.col(1) = s.indicator * xi.y();
    // -int (xi chi) . grad(zeta) = -int chi (xi . grad zeta)
    return weak_divergence_pairing(u.spec, nodal, zeta);
}

} // namespace eiko
