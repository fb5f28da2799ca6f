#ifndef EIKO_MOLLIFIER_HPP
#define EIKO_MOLLIFIER_HPP

#include "eiko/grid.hpp"

namespace eiko {

/// Standard bump mollifier rho(x) = C exp(-1/(1-|x|^2)) on |x| < 1,
/// normalized to unit mass, in its 2-D and 1-D versions. The rescaled
/// family is rho_eps(x) = rho(x/eps)/eps^d with supp rho_eps inside B_eps.
///
/// Discrete convolutions use quadrature weights normalized to unit mass on
/// the lattice, so the discrete kernel mass is 1 exactly for every
/// resolvable eps (raw midpoint mass carries an O(10^-3) error at eps = 4h,
/// which would swamp the 1e-6 normalization contract).
struct Mollifier {
    double eps;

    explicit Mollifier(double eps_) : eps(eps_) {
        if (!(eps > 0)) throw ValidationError("mollifier eps must be > 0");
    }

    /// Unnormalized profile exp(-1/(1-r^2)) for r = |x| (d-independent shape).
    static double shape(double r2) {
        if (r2 >= 1.0 - 1e-14) return 0.0;
        return std::exp(-1.0 / (1.0 - r2));
    }
    /// d shape / d(x_j) factor: shape'(r)/r * x_j with
    /// shape'(r) = shape(r) * (-2r/(1-r^2)^2).
    static Vec2 shape_gradient(const Vec2& x) {
        double r2 = x.squaredNorm();
        if (r2 >= 1.0 - 1e-14) return Vec2::Zero();
        double t = 1.0 - r2;
        return shape(r2) * (-2.0 / (t * t)) * x;
    }

    /// Normalization constants of the continuum profiles (unit mass),
    /// and sup norms used by the commutator bounds.
    static double norm_const_2d();   // C with C * int shape = 1 over R^2
    static double norm_const_1d();
    static double sup_2d();          // ||rho||_inf (2-D, normalized)
    static double sup_grad_2d();     // ||grad rho||_inf (2-D, normalized)

    double value_2d(const Vec2& z) const {
        return norm_const_2d() * shape(z.squaredNorm() / (eps * eps)) / (eps * eps);
    }
    double value_1d(double s) const {
        return norm_const_1d() * shape(s * s / (eps * eps)) / eps;
    }
};

/// Discrete kernel on lattice offsets |z| < eps with unit-mass weights,
/// shared by mollify/defect. Offsets are (k, l) * h.
struct DiscreteKernel2 {
    int reach;                       // K: offsets k, l in [-K, K]
    Eigen::ArrayXXd weights;         // (2K+1) x (2K+1), sums to 1
    double raw_mass;                 // un-normalized midpoint mass of rho_eps

    static DiscreteKernel2 build(double eps, double h);
};

/// u * rho_eps restricted to the eps-interior subgrid. eps must be >= 2h.
GridField2 mollify(const GridField2& u, double eps);

/// 1 - |u_eps|^2 in commutator form: |u|^2 * rho_eps - |u * rho_eps|^2,
/// on the eps-interior subgrid. Nonnegative by construction for any field.
GridScalar defect(const GridField2& u, double eps);

/// Same quantity by the direct double-convolution form
/// (1/2) sum_{z,w} |u(x-z) - u(x-w)|^2 w_z w_w; used as the independent
/// route of the commutator identity check. O(K^4) per node - keep grids small.
GridScalar defect_double_convolution(const GridField2& u, double eps);

/// Partial derivative d_j u_eps computed by differentiating the kernel.
GridField2 mollify_derivative(const GridField2& u, double eps, int j);

} // namespace eiko

#endif
