#ifndef EIKO_WEAK_HPP
#define EIKO_WEAK_HPP

#include "eiko/bump.hpp"
#include "eiko/grid.hpp"

namespace eiko {

/// Weak pairing -int F . grad(zeta) dx for a node-sampled vector field F.
/// Tensor-product midpoint rule: F averaged to cell centers bilinearly,
/// grad(zeta) evaluated analytically there. O(h^2) consistent.
double weak_divergence_pairing(const GridSpec& spec, const Eigen::ArrayX2d& nodal,
                               const TestBump& zeta);

/// -int u . grad(zeta) dx; the distributional divergence tested against zeta.
/// Requires supp(zeta) at distance >= 2h from the boundary.
double divergence_weak(const GridField2& u, const TestBump& zeta);

/// int of a node-sampled scalar against the same midpoint rule, restricted to
/// cells meeting supp(zeta) (g is multiplied by zeta pointwise beforehand by
/// the caller when needed).
double cell_integral(const GridSpec& spec, const Eigen::ArrayXd& nodal);

} // namespace eiko

#endif
