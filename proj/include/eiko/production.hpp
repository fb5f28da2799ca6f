#ifndef EIKO_PRODUCTION_HPP
#define EIKO_PRODUCTION_HPP

#include "eiko/bump.hpp"
#include "eiko/entropy.hpp"
#include "eiko/grid.hpp"

namespace eiko {

/// Entropy production tested against zeta: -int Phi(u(x)) . grad(zeta) dx,
/// with Phi composed at grid nodes and the fields-module midpoint quadrature.
double entropy_production(const Entropy& Phi, const GridField2& u, const TestBump& zeta);
double entropy_production(const ElementaryEntropy& Phi, const GridField2& u,
                          const TestBump& zeta);

struct ProductionDecomposition {
    double i_eps = 0;    // int zeta div[Psi(u_eps) (1-|u_eps|^2)]  (by parts)
    double ii_eps = 0;   // int zeta (1-|u_eps|^2) div[Psi(u_eps)]
    double total = 0;    // int zeta div[Phi_tilde(u_eps)]          (by parts)
    GridSpec subgrid;    // eps-interior grid the integrals live on
};

/// The I/II split of the mollified production. zeta must be supported in the
/// eps-interior (with the 2h quadrature margin); total = I - II up to
/// quadrature error, and total -> entropy_production as eps -> 0 for unit
/// fields.
ProductionDecomposition production_decomposition(const ExtendedEntropy& Phi,
                                                 const GridField2& u, double eps,
                                                 const TestBump& zeta);

} // namespace eiko

#endif
