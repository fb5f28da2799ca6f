#ifndef EIKO_KINETIC_HPP
#define EIKO_KINETIC_HPP

#include <numbers>
#include <vector>

#include "eiko/bump.hpp"
#include "eiko/grid.hpp"

namespace eiko {

/// chi(., xi) for one direction: indicator of u(x).xi > 0 (ties map to 0).
struct KineticSlice {
    Vec2 xi;
    GridSpec spec;
    Eigen::ArrayXd indicator;  // 0/1 at nodes
};

/// Equispaced direction fan xi_j = e^{i(2pi j/N + offset)}; the default
/// offset pi/N keeps the fan off the axes and off the canonical tie sets.
struct DirectionFan {
    int n = 64;
    double offset = 0.0;

    static DirectionFan equispaced(int n) {
        return DirectionFan{n, std::numbers::pi / n};
    }
    Vec2 direction(int j) const {
        double a = 2.0 * std::numbers::pi * j / n + offset;
        return {std::cos(a), std::sin(a)};
    }
};

KineticSlice chi(const GridField2& u, const Vec2& xi);

/// Averaging formula u(x) = 1/2 int_{S^1} xi chi(x, xi) dxi as a Riemann sum
/// over the fan; max-norm error O(1/N) for unit fields.
GridField2 average_reconstruct(const GridField2& u, const DirectionFan& fan);

struct ReconstructionReport {
    int n;
    double max_error;
    double l2_error;
};
ReconstructionReport reconstruction_error(const GridField2& u, const DirectionFan& fan);

/// Weak kinetic residual -int chi(x, xi) xi . grad(zeta) dx. Equals
/// entropy_production(Phi^xi, u, zeta) to rounding.
double kinetic_residual(const GridField2& u, const Vec2& xi, const TestBump& zeta);

} // namespace eiko

#endif
