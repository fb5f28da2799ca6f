#ifndef EIKO_GRID_HPP
#define EIKO_GRID_HPP

#include <Eigen/Dense>
#include <string>

#include "eiko/errors.hpp"

namespace eiko {

using Vec2 = Eigen::Vector2d;

/// Uniform node-centered rectangular grid. Node (i, j) sits at
/// (x0 + i h, y0 + j h) with i fast, j slow (row-major, y outer).
struct GridSpec {
    int nx = 0;
    int ny = 0;
    double x0 = 0.0;
    double y0 = 0.0;
    double h = 0.0;

    void validate() const {
        if (nx < 2 || ny < 2) throw ValidationError("grid spec: nx, ny must be >= 2");
        if (!(h > 0.0)) throw ValidationError("grid spec: h must be > 0");
    }

    std::int64_t count() const { return std::int64_t(nx) * ny; }
    std::int64_t index(int i, int j) const { return std::int64_t(j) * nx + i; }
    double x(int i) const { return x0 + i * h; }
    double y(int j) const { return y0 + j * h; }
    Vec2 node(int i, int j) const { return {x(i), y(j)}; }
    double xmax() const { return x0 + (nx - 1) * h; }
    double ymax() const { return y0 + (ny - 1) * h; }

    bool contains(const Vec2& p) const {
        return p.x() >= x0 && p.x() <= xmax() && p.y() >= y0 && p.y() <= ymax();
    }
    bool operator==(const GridSpec&) const = default;
};

/// Index-space sub-rectangle of a grid: nodes i0..i0+ni-1, j0..j0+nj-1.
struct Window {
    int i0 = 0, j0 = 0, ni = 0, nj = 0;

    static Window full(const GridSpec& g) { return {0, 0, g.nx, g.ny}; }

    /// Largest window whose nodes all lie in [xlo, xhi] x [ylo, yhi].
    static Window from_rect(const GridSpec& g, double xlo, double ylo, double xhi, double yhi);

    void validate(const GridSpec& g, int min_side = 1) const {
        if (ni < min_side || nj < min_side)
            throw ValidationError("window too small");
        if (i0 < 0 || j0 < 0 || i0 + ni > g.nx || j0 + nj > g.ny)
            throw ValidationError("window outside grid");
    }
};

/// Two-component field sampled at grid nodes (S^1- or R^2-valued).
/// Immutable by convention: operations take const refs and return new values.
struct GridField2 {
    GridSpec spec;
    Eigen::ArrayX2d values;   // row n = spec.index(i, j)
    bool unit = false;        // claims | |u| - 1 | <= unit_tol at all nodes

    Vec2 at(int i, int j) const { return values.row(spec.index(i, j)).transpose(); }

    /// max_n | |u_n| - 1 |
    double unit_defect() const {
        return (values.rowwise().norm() - 1.0).abs().maxCoeff();
    }
    void enforce_unit(double unit_tol) const {
        double d = unit_defect();
        if (d > unit_tol)
            throw ContractError("unit-length breach: max | |u|-1 | = " + std::to_string(d));
    }

    /// Bilinear interpolation at an interior point (clamped to the last cell).
    Vec2 interpolate(const Vec2& p) const;
};

/// Scalar field on the same node layout.
struct GridScalar {
    GridSpec spec;
    Eigen::ArrayXd values;

    double at(int i, int j) const { return values[spec.index(i, j)]; }
};

} // namespace eiko

#endif
