#ifndef EIKO_CHARACTERISTICS_HPP
#define EIKO_CHARACTERISTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "eiko/grid.hpp"

namespace eiko {

/// Integral curve of u^perp traced by RK2 on the bilinearly interpolated
/// field. Stops at the boundary, at max_steps, or where the interpolated
/// magnitude drops to 1/2 (singularity proximity).
struct Characteristic {
    enum class Status { Exited, HitSingularity, MaxSteps };

    std::vector<double> times;
    std::vector<Vec2> points;
    double dt = 0;
    Status status = Status::MaxSteps;

    /// Max distance of polyline points to the first-last chord.
    double chord_defect() const;
    double length() const;
};

struct TraceOptions {
    double dt = 0;          // <= 0: defaults to h/2
    int max_steps = 4096;
    double direction = 1.0; // -1 integrates -u^perp (backward)
};

Characteristic trace(const GridField2& u, const Vec2& seed, const TraceOptions& opt = {});

/// Jabin-Otto-Perthame ordering principle on sampled node pairs:
///   u(x).(y-x) > 0  =>  u(y).(y-x) > 0.
/// Pairs with |u(x).(y-x)| below the margin band (default 2h in dot units)
/// are excluded from the statistic.
struct OrderingStats {
    std::int64_t checked = 0;
    std::int64_t excluded = 0;
    std::int64_t violations = 0;
    double violation_fraction = 0;
    std::vector<std::pair<Vec2, Vec2>> witness;  // up to 8 violating pairs
};

OrderingStats ordering_check(const GridField2& u,
                             const std::vector<std::pair<Vec2, Vec2>>& pairs,
                             double margin = -1.0);
/// Random node pairs inside the window (seeded, deterministic).
std::vector<std::pair<Vec2, Vec2>> sample_pairs(const GridSpec& g, const Window& w,
                                                std::int64_t count, std::uint64_t seed);

struct ClassifyOptions {
    int seeds_per_side = 6;
    double cluster_tol_cells = 4.0;   // intersection cluster diameter, in h
    double fit_tol_cells = 8.0;       // max |u - vortex fit| allowed, in h
    double lipschitz_slack = 0.10;    // verdict lipschitz if L <= (1/d)(1+slack)
    double min_intersection_fraction = 0.5;
    double min_pair_angle_sin = 0.05; // skip near-parallel chord pairs
};

struct ClassificationReport {
    std::string verdict;  // "vortex" | "lipschitz" | "inconsistent"
    std::optional<Vec2> vortex_center;
    std::optional<int> orientation;       // alpha = +1 / -1
    std::optional<double> fit_residual;   // max |u - alpha (x-P)^perp/|x-P||
    std::optional<double> lipschitz_estimate;
    // evidence
    int traces = 0;
    int intersections = 0;
    double cluster_diameter = 0;
    double intersection_fraction = 0;
};

/// Theorem-1 alternative at desk scale: a characteristic bundle from window
/// seeds either focuses at a point P (vortex verdict, with the fitted P,
/// orientation and residual) or the field is 1/d-Lipschitz on the window.
ClassificationReport classify(const GridField2& u, const Window& window, double d,
                              const ClassifyOptions& opt = {});

/// Branch-continuous angle increment sum / 2pi along a closed node loop.
/// Errors if consecutive samples jump by an angle >= pi/2 (under-resolved)
/// or if the total fails to be an integer within 1e-6.
int winding_number(const GridField2& u, const std::vector<std::pair<int, int>>& loop);

/// Counterclockwise rectangle loop of nodes at index distance `radius_cells`
/// from the node nearest `center`.
std::vector<std::pair<int, int>> rect_loop(const GridSpec& g, const Vec2& center,
                                           double half_extent);

} // namespace eiko

#endif
