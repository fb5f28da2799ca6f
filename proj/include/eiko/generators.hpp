#ifndef EIKO_GENERATORS_HPP
#define EIKO_GENERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "eiko/grid.hpp"

namespace eiko {

/// Closed target set for distance fields: a finite union of points and
/// convex polygon boundaries, each with an analytic nearest-point map.
struct DistanceSet {
    std::vector<Vec2> points;
    std::vector<std::vector<Vec2>> polygons;   // vertex loops, edges close the loop

    bool empty() const { return points.empty() && polygons.empty(); }

    /// Distance, nearest point, and the gap to the second-nearest candidate
    /// (0 gap on the medial axis).
    struct Projection {
        double dist;
        Vec2 foot;
        double ambiguity_gap;
    };
    Projection project(const Vec2& p) const;
};

enum class GeneratorKind { Vortex, Constant, Jump, Distance, LogLog };

GeneratorKind parse_generator_kind(const std::string& name);
std::string generator_kind_name(GeneratorKind k);

struct GeneratorParams {
    // vortex
    Vec2 center{0.0, 0.0};
    double alpha = 1.0;            // +1 or -1
    // constant
    Vec2 direction{1.0, 0.0};
    // jump: u = +dir for n.x > offset, -dir for n.x < offset, with line normal n
    Vec2 jump_normal{0.0, 1.0};
    double jump_offset = 0.0;
    // distance
    DistanceSet target;
};

/// Samples the requested field on `spec`. If a node lands on the singular
/// set (vortex center, jump line, medial axis, the loglog line x1 = 0), the
/// grid origin is half-shifted by (h/2, 0), (0, h/2) or (h/2, h/2) - first
/// offset that clears all nodes wins; failure to clear is an error. The
/// returned field carries the (possibly shifted) spec.
GridField2 generate(GeneratorKind kind, const GeneratorParams& params, GridSpec spec);

/// u = grad^perp psi with centered differences inside, one-sided at the
/// boundary.
GridField2 gradient_from_stream(const GridScalar& psi);

/// Samples a scalar function at the nodes.
GridScalar sample_scalar(const GridSpec& spec, const std::function<double(const Vec2&)>& f);

} // namespace eiko

#endif
