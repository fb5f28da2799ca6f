#include "eiko/generators.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>

namespace eiko {

namespace {

Vec2 perp(const Vec2& v) { return {-v.y(), v.x()}; }

// Nearest point on segment [a, b].
Vec2 project_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 d = b - a;
    double t = d.squaredNorm() > 0 ? (p - a).dot(d) / d.squaredNorm() : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return a + t * d;
}

} // namespace

DistanceSet::Projection DistanceSet::project(const Vec2& p) const {
    double best = std::numeric_limits<double>::infinity();
    double second = best;
    Vec2 foot = Vec2::Zero();
    auto consider = [&](const Vec2& q) {
        double d = (p - q).norm();
        if (d < best) {
            // feet closer than the ambiguity scale belong to the same sheet
            if (best < second && (q - foot).norm() > 1e-12 * (1.0 + d)) second = best;
            best = d;
            foot = q;
        } else if (d < second && (q - foot).norm() > 1e-12 * (1.0 + d)) {
            second = d;
        }
    };
    for (const Vec2& q : points) consider(q);
    for (const auto& poly : polygons) {
        std::size_t n = poly.size();
        for (std::size_t k = 0; k < n; ++k)
            consider(project_segment(p, poly[k], poly[(k + 1) % n]));
    }
    double gap = std::isfinite(second) ? second - best : std::numeric_limits<double>::infinity();
    return {best, foot, gap};
}

GeneratorKind parse_generator_kind(const std::string& name) {
    if (name == "vortex") return GeneratorKind::Vortex;
    if (name == "constant") return GeneratorKind::Constant;
    if (name == "jump") return GeneratorKind::Jump;
    if (name == "distance") return GeneratorKind::Distance;
    if (name == "loglog") return GeneratorKind::LogLog;
    throw ValidationError("unknown generator kind: " + name);
}

std::string generator_kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::Vortex: return "vortex";
        case GeneratorKind::Constant: return "constant";
        case GeneratorKind::Jump: return "jump";
        case GeneratorKind::Distance: return "distance";
        case GeneratorKind::LogLog: return "loglog";
    }
    return "?";
}

namespace {

// Distance of a node to the generator's singular set; used by the
// half-shift policy. Infinite when the generator is smooth everywhere.
double singular_distance(GeneratorKind kind, const GeneratorParams& p, const Vec2& x) {
    switch (kind) {
        case GeneratorKind::Vortex:
            return (x - p.center).norm();
        case GeneratorKind::Constant:
            return std::numeric_limits<double>::infinity();
        case GeneratorKind::Jump:
            return std::abs(p.jump_normal.normalized().dot(x) - p.jump_offset);
        case GeneratorKind::Distance: {
            auto pr = p.target.project(x);
            // singular on the set itself and on the medial axis
            return std::min(pr.dist, pr.ambiguity_gap);
        }
        case GeneratorKind::LogLog: {
            double d0 = std::abs(x.x());                 // phi undefined at x1 = 0
            double d1 = std::abs(std::abs(x.x()) - 1.0); // log|x1| = 0 there
            return std::min(d0, d1);
        }
    }
    return 0.0;
}

Vec2 sample(GeneratorKind kind, const GeneratorParams& p, const Vec2& x) {
    switch (kind) {
        case GeneratorKind::Vortex: {
            Vec2 d = x - p.center;
            return p.alpha * perp(d) / d.norm();
        }
        case GeneratorKind::Constant:
            return p.direction;
        case GeneratorKind::Jump: {
            double side = p.jump_normal.normalized().dot(x) - p.jump_offset;
            return side > 0 ? p.direction : Vec2(-p.direction);
        }
        case GeneratorKind::Distance: {
            auto pr = p.target.project(x);
            Vec2 grad = (x - pr.foot) / pr.dist;
            return perp(grad);
        }
        case GeneratorKind::LogLog: {
            double phi = std::log(std::abs(std::log(std::abs(x.x()))));
            return {std::cos(phi), std::sin(phi)};
        }
    }
    return Vec2::Zero();
}

} // namespace

GridField2 generate(GeneratorKind kind, const GeneratorParams& params, GridSpec spec) {
    spec.validate();
    if (kind == GeneratorKind::Distance && params.target.empty())
        throw ValidationError("distance generator requires a nonempty target set");
    if (kind == GeneratorKind::Vortex && (params.alpha != 1.0 && params.alpha != -1.0))
        throw ValidationError("vortex orientation must be +1 or -1");

    const double clearance = 1e-9 * spec.h;
    // half-shifts clear axis-aligned singular lines; the quarter-shift
    // combinations clear 45-degree medial-axis diagonals, whose lattice
    // alignment survives the symmetric half-shift
    const double h2 = spec.h / 2, h4 = spec.h / 4;
    const std::array<Vec2, 7> shifts = {Vec2{0, 0},   Vec2{h2, 0},  Vec2{0, h2}, Vec2{h2, h2},
                                        Vec2{h2, h4}, Vec2{h4, h2}, Vec2{h4, h4}};
    GridSpec chosen = spec;
    bool found = false;
    for (const Vec2& s : shifts) {
        GridSpec cand = spec;
        cand.x0 += s.x();
        cand.y0 += s.y();
        double worst = std::numeric_limits<double>::infinity();
        for (int j = 0; j < cand.ny && worst > clearance; ++j)
            for (int i = 0; i < cand.nx; ++i) {
                worst = std::min(worst, singular_distance(kind, params, cand.node(i, j)));
                if (worst <= clearance) break;
            }
        if (worst > clearance) {
            chosen = cand;
            found = true;
            break;
        }
    }
    if (!found)
        throw ValidationError("grid cannot be half-shifted off the singular set");

    GridField2 u;
    u.spec = chosen;
    u.values.resize(chosen.count(), 2);
    for (int j = 0; j < chosen.ny; ++j)
        for (int i = 0; i < chosen.nx; ++i) {
            Vec2 v = sample(kind, params, chosen.node(i, j));
            u.values.row(chosen.index(i, j)) = v.transpose();
        }
    u.unit = true;
    if (kind == GeneratorKind::Constant &&
        std::abs(params.direction.norm() - 1.0) > 1e-12)
        u.unit = false;
    return u;
}

GridField2 gradient_from_stream(const GridScalar& psi) {
    const GridSpec& g = psi.spec;
    g.validate();
    GridField2 u;
    u.spec = g;
    u.values.resize(g.count(), 2);
    auto dx = [&](int i, int j) {
        if (i == 0) return (psi.at(1, j) - psi.at(0, j)) / g.h;
        if (i == g.nx - 1) return (psi.at(i, j) - psi.at(i - 1, j)) / g.h;
        return (psi.at(i + 1, j) - psi.at(i - 1, j)) / (2 * g.h);
    };
    auto dy = [&](int i, int j) {
        if (j == 0) return (psi.at(i, 1) - psi.at(i, 0)) / g.h;
        if (j == g.ny - 1) return (psi.at(i, j) - psi.at(i, j - 1)) / g.h;
        return (psi.at(i, j + 1) - psi.at(i, j - 1)) / (2 * g.h);
    };
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            u.values.row(g.index(i, j)) = Eigen::RowVector2d(-dy(i, j), dx(i, j));
    return u;
}

GridScalar sample_scalar(const GridSpec& spec, const std::function<double(const Vec2&)>& f) {
    spec.validate();
    GridScalar s;
    s.spec = spec;
    s.values.resize(spec.count());
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i) s.values[spec.index(i, j)] = f(spec.node(i, j));
    return s;
}

} // namespace eiko
