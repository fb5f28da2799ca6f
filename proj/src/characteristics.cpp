#include "eiko/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eiko/entropy.hpp"  // perp()
#include "eiko/util.hpp"

namespace eiko {

double Characteristic::chord_defect() const {
    if (points.size() < 3) return 0.0;
    Vec2 a = points.front(), b = points.back();
    Vec2 d = b - a;
    double len = d.norm();
    if (len < 1e-300) return 0.0;
    Vec2 t = d / len;
    double worst = 0.0;
    for (const Vec2& p : points) {
        Vec2 r = p - a;
        worst = std::max(worst, std::abs(r.x() * t.y() - r.y() * t.x()));
    }
    return worst;
}

double Characteristic::length() const {
    double l = 0;
    for (std::size_t i = 1; i < points.size(); ++i) l += (points[i] - points[i - 1]).norm();
    return l;
}

Characteristic trace(const GridField2& u, const Vec2& seed, const TraceOptions& opt) {
    const GridSpec& g = u.spec;
    if (!g.contains(seed)) throw ValidationError("trace seed outside the field domain");
    double dt = opt.dt > 0 ? opt.dt : g.h / 2.0;
    Characteristic c;
    c.dt = dt;
    c.times.push_back(0.0);
    c.points.push_back(seed);

    // velocity = direction * u^perp(x), renormalized to unit length when the
    // interpolated magnitude stays above 1/2; below that the trace stops
    auto velocity = [&](const Vec2& x, Vec2& v) -> bool {
        Vec2 ui = u.interpolate(x);
        double m = ui.norm();
        if (m <= 0.5) return false;
        v = opt.direction * perp(ui / m);
        return true;
    };

    Vec2 x = seed;
    for (int step = 0; step < opt.max_steps; ++step) {
        Vec2 v1;
        if (!velocity(x, v1)) {
            c.status = Characteristic::Status::HitSingularity;
            return c;
        }
        Vec2 mid = x + 0.5 * dt * v1;
        if (!g.contains(mid)) {
            c.status = Characteristic::Status::Exited;
            return c;
        }
        Vec2 v2;
        if (!velocity(mid, v2)) {
            c.status = Characteristic::Status::HitSingularity;
            return c;
        }
        Vec2 next = x + dt * v2;
        if (!g.contains(next)) {
            c.status = Characteristic::Status::Exited;
            return c;
        }
        x = next;
        c.times.push_back((step + 1) * dt);
        c.points.push_back(x);
    }
    c.status = Characteristic::Status::MaxSteps;
    return c;
}

OrderingStats ordering_check(const GridField2& u,
                             const std::vector<std::pair<Vec2, Vec2>>& pairs, double margin) {
    const GridSpec& g = u.spec;
    if (margin < 0) margin = 2.0 * g.h;
    OrderingStats st;
    auto nearest_node_value = [&](const Vec2& p) {
        int i = std::clamp(int(std::lround((p.x() - g.x0) / g.h)), 0, g.nx - 1);
        int j = std::clamp(int(std::lround((p.y() - g.y0) / g.h)), 0, g.ny - 1);
        return u.at(i, j);
    };
    for (const auto& [x, y] : pairs) {
        if (!g.contains(x) || !g.contains(y)) throw ValidationError("ordering pair outside domain");
        Vec2 d = y - x;
        double ax = nearest_node_value(x).dot(d);
        if (std::abs(ax) < margin) {
            ++st.excluded;
            continue;
        }
        ++st.checked;
        if (ax > 0 && nearest_node_value(y).dot(d) <= 0) {
            ++st.violations;
            if (st.witness.size() < 8) st.witness.emplace_back(x, y);
        }
    }
    st.violation_fraction = st.checked ? double(st.violations) / double(st.checked) : 0.0;
    return st;
}

std::vector<std::pair<Vec2, Vec2>> sample_pairs(const GridSpec& g, const Window& w,
                                                std::int64_t count, std::uint64_t seed) {
    w.validate(g);
    SplitMix64 rng(seed);
    std::vector<std::pair<Vec2, Vec2>> out;
    out.reserve(count);
    std::int64_t nwin = std::int64_t(w.ni) * w.nj;
    for (std::int64_t t = 0; t < count; ++t) {
        std::int64_t a = std::int64_t(rng.below(std::uint64_t(nwin)));
        std::int64_t b = std::int64_t(rng.below(std::uint64_t(nwin)));
        if (a == b) continue;
        Vec2 x = g.node(w.i0 + int(a % w.ni), w.j0 + int(a / w.ni));
        Vec2 y = g.node(w.i0 + int(b % w.ni), w.j0 + int(b / w.ni));
        out.emplace_back(x, y);
    }
    return out;
}

namespace {

struct ChordLine {
    Vec2 point;
    Vec2 dir;  // unit
};

std::optional<Vec2> intersect(const ChordLine& a, const ChordLine& b, double min_sin) {
    double cr = a.dir.x() * b.dir.y() - a.dir.y() * b.dir.x();
    if (std::abs(cr) < min_sin) return std::nullopt;
    Vec2 d = b.point - a.point;
    double t = (d.x() * b.dir.y() - d.y() * b.dir.x()) / cr;
    return a.point + t * a.dir;
}

} // namespace

ClassificationReport classify(const GridField2& u, const Window& w, double d,
                              const ClassifyOptions& opt) {
    const GridSpec& g = u.spec;
    w.validate(g, 4);
    if (!(d > 0)) throw ValidationError("classify needs d > 0");
    ClassificationReport rep;

    // characteristic bundle from a lattice of window seeds, both directions
    std::vector<ChordLine> chords;
    const int ns = std::max(2, opt.seeds_per_side);
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ns; ++b) {
            Vec2 seed{g.x(w.i0) + (w.ni - 1) * g.h * (a + 0.5) / ns,
                      g.y(w.j0) + (w.nj - 1) * g.h * (b + 0.5) / ns};
            TraceOptions topt;
            topt.max_steps = int(((w.ni + w.nj) * g.h + 2 * d) / (g.h / 2)) + 16;
            topt.direction = 1.0;
            Characteristic fwd = trace(u, seed, topt);
            topt.direction = -1.0;
            Characteristic bwd = trace(u, seed, topt);
            Vec2 p0 = bwd.points.back(), p1 = fwd.points.back();
            double len = (p1 - p0).norm();
            if (len < 4 * g.h) continue;
            chords.push_back({p0, (p1 - p0) / len});
        }
    rep.traces = int(chords.size());

    // pairwise intersections, clustered around their median
    std::vector<Vec2> pts;
    int considered = 0;
    Vec2 wc{g.x(w.i0) + 0.5 * (w.ni - 1) * g.h, g.y(w.j0) + 0.5 * (w.nj - 1) * g.h};
    double reach = 0.5 * std::hypot((w.ni - 1) * g.h, (w.nj - 1) * g.h) + 2 * d;
    for (std::size_t a = 0; a < chords.size(); ++a)
        for (std::size_t b = a + 1; b < chords.size(); ++b) {
            auto q = intersect(chords[a], chords[b], opt.min_pair_angle_sin);
            if (!q) continue;
            ++considered;
            if ((*q - wc).norm() <= reach) pts.push_back(*q);
        }
    rep.intersections = int(pts.size());
    rep.intersection_fraction = considered ? double(pts.size()) / considered : 0.0;

    bool clustered = false;
    Vec2 median = Vec2::Zero();
    if (pts.size() >= 3 && rep.intersection_fraction >= opt.min_intersection_fraction) {
        auto mid = [&](int comp) {
            std::vector<double> v(pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) v[i] = pts[i][comp];
            std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
            return v[v.size() / 2];
        };
        median = {mid(0), mid(1)};
        std::int64_t close = 0;
        double diam = 0;
        for (const Vec2& p : pts)
            if ((p - median).norm() <= opt.cluster_tol_cells * g.h) {
                ++close;
                diam = std::max(diam, 2 * (p - median).norm());
            }
        rep.cluster_diameter = diam;
        clustered = close >= std::int64_t(0.7 * pts.size());
    }

    if (clustered) {
        // least-squares point closest to all chord lines
        Eigen::Matrix2d A = Eigen::Matrix2d::Zero();
        Vec2 rhs = Vec2::Zero();
        for (const ChordLine& c : chords) {
            Eigen::Matrix2d proj = Eigen::Matrix2d::Identity() - c.dir * c.dir.transpose();
            A += proj;
            rhs += proj * c.point;
        }
        Vec2 P = A.ldlt().solve(rhs);

        // orientation from the mean sign of (x-P)^perp . u(x) over the window
        double acc = 0;
        for (int j = w.j0; j < w.j0 + w.nj; ++j)
            for (int i = w.i0; i < w.i0 + w.ni; ++i) {
                Vec2 r = g.node(i, j) - P;
                acc += perp(r).dot(u.at(i, j)) > 0 ? 1.0 : -1.0;
            }
        int alpha = acc >= 0 ? 1 : -1;

        double resid = 0;
        for (int j = w.j0; j < w.j0 + w.nj; ++j)
            for (int i = w.i0; i < w.i0 + w.ni; ++i) {
                Vec2 r = g.node(i, j) - P;
                double rn = r.norm();
                if (rn < g.h) continue;  // fit undefined at the core
                resid = std::max(resid, (u.at(i, j) - alpha * perp(r) / rn).norm());
            }

        if (resid <= opt.fit_tol_cells * g.h) {
            rep.verdict = "vortex";
            rep.vortex_center = P;
            rep.orientation = alpha;
            rep.fit_residual = resid;
            return rep;
        }
        rep.verdict = "inconsistent";
        rep.vortex_center = P;
        rep.fit_residual = resid;
        return rep;
    }

    // Lipschitz estimate over nearest-neighbor and skip-one node pairs
    double L = 0;
    for (int j = w.j0; j < w.j0 + w.nj; ++j)
        for (int i = w.i0; i < w.i0 + w.ni; ++i)
            for (auto [di, dj] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
                int ii = i + di, jj = j + dj;
                if (ii >= w.i0 + w.ni || jj >= w.j0 + w.nj) continue;
                double dist = std::hypot(di * g.h, dj * g.h);
                L = std::max(L, (u.at(i, j) - u.at(ii, jj)).norm() / dist);
            }
    rep.lipschitz_estimate = L;
    rep.verdict = L <= (1.0 / d) * (1.0 + opt.lipschitz_slack) ? "lipschitz" : "inconsistent";
    return rep;
}

int winding_number(const GridField2& u, const std::vector<std::pair<int, int>>& loop) {
    if (loop.size() < 3) throw ValidationError("winding loop needs at least 3 nodes");
    const double tol = 1e-6;
    double total = 0.0;
    for (std::size_t k = 0; k < loop.size(); ++k) {
        auto [i0, j0] = loop[k];
        auto [i1, j1] = loop[(k + 1) % loop.size()];
        Vec2 a = u.at(i0, j0), b = u.at(i1, j1);
        if ((b - a).norm() >= std::sqrt(2.0))
            throw ContractError("under-resolved loop: angle step >= pi/2");
        total += std::atan2(a.x() * b.y() - a.y() * b.x(), a.dot(b));
    }
    double wn = total / (2.0 * std::numbers::pi);
    double rounded = std::round(wn);
    if (std::abs(wn - rounded) > tol)
        throw ContractError("winding number failed to quantize: " + std::to_string(wn));
    return int(rounded);
}

std::vector<std::pair<int, int>> rect_loop(const GridSpec& g, const Vec2& center,
                                           double half_extent) {
    int ic = std::clamp(int(std::lround((center.x() - g.x0) / g.h)), 0, g.nx - 1);
    int jc = std::clamp(int(std::lround((center.y() - g.y0) / g.h)), 0, g.ny - 1);
    int r = std::max(1, int(std::lround(half_extent / g.h)));
    int ilo = ic - r, ihi = ic + r, jlo = jc - r, jhi = jc + r;
    if (ilo < 0 || jlo < 0 || ihi >= g.nx || jhi >= g.ny)
        throw ValidationError("winding loop leaves the grid");
    std::vector<std::pair<int, int>> loop;
    for (int i = ilo; i < ihi; ++i) loop.emplace_back(i, jlo);
    for (int j = jlo; j < jhi; ++j) loop.emplace_back(ihi, j);
    for (int i = ihi; i > ilo; --i) loop.emplace_back(i, jhi);
    for (int j = jhi; j > jlo; --j) loop.emplace_back(ilo, j);
    return loop;
}

} // namespace eiko
