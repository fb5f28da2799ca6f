#include "eiko/burgers.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "eiko/mollifier.hpp"
#include "eiko/util.hpp"

namespace eiko {

namespace {

double smooth01(double t) {
    t = std::clamp(t, 0.0, 1.0);
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}
double dsmooth01(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return 30.0 * t * t * (1.0 - t) * (1.0 - t);
}

struct PlateauProfile {
    double a, b, w;
    double value(double x) const {
        return smooth01((x - a) / w) * smooth01((b - x) / w);
    }
    double deriv(double x) const {
        return dsmooth01((x - a) / w) / w * smooth01((b - x) / w) -
               smooth01((x - a) / w) * dsmooth01((b - x) / w) / w;
    }
};

} // namespace

SpaceTimeBump SpaceTimeBump::radial(double ct, double cs, double radius, double amplitude) {
    SpaceTimeBump b;
    b.kind = Kind::Radial;
    b.ct = ct;
    b.cs = cs;
    b.radius = radius;
    b.amplitude = amplitude;
    return b;
}

SpaceTimeBump SpaceTimeBump::plateau(double ta, double tb, double sa, double sb, double edge) {
    if (!(tb > ta && sb > sa && edge > 0 && 2 * edge < tb - ta && 2 * edge < sb - sa))
        throw ValidationError("plateau bump needs positive extent wider than two edges");
    SpaceTimeBump b;
    b.kind = Kind::Plateau;
    b.ta = ta;
    b.tb = tb;
    b.sa = sa;
    b.sb = sb;
    b.edge = edge;
    return b;
}

double SpaceTimeBump::value(double t, double s) const {
    if (kind == Kind::Radial) {
        double r2 = ((t - ct) * (t - ct) + (s - cs) * (s - cs)) / (radius * radius);
        if (r2 >= 1.0 - 1e-14) return 0.0;
        return amplitude * std::exp(-1.0 / (1.0 - r2));
    }
    return PlateauProfile{ta, tb, edge}.value(t) * PlateauProfile{sa, sb, edge}.value(s);
}

double SpaceTimeBump::d_t(double t, double s) const {
    if (kind == Kind::Radial) {
        double r2 = ((t - ct) * (t - ct) + (s - cs) * (s - cs)) / (radius * radius);
        if (r2 >= 1.0 - 1e-14) return 0.0;
        double u = 1.0 - r2;
        return -amplitude * std::exp(-1.0 / u) / (u * u) * 2.0 * (t - ct) / (radius * radius);
    }
    return PlateauProfile{ta, tb, edge}.deriv(t) * PlateauProfile{sa, sb, edge}.value(s);
}

double SpaceTimeBump::d_s(double t, double s) const {
    if (kind == Kind::Radial) {
        double r2 = ((t - ct) * (t - ct) + (s - cs) * (s - cs)) / (radius * radius);
        if (r2 >= 1.0 - 1e-14) return 0.0;
        double u = 1.0 - r2;
        return -amplitude * std::exp(-1.0 / u) / (u * u) * 2.0 * (s - cs) / (radius * radius);
    }
    return PlateauProfile{ta, tb, edge}.value(t) * PlateauProfile{sa, sb, edge}.deriv(s);
}

void SpaceTimeBump::require_inside(const SpaceTimeGrid& g, double margin_cells) const {
    double mt = margin_cells * g.dt, ms = margin_cells * g.ds;
    double lot, hit, los, his;
    if (kind == Kind::Radial) {
        lot = ct - radius;
        hit = ct + radius;
        los = cs - radius;
        his = cs + radius;
    } else {
        lot = ta;
        hit = tb;
        los = sa;
        his = sb;
    }
    if (lot < g.t0 + mt || hit > g.tmax() - mt || los < g.s0 + ms || his > g.smax() - ms)
        throw ValidationError("space-time bump support overflows the domain");
}

BurgersKind parse_burgers_kind(const std::string& name) {
    if (name == "constant") return BurgersKind::Constant;
    if (name == "shock") return BurgersKind::Shock;
    if (name == "rarefaction") return BurgersKind::Rarefaction;
    if (name == "smooth") return BurgersKind::Smooth;
    if (name == "nonentropic-shock") return BurgersKind::NonentropicShock;
    throw ValidationError("unknown burgers generator: " + name);
}

std::string burgers_kind_name(BurgersKind k) {
    switch (k) {
        case BurgersKind::Constant: return "constant";
        case BurgersKind::Shock: return "shock";
        case BurgersKind::Rarefaction: return "rarefaction";
        case BurgersKind::Smooth: return "smooth";
        case BurgersKind::NonentropicShock: return "nonentropic-shock";
    }
    return "?";
}

SpaceTimeField generate_burgers(BurgersKind kind, const BurgersParams& p, SpaceTimeGrid g) {
    g.validate();
    SpaceTimeField f;
    f.grid = g;
    f.values.resize(g.nt, g.ns);
    f.provenance = "analytic-sampled";

    switch (kind) {
        case BurgersKind::Constant:
            f.values.setConstant(p.c);
            return f;
        case BurgersKind::Shock:
        case BurgersKind::NonentropicShock: {
            double vl = p.vl, vr = p.vr;
            if (kind == BurgersKind::Shock && !(vl > vr))
                throw ValidationError("admissible shock needs vl > vr");
            if (kind == BurgersKind::NonentropicShock && !(vl < vr))
                throw ValidationError("nonentropic shock needs vl < vr");
            double speed = 0.5 * (vl + vr);
            for (int i = 0; i < g.nt; ++i) {
                double line = p.sstar + speed * g.t(i);
                for (int j = 0; j < g.ns; ++j) f.values(i, j) = g.s(j) < line ? vl : vr;
            }
            return f;
        }
        case BurgersKind::Rarefaction: {
            if (!(p.vl < p.vr)) throw ValidationError("rarefaction needs vl < vr");
            if (g.t0 <= 0) throw ValidationError("rarefaction grid must satisfy t > 0");
            for (int i = 0; i < g.nt; ++i)
                for (int j = 0; j < g.ns; ++j)
                    f.values(i, j) = std::clamp((g.s(j) - p.sstar) / g.t(i), p.vl, p.vr);
            return f;
        }
        case BurgersKind::Smooth: {
            // v = v0(s - t v), v0(s) = amp sin(2 pi s / wavelength);
            // breaking time 1/max(-v0') = wavelength/(2 pi amp)
            if (!(p.amp > 0) || !(p.wavelength > 0))
                throw ValidationError("smooth generator needs amp, wavelength > 0");
            double tbreak = p.wavelength / (2.0 * std::numbers::pi * p.amp);
            if (g.tmax() >= 0.99 * tbreak)
                throw ValidationError("smooth generator beyond breaking time");
            auto v0 = [&](double s) {
                return p.amp * std::sin(2.0 * std::numbers::pi * s / p.wavelength);
            };
            for (int i = 0; i < g.nt; ++i) {
                double t = g.t(i);
                for (int j = 0; j < g.ns; ++j) {
                    double s = g.s(j);
                    // bisection on w - v0(s - t w), monotone before breaking
                    double lo = -p.amp, hi = p.amp;
                    for (int it = 0; it < 64; ++it) {
                        double mid = 0.5 * (lo + hi);
                        if (mid - v0(s - t * mid) < 0)
                            lo = mid;
                        else
                            hi = mid;
                    }
                    f.values(i, j) = 0.5 * (lo + hi);
                }
            }
            return f;
        }
    }
    throw ValidationError("unreachable generator kind");
}

double Flux::f(double w) const {
    switch (kind) {
        case Kind::Burgers: return 0.5 * w * w;
        case Kind::CircleMinus: return -std::sqrt(std::max(0.0, 1.0 - w * w));
        case Kind::CirclePlus: return std::sqrt(std::max(0.0, 1.0 - w * w));
    }
    return 0;
}

double Flux::df(double w) const {
    switch (kind) {
        case Kind::Burgers: return w;
        case Kind::CircleMinus: return w / std::sqrt(std::max(1e-300, 1.0 - w * w));
        case Kind::CirclePlus: return -w / std::sqrt(std::max(1e-300, 1.0 - w * w));
    }
    return 0;
}

double EntropyPair::eta(double w) const {
    if (kind == Kind::Energy) return 0.5 * w * w;
    return std::abs(w - k);
}

double EntropyPair::q(double w) const {
    if (kind == Kind::Energy) return w * w * w / 3.0;
    // Kruzhkov flux sign(w-k) (h(w) - h(k)); q' = h' eta' a.e.
    double sgn = w > k ? 1.0 : (w < k ? -1.0 : 0.0);
    return sgn * (flux.f(w) - flux.f(k));
}

namespace {

// midpoint rule over cells, nodal composition averaged to cell centers
template <class EtaF, class QF>
double residual_pairing(const SpaceTimeField& v, const SpaceTimeBump& zeta, EtaF&& eta,
                        QF&& q) {
    const SpaceTimeGrid& g = v.grid;
    zeta.require_inside(g);
    double acc = 0.0;
    for (int i = 0; i + 1 < g.nt; ++i) {
        double tc = g.t0 + (i + 0.5) * g.dt;
        double rowacc = 0.0;
        for (int j = 0; j + 1 < g.ns; ++j) {
            double sc = g.s0 + (j + 0.5) * g.ds;
            double zt = zeta.d_t(tc, sc);
            double zs = zeta.d_s(tc, sc);
            if (zt == 0.0 && zs == 0.0) continue;
            double e = 0.25 * (eta(v.values(i, j)) + eta(v.values(i + 1, j)) +
                               eta(v.values(i, j + 1)) + eta(v.values(i + 1, j + 1)));
            double qq = 0.25 * (q(v.values(i, j)) + q(v.values(i + 1, j)) +
                                q(v.values(i, j + 1)) + q(v.values(i + 1, j + 1)));
            rowacc += e * zt + qq * zs;
        }
        acc += rowacc;
    }
    return -acc * g.dt * g.ds;
}

} // namespace

double weak_residual(const SpaceTimeField& v, const SpaceTimeBump& zeta, Flux flux) {
    return residual_pairing(
        v, zeta, [](double w) { return w; }, [&](double w) { return flux.f(w); });
}

double balance_residual(const SpaceTimeField& v, const EntropyPair& pair,
                        const SpaceTimeBump& zeta) {
    return residual_pairing(
        v, zeta, [&](double w) { return pair.eta(w); }, [&](double w) { return pair.q(w); });
}

SpaceTimeWindow SpaceTimeWindow::from_rect(const SpaceTimeGrid& g, double tlo, double slo,
                                           double thi, double shi) {
    int i0 = std::max(0, int(std::ceil((tlo - g.t0) / g.dt - 1e-12)));
    int j0 = std::max(0, int(std::ceil((slo - g.s0) / g.ds - 1e-12)));
    int i1 = std::min(g.nt - 1, int(std::floor((thi - g.t0) / g.dt + 1e-12)));
    int j1 = std::min(g.ns - 1, int(std::floor((shi - g.s0) / g.ds + 1e-12)));
    SpaceTimeWindow w{i0, j0, i1 - i0 + 1, j1 - j0 + 1};
    if (w.ni < 2 || w.nj < 2) throw ValidationError("space-time window contains too few nodes");
    return w;
}

CetSpaceTimeReport cet_spacetime(const SpaceTimeField& v, double eps,
                                 const SpaceTimeWindow& w, const SpaceTimeBump* zeta,
                                 double c_constant) {
    const SpaceTimeGrid& g = v.grid;
    if (eps < 2.0 * g.ds - 1e-12 * g.ds)
        throw ValidationError("unresolvable mollifier: eps < 2ds");
    const int K = int(std::floor(eps / g.ds + 1e-12));
    if (w.j0 - K < 0 || w.j0 + w.nj - 1 + K > g.ns - 1 || w.i0 < 0 ||
        w.i0 + w.ni - 1 > g.nt - 1)
        throw ValidationError("cet window must sit at distance >= eps from the s-boundary");

    CetSpaceTimeReport rep;
    rep.c_used = c_constant;

    // localized tail
    double bound = 0.0;
    for (int i = w.i0; i < w.i0 + w.ni; ++i) {
        double rowacc = 0.0;
        for (int k = -K; k <= K; ++k) {
            if (k == 0) continue;
            double wgt = 1.0 / (k * g.ds * k * g.ds);
            double acc = 0.0;
            for (int j = w.j0; j < w.j0 + w.nj; ++j) {
                double d = std::abs(v.values(i, j - k) - v.values(i, j));
                acc += d * d * d;
            }
            rowacc += wgt * acc;
        }
        bound += rowacc;
    }
    rep.bound = bound * g.dt * g.ds * g.ds;

    // I_eps with a plateau zeta inscribed in the window unless supplied
    SpaceTimeBump zdefault = SpaceTimeBump::plateau(
        g.t(w.i0), g.t(w.i0 + w.ni - 1), g.s(w.j0), g.s(w.j0 + w.nj - 1),
        0.2 * std::min((w.ni - 1) * g.dt, (w.nj - 1) * g.ds));
    const SpaceTimeBump& z = zeta ? *zeta : zdefault;

    // space-only mollification per time slice, unit-mass lattice weights
    Eigen::ArrayXd wv(2 * K + 1), dw(2 * K + 1);
    double raw = 0.0;
    for (int k = -K; k <= K; ++k) {
        double y = k * g.ds / eps;
        wv[k + K] = Mollifier::shape(y * y);
        raw += wv[k + K];
        double t = 1.0 - y * y;
        dw[k + K] = (std::abs(y) < 1.0 - 1e-14)
                        ? Mollifier::shape(y * y) * (-2.0 * y / (t * t))
                        : 0.0;
    }
    wv /= raw;
    dw /= raw * eps;  // consistent kernel-derivative weights

    double ieps = 0.0;
    for (int i = w.i0; i < w.i0 + w.ni; ++i) {
        double rowacc = 0.0;
        for (int j = w.j0; j < w.j0 + w.nj; ++j) {
            double zv = z.value(g.t(i), g.s(j));
            if (zv == 0.0) continue;
            double ve = 0.0, v2e = 0.0, dve = 0.0;
            for (int k = -K; k <= K; ++k) {
                double s = v.values(i, j - k);
                ve += wv[k + K] * s;
                v2e += wv[k + K] * s * s;
                dve += dw[k + K] * s;
            }
            rowacc += dve * zv * (ve * ve - v2e);
        }
        ieps += rowacc;
    }
    rep.i_eps = ieps * g.dt * g.ds;
    rep.within_bound = std::abs(rep.i_eps) <= c_constant * rep.bound + 1e-12;
    return rep;
}

double oleinik_check(const SpaceTimeField& v, double t) {
    const SpaceTimeGrid& g = v.grid;
    int i = std::clamp(int(std::lround((t - g.t0) / g.dt)), 0, g.nt - 1);
    // max over all pairs s' > s equals the max over adjacent pairs
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j + 1 < g.ns; ++j)
        best = std::max(best, (v.values(i, j + 1) - v.values(i, j)) / g.ds);
    return best;
}

BurgersReport classify_burgers(const SpaceTimeField& v, const SpaceTimeBump& zeta,
                               const BurgersVerdictOptions& opt) {
    BurgersReport rep;
    rep.weak = weak_residual(v, zeta);
    rep.energy = balance_residual(v, EntropyPair::energy(), zeta);

    double vmin = v.values.minCoeff(), vmax = v.values.maxCoeff();
    if (vmax - vmin < 1e-12) {
        vmin -= 0.5;
        vmax += 0.5;
    }
    int nk = std::max(1, opt.kruzhkov_count);
    double worst = 0.0;
    for (int i = 1; i <= nk; ++i) {
        double k = vmin + (vmax - vmin) * i / (nk + 1);
        double r = balance_residual(v, EntropyPair::kruzhkov(k), zeta);
        rep.kruzhkov_k.push_back(k);
        rep.kruzhkov.push_back(r);
        worst = std::max(worst, r);
    }
    rep.entropy_solution = worst <= opt.entropy_tol;
    rep.shock_free =
        std::abs(rep.weak) <= opt.shock_free_tol && std::abs(rep.energy) <= opt.shock_free_tol;

    const SpaceTimeGrid& g = v.grid;
    rep.oleinik = oleinik_check(v, g.t0 + 0.5 * (g.nt - 1) * g.dt);
    double lip = 0.0;
    for (int i = 0; i < g.nt; ++i)
        for (int j = 0; j + 1 < g.ns; ++j)
            lip = std::max(lip, std::abs(v.values(i, j + 1) - v.values(i, j)) / g.ds);
    rep.lipschitz_estimate = lip;
    return rep;
}

void write_spacetime(const SpaceTimeField& v, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ValidationError("cannot open for writing: " + path);
    const SpaceTimeGrid& g = v.grid;
    os << "BURG1 " << g.nt << ' ' << g.ns << ' ' << format_g17(g.t0) << ' ' << format_g17(g.s0)
       << ' ' << format_g17(g.dt) << ' ' << format_g17(g.ds) << '\n';
    for (int i = 0; i < g.nt; ++i)
        for (int j = 0; j < g.ns; ++j) os << format_g17(v.values(i, j)) << '\n';
    if (!os) throw ValidationError("write failed: " + path);
}

SpaceTimeField read_spacetime(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ValidationError("cannot open space-time file: " + path);
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("empty space-time file: " + path);
    std::istringstream hs(line);
    std::string tag;
    SpaceTimeField f;
    SpaceTimeGrid& g = f.grid;
    if (!(hs >> tag >> g.nt >> g.ns >> g.t0 >> g.s0 >> g.dt >> g.ds) || tag != "BURG1")
        throw ValidationError("malformed space-time header: " + line);
    g.validate();
    f.values.resize(g.nt, g.ns);
    std::int64_t n = 0;
    double a;
    while (n < g.count() && (is >> a)) {
        f.values(int(n / g.ns), int(n % g.ns)) = a;
        ++n;
    }
    if (n != g.count()) throw ValidationError("value count mismatch in " + path);
    f.provenance = "file";
    return f;
}

} // namespace eiko
