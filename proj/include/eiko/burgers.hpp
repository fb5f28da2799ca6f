#ifndef EIKO_BURGERS_HPP
#define EIKO_BURGERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "eiko/errors.hpp"

#include <Eigen/Dense>

namespace eiko {

/// Space-time grid: node (i, j) at (t0 + i dt, s0 + j ds), t outer.
struct SpaceTimeGrid {
    int nt = 0, ns = 0;
    double t0 = 0, s0 = 0;
    double dt = 0, ds = 0;

    void validate() const {
        if (nt < 2 || ns < 2) throw ValidationError("space-time grid: nt, ns must be >= 2");
        if (!(dt > 0 && ds > 0)) throw ValidationError("space-time grid: dt, ds must be > 0");
    }
    std::int64_t count() const { return std::int64_t(nt) * ns; }
    double t(int i) const { return t0 + i * dt; }
    double s(int j) const { return s0 + j * ds; }
    double tmax() const { return t0 + (nt - 1) * dt; }
    double smax() const { return s0 + (ns - 1) * ds; }
};

struct SpaceTimeField {
    SpaceTimeGrid grid;
    Eigen::ArrayXXd values;  // (nt rows, ns cols)
    std::string provenance;  // "analytic-sampled" | "file"
};

/// Test function over (t, s): either the radial exp bump (the TestBump
/// profile) or a product plateau with quintic smoothstep edges.
struct SpaceTimeBump {
    enum class Kind { Radial, Plateau };
    Kind kind = Kind::Radial;
    // radial
    double ct = 0, cs = 0, radius = 1, amplitude = 1;
    // plateau: 1 on [ta+edge, tb-edge] x [sa+edge, sb-edge], 0 outside [ta,tb]x[sa,sb]
    double ta = 0, tb = 1, sa = 0, sb = 1, edge = 0.1;

    static SpaceTimeBump radial(double ct, double cs, double radius, double amplitude = 1.0);
    static SpaceTimeBump plateau(double ta, double tb, double sa, double sb, double edge);

    double value(double t, double s) const;
    double d_t(double t, double s) const;
    double d_s(double t, double s) const;

    void require_inside(const SpaceTimeGrid& g, double margin_cells = 2.0) const;
};

enum class BurgersKind { Constant, Shock, Rarefaction, Smooth, NonentropicShock };

BurgersKind parse_burgers_kind(const std::string& name);
std::string burgers_kind_name(BurgersKind k);

struct BurgersParams {
    double vl = 1.0, vr = 0.0;   // left/right states
    double sstar = 0.0;          // shock or fan foot
    double c = 0.0;              // constant value
    double amp = 0.5;            // smooth: v0(s) = amp sin(2 pi s / wavelength)
    double wavelength = 2.0;
};

/// Exact weak solutions sampled at nodes. Shock speed (vl+vr)/2 by
/// Rankine-Hugoniot; rarefaction v = clamp((s-s*)/t, vl, vr) needs t > 0;
/// the smooth generator solves v = v0(s - t v) by bisection and refuses
/// grids reaching the breaking time.
SpaceTimeField generate_burgers(BurgersKind kind, const BurgersParams& p,
                                SpaceTimeGrid grid);

/// Optional flux for the conservation law v_t + (h(v))_s = 0.
struct Flux {
    enum class Kind { Burgers, CircleMinus, CirclePlus };
    Kind kind = Kind::Burgers;
    double f(double w) const;
    double df(double w) const;
};

/// Entropy - entropy flux pair with q'(w) = h'(w) eta'(w).
struct EntropyPair {
    enum class Kind { Energy, Kruzhkov };
    Kind kind = Kind::Energy;
    double k = 0.0;  // Kruzhkov kink
    Flux flux{};

    static EntropyPair energy() { return {Kind::Energy, 0.0, {}}; }
    static EntropyPair kruzhkov(double k, Flux flux = {}) { return {Kind::Kruzhkov, k, flux}; }

    double eta(double w) const;
    double q(double w) const;
};

/// -int int (v zeta_t + h(v) zeta_s); midpoint rule with node composition.
double weak_residual(const SpaceTimeField& v, const SpaceTimeBump& zeta, Flux flux = {});

/// -int int (eta(v) zeta_t + q(v) zeta_s).
double balance_residual(const SpaceTimeField& v, const EntropyPair& pair,
                        const SpaceTimeBump& zeta);

/// Space-only commutator diagnostics: the localized tail
///   dt ds^2 sum_t sum_s sum_{0<|sigma|<=eps} |v(t,s-sigma)-v(t,s)|^3/sigma^2
/// over the window, plus the direct I_eps = int (v_eps)_s zeta (v_eps^2 -
/// v^2 * rho_eps) with a plateau zeta inscribed in the window.
struct SpaceTimeWindow {
    int i0 = 0, j0 = 0, ni = 0, nj = 0;  // t rows, s cols
    static SpaceTimeWindow from_rect(const SpaceTimeGrid& g, double tlo, double slo, double thi,
                                     double shi);
};

struct CetSpaceTimeReport {
    double bound = 0;
    double i_eps = 0;
    double c_used = 0;
    bool within_bound = false;  // |i_eps| <= C * bound
};

CetSpaceTimeReport cet_spacetime(const SpaceTimeField& v, double eps,
                                 const SpaceTimeWindow& window,
                                 const SpaceTimeBump* zeta = nullptr,
                                 double c_constant = 2.0);

/// Max one-sided difference quotient (v(t,s') - v(t,s))/(s'-s), s' > s, on
/// the slice nearest to time t. Equals the max over adjacent pairs.
double oleinik_check(const SpaceTimeField& v, double t);

struct BurgersReport {
    double weak = 0;
    double energy = 0;
    std::vector<double> kruzhkov_k;
    std::vector<double> kruzhkov;
    double oleinik = 0;
    double lipschitz_estimate = 0;
    bool entropy_solution = false;
    bool shock_free = false;
};

struct BurgersVerdictOptions {
    double shock_free_tol = 0.01;
    double entropy_tol = 0.005;
    int kruzhkov_count = 9;
};

BurgersReport classify_burgers(const SpaceTimeField& v, const SpaceTimeBump& zeta,
                               const BurgersVerdictOptions& opt = {});

/// BURG1 file: header `BURG1 nt ns t0 s0 dt ds`, then nt*ns values row-major.
void write_spacetime(const SpaceTimeField& v, const std::string& path);
SpaceTimeField read_spacetime(const std::string& path);

} // namespace eiko

#endif
