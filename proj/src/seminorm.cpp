#include "eiko/seminorm.hpp"

#include <cmath>
#include <functional>

#include "eiko/util.hpp"

namespace eiko {

namespace {

// Shared pair-sum driver. diff_p(n1, n2) returns |u(x)-u(y)|^p for the two
// row indices into the full grid arrays.
SeminormReport pair_sum(const GridSpec& g, const Window& w, double s, double p,
                        const SeminormOptions& opt,
                        const std::function<double(std::int64_t, std::int64_t)>& diff_p) {
    if (!(s > 0.0 && s < 1.0)) throw ValidationError("seminorm order s must lie in (0,1)");
    if (!(p >= 1.0)) throw ValidationError("seminorm exponent p must be >= 1");
    w.validate(g, 4);

    const double cut = opt.near_diagonal_cut;
    const double expo = 2.0 + s * p;
    const double h4 = g.h * g.h * g.h * g.h;
    SeminormReport rep;
    rep.s = s;
    rep.p = p;
    rep.near_diagonal_cut = cut;
    rep.node_count = std::int64_t(w.ni) * w.nj;

    if (opt.subsample_pairs <= 0) {
        // full sum: one pass per lattice offset, each unordered pair once
        double total = 0.0;
        std::int64_t pairs = 0;
        for (int dl = 0; dl < w.nj; ++dl)
            for (int dk = (dl == 0 ? 1 : -(w.ni - 1)); dk < w.ni; ++dk) {
                double dist = std::hypot(double(dk), double(dl));
                if (dist < cut - 1e-12) continue;
                double wgt = 1.0 / std::pow(dist * g.h, expo);
                double acc = 0.0;
                int ilo = std::max(0, -dk), ihi = w.ni - std::max(0, dk);
                for (int j = 0; j < w.nj - dl; ++j) {
                    std::int64_t base = g.index(w.i0, w.j0 + j);
                    std::int64_t shif = g.index(w.i0 + dk, w.j0 + j + dl);
                    for (int i = ilo; i < ihi; ++i) acc += diff_p(base + i, shif + i);
                    pairs += ihi - ilo;
                }
                total += wgt * acc;
            }
        rep.value = 2.0 * total * h4;  // ordered pairs
        rep.pairs_used = 2 * pairs;
        return rep;
    }

    // stratified subsample: every window node x gets m random partners
    const std::int64_t nwin = rep.node_count;
    const std::int64_t m = std::max<std::int64_t>(1, (opt.subsample_pairs + nwin - 1) / nwin);
    SplitMix64 rng(opt.seed);
    const int cutr = static_cast<int>(std::ceil(cut));
    double total = 0.0, var_acc = 0.0;
    std::int64_t pairs = 0;
    for (int j = 0; j < w.nj; ++j)
        for (int i = 0; i < w.ni; ++i) {
            // valid partner count: window nodes minus the near-diagonal disc
            std::int64_t excluded = 0;
            for (int dl = -cutr; dl <= cutr; ++dl)
                for (int dk = -cutr; dk <= cutr; ++dk) {
                    if (std::hypot(double(dk), double(dl)) >= cut - 1e-12) continue;
                    int ii = i + dk, jj = j + dl;
                    if (ii >= 0 && ii < w.ni && jj >= 0 && jj < w.nj) ++excluded;
                }
            std::int64_t valid = nwin - excluded;
            if (valid <= 0) continue;
            std::int64_t nx = g.index(w.i0 + i, w.j0 + j);
            double sum_f = 0.0, sum_f2 = 0.0;
            std::int64_t got = 0;
            for (std::int64_t t = 0; t < m; ++t) {
                for (int tries = 0; tries < 64; ++tries) {
                    std::int64_t r = static_cast<std::int64_t>(rng.below(std::uint64_t(nwin)));
                    int yi = int(r % w.ni), yj = int(r / w.ni);
                    double dist = std::hypot(double(yi - i), double(yj - j));
                    if (dist < cut - 1e-12) continue;
                    std::int64_t ny = g.index(w.i0 + yi, w.j0 + yj);
                    double f = diff_p(nx, ny) / std::pow(dist * g.h, expo);
                    sum_f += f;
                    sum_f2 += f * f;
                    ++got;
                    break;
                }
            }
            if (got == 0) continue;
            double mean = sum_f / got;
            total += double(valid) * mean;
            if (got > 1) {
                double var = (sum_f2 - got * mean * mean) / (got - 1);
                var_acc += double(valid) * double(valid) * var / got;
            }
            pairs += got;
        }
    rep.value = total * h4;
    rep.pairs_used = pairs;
    if (m > 1) rep.stderr_estimate = std::sqrt(var_acc) * h4;
    return rep;
}

} // namespace

SeminormReport gagliardo_seminorm(const GridField2& u, double s, double p, const Window& window,
                                  const SeminormOptions& opt) {
    const auto& v = u.values;
    return pair_sum(u.spec, window, s, p, opt, [&](std::int64_t a, std::int64_t b) {
        double d1 = v(a, 0) - v(b, 0);
        double d2 = v(a, 1) - v(b, 1);
        return std::pow(d1 * d1 + d2 * d2, 0.5 * p);
    });
}

SeminormReport gagliardo_seminorm(const GridScalar& f, double s, double p, const Window& window,
                                  const SeminormOptions& opt) {
    const auto& v = f.values;
    return pair_sum(f.spec, window, s, p, opt, [&](std::int64_t a, std::int64_t b) {
        return std::pow(std::abs(v[a] - v[b]), p);
    });
}

SeminormReport gagliardo_seminorm_1d(const Eigen::ArrayXd& v, double ds, double s, double p,
                                     double near_diagonal_cut) {
    if (!(s > 0.0 && s < 1.0)) throw ValidationError("seminorm order s must lie in (0,1)");
    if (!(p >= 1.0)) throw ValidationError("seminorm exponent p must be >= 1");
    if (v.size() < 4) throw ValidationError("1-D seminorm needs at least 4 samples");
    const std::int64_t n = v.size();
    const double expo = 1.0 + s * p;
    SeminormReport rep;
    rep.s = s;
    rep.p = p;
    rep.near_diagonal_cut = near_diagonal_cut;
    rep.node_count = n;
    double total = 0.0;
    std::int64_t pairs = 0;
    for (std::int64_t gap = std::max<std::int64_t>(1, std::int64_t(std::ceil(near_diagonal_cut - 1e-12)));
         gap < n; ++gap) {
        double wgt = 1.0 / std::pow(gap * ds, expo);
        double acc = 0.0;
        for (std::int64_t i = 0; i + gap < n; ++i) acc += std::pow(std::abs(v[i + gap] - v[i]), p);
        total += wgt * acc;
        pairs += n - gap;
    }
    rep.value = 2.0 * total * ds * ds;
    rep.pairs_used = 2 * pairs;
    return rep;
}

double cet_bound(const GridField2& u, double eps, const Window& w) {
    const GridSpec& g = u.spec;
    if (eps < 2.0 * g.h - 1e-12 * g.h) throw ValidationError("unresolvable mollifier: eps < 2h");
    w.validate(g, 1);
    const int K = static_cast<int>(std::floor(eps / g.h + 1e-12));
    if (w.i0 - K < 0 || w.j0 - K < 0 || w.i0 + w.ni - 1 + K > g.nx - 1 ||
        w.j0 + w.nj - 1 + K > g.ny - 1)
        throw ValidationError("cet_bound window must sit at distance >= eps from the boundary");

    struct Off {
        int k, l;
        double wgt;
    };
    std::vector<Off> offs;
    for (int l = -K; l <= K; ++l)
        for (int k = -K; k <= K; ++k) {
            if (k == 0 && l == 0) continue;
            double d = std::hypot(double(k), double(l)) * g.h;
            if (d > eps * (1.0 + 1e-12)) continue;
            offs.push_back({k, l, 1.0 / (d * d * d)});
        }
    const auto& v = u.values;
    double total = 0.0;
    for (int j = 0; j < w.nj; ++j) {
        double rowacc = 0.0;
        for (const Off& o : offs) {
            std::int64_t base = g.index(w.i0, w.j0 + j);
            std::int64_t shif = g.index(w.i0 + o.k, w.j0 + j + o.l);
            double acc = 0.0;
            for (int i = 0; i < w.ni; ++i) {
                double d1 = v(base + i, 0) - v(shif + i, 0);
                double d2 = v(base + i, 1) - v(shif + i, 1);
                double q = d1 * d1 + d2 * d2;
                acc += q * std::sqrt(q);
            }
            rowacc += acc * o.wgt;
        }
        total += rowacc;
    }
    return total * g.h * g.h * g.h * g.h;
}

std::vector<double> eps_ladder(double h, double hi_cells, double lo_cells, double ratio) {
    if (!(hi_cells >= lo_cells && lo_cells >= 2.0))
        throw ValidationError("eps ladder must stay within [2h, hi]");
    std::vector<double> out;
    for (double c = hi_cells; c > lo_cells * (1.0 - 1e-9); c /= ratio) out.push_back(c * h);
    return out;
}

} // namespace eiko
