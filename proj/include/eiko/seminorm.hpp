#ifndef EIKO_SEMINORM_HPP
#define EIKO_SEMINORM_HPP

#include <optional>
#include <vector>

#include "eiko/grid.hpp"

namespace eiko {

struct SeminormReport {
    double s = 0;
    double p = 0;
    double value = 0;
    double near_diagonal_cut = 1.0;  // delta: pairs |x-y| < delta*h excluded
    std::int64_t node_count = 0;
    std::int64_t pairs_used = 0;
    std::optional<double> stderr_estimate;  // only for subsampled sums
};

struct SeminormOptions {
    double near_diagonal_cut = 1.0;
    std::int64_t subsample_pairs = 0;  // 0 = full O(N^2) sum
    std::uint64_t seed = 20260809;
};

/// Gagliardo double sum over window node pairs (ordered pairs, both
/// orientations):
///   h^4 sum_{x != y} |u(x)-u(y)|^p / |x-y|^(2+sp).
/// Requires 0 < s < 1, p >= 1 and a window of at least 4x4 nodes.
SeminormReport gagliardo_seminorm(const GridField2& u, double s, double p, const Window& window,
                                  const SeminormOptions& opt = {});
SeminormReport gagliardo_seminorm(const GridScalar& f, double s, double p, const Window& window,
                                  const SeminormOptions& opt = {});

/// 1-D analogue with weight |s-sigma|^(1+sp):
///   ds^2 sum_{i != j} |v_i - v_j|^p / |s_i - s_j|^(1+sp).
SeminormReport gagliardo_seminorm_1d(const Eigen::ArrayXd& v, double ds, double s, double p,
                                     double near_diagonal_cut = 1.0);

/// Localized Gagliardo tail of the commutator estimate:
///   h^4 sum_{x in window} sum_{0 < |y-x| <= eps} |u(x)-u(y)|^3 / |y-x|^3,
/// with y ranging over the full grid. The window must sit at distance
/// >= eps from the boundary.
double cet_bound(const GridField2& u, double eps, const Window& window);

/// Geometric eps ladder {hi*h, hi*h/ratio, ...} down to lo*h (inclusive).
std::vector<double> eps_ladder(double h, double hi_cells = 8.0, double lo_cells = 2.0,
                               double ratio = std::sqrt(2.0));

} // namespace eiko

#endif
