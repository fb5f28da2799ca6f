#ifndef EIKO_CONFIG_HPP
#define EIKO_CONFIG_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

namespace eiko {

inline constexpr const char* kToolVersion = "0.1.0";

/// Every numerical threshold with a stated default lives here; a run is
/// reproducible from its config plus input files alone.
struct Tolerances {
    double unit_tol = 1e-12;
    double near_diagonal_cut = 1.0;     // gagliardo pair exclusion, in h
    double cluster_tol_cells = 4.0;     // classify intersection cluster, in h
    double fit_tol_cells = 8.0;         // classify vortex fit residual cap, in h
    double lipschitz_slack = 0.10;
    double cet_spacetime_c = 2.0;       // |I_eps| <= C * bound, calibrated on rarefaction
    double shock_free_tol = 0.01;
    double entropy_tol = 0.005;
};

struct RunConfig {
    Tolerances tol;
    std::uint64_t seed = 20260809;
    int threads = 0;  // 0 = EIKO_THREADS or hardware
    int fan_n = 64;
    int kruzhkov_count = 9;

    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);

    /// FNV-1a of the canonical serialization; embedded in every report.
    std::string hash() const;
};

} // namespace eiko

#endif
