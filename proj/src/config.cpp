#include "eiko/config.hpp"

#include <cstdio>

#include "eiko/errors.hpp"
#include "eiko/util.hpp"

namespace eiko {

nlohmann::json RunConfig::to_json() const {
    return nlohmann::json{
        {"tolerances",
         {{"unit_tol", tol.unit_tol},
          {"near_diagonal_cut", tol.near_diagonal_cut},
          {"cluster_tol_cells", tol.cluster_tol_cells},
          {"fit_tol_cells", tol.fit_tol_cells},
          {"lipschitz_slack", tol.lipschitz_slack},
          {"cet_spacetime_c", tol.cet_spacetime_c},
          {"shock_free_tol", tol.shock_free_tol},
          {"entropy_tol", tol.entropy_tol}}},
        {"seed", seed},
        {"threads", threads},
        {"fan_n", fan_n},
        {"kruzhkov_count", kruzhkov_count},
    };
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig c;
    if (j.contains("tolerances")) {
        const auto& t = j.at("tolerances");
        auto get = [&](const char* key, double& dst) {
            if (t.contains(key)) dst = t.at(key).get<double>();
        };
        get("unit_tol", c.tol.unit_tol);
        get("near_diagonal_cut", c.tol.near_diagonal_cut);
        get("cluster_tol_cells", c.tol.cluster_tol_cells);
        get("fit_tol_cells", c.tol.fit_tol_cells);
        get("lipschitz_slack", c.tol.lipschitz_slack);
        get("cet_spacetime_c", c.tol.cet_spacetime_c);
        get("shock_free_tol", c.tol.shock_free_tol);
        get("entropy_tol", c.tol.entropy_tol);
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    if (j.contains("fan_n")) c.fan_n = j.at("fan_n").get<int>();
    if (j.contains("kruzhkov_count")) c.kruzhkov_count = j.at("kruzhkov_count").get<int>();
    return c;
}

std::string RunConfig::hash() const {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(to_json().dump())));
    return buf;
}

} // namespace eiko
