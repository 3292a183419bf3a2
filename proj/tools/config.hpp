#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opensov/verify.hpp"

namespace sovchain {

using osov::cd;

struct BoundarySpec {
    cd zeta_m, kappa_m, tau_m;
    cd zeta_p, kappa_p, tau_p;
};

struct RunConfig {
    int n_sites = 3;
    std::uint64_t seed = 1;
    cd eta{0.0, 0.73};
    std::optional<std::vector<cd>> xi;        // seeded when absent
    std::optional<BoundarySpec> boundary;     // seeded when absent
    std::optional<cd> alpha;                  // seeded when absent
    int gauge_k = 0;
    // "fail_i" / "fail_ii": replace τ− so that the corresponding failure condition holds
    std::string engineer;
    std::string suite = "all";
    double tol_scale = 1.0;
    std::string out;
    bool newton_only = false;
    cd probe{0.31, 0.17};
    int sweep_count = 8;
    std::vector<std::pair<int, int>> pairs;  // scalar: empty means the full table
};

nlohmann::json to_json(const RunConfig& c);
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

// invalid input or a violated genericity condition; `condition` names it
struct ConfigError : std::runtime_error {
    std::string condition;
    ConfigError(std::string cond, const std::string& msg) : std::runtime_error(cond + ": " + msg), condition(std::move(cond)) {}
};

struct Resolved {
    osov::ModelParams p;
    osov::BoundaryParams b;
    cd alpha;
    int gauge_k = 0;
    cd beta;
    osov::SovApplicability applicability;

    osov::VerifyContext context(std::uint64_t seed, double tol_scale) const;
};

// fills seeded defaults and applies the engineering option; throws ConfigError
Resolved resolve(const RunConfig& c);

}  // namespace sovchain
