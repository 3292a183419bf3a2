#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opensov/kernels.hpp"

namespace osov {

struct CheckResult {
    std::string suite;
    std::string name;
    std::string relation;  // human-readable name of the identity being checked
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyContext {
    ModelParams p;
    BoundaryParams b;
    cd alpha;
    int gauge_k = 0;
    std::uint64_t seed = 1;
    double tol_scale = 1.0;
};

// ξ_n = 0.1n + 0.05i n² plus a small seeded jitter; η = 0.73i unless given
ModelParams seeded_model(int n_sites, std::uint64_t seed, cd eta = cd(0.0, 0.73));
// ζ±, κ±, τ± complex Gaussian, scale 0.7
BoundaryParams seeded_boundary(std::uint64_t seed);
cd seeded_alpha(std::uint64_t seed);

// τ− chosen so that the failure condition of the given sign holds with k = m = 0
BoundaryParams engineer_failure(const ModelParams& p, const BoundaryParams& b, int sign);

// parameters obeying the reality conditions of a regime
std::pair<ModelParams, BoundaryParams> regime_params(int n_sites, Regime r, std::uint64_t seed);

double yang_baxter_residual(cd l, cd m, cd eta);
// R₁₂(λ−μ)U₁(λ)R₂₁(λ+μ−η)U₂(μ) vs U₂(μ)R₁₂(λ+μ−η)U₁(λ)R₂₁(λ−μ) for operator-valued 2×2 U
double reflection_residual(const CMatrix& u_l, const CMatrix& u_m, cd l, cd m, cd eta);
double transfer_commutator_residual(const ModelParams& p, const BoundaryParams& b, cd l, cd m);

enum class GaugedRelation { bb, ab_left, bd_db, aa_bc };
double gauged_commutation_residual(const Gauge& g, cd beta, cd l1, cd l2, GaugedRelation rel);
const char* relation_name(GaugedRelation rel);

std::vector<CheckResult> bulk_suite(const VerifyContext& ctx);
std::vector<CheckResult> reflection_suite(const VerifyContext& ctx);
std::vector<CheckResult> gauge_suite(const VerifyContext& ctx);
std::vector<CheckResult> sov_suite(const VerifyContext& ctx);
std::vector<CheckResult> spectrum_suite(const VerifyContext& ctx);
std::vector<CheckResult> scalar_suite(const VerifyContext& ctx);
// one-sided relations, for parameter sets where only one construction is feasible
std::vector<CheckResult> left_construction_suite(const VerifyContext& ctx);
std::vector<CheckResult> right_construction_suite(const VerifyContext& ctx);

const std::vector<std::string>& suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const VerifyContext& ctx);

struct SpectrumRunOptions {
    bool newton_only = false;
    int seeds_per_state = 50;  // random-cloud seeds per expected root
    std::uint64_t seed = 1;
    cd probe{0.31, 0.17};
    std::vector<cd> eigen_points{{0.21, 0.13}, {-0.37, 0.29}, {0.64, -0.18}, {0.12, 0.47}, {-0.28, -0.55}};
    std::vector<cd> mu_points{{0.11, 0.23}, {-0.41, 0.17}, {0.52, -0.39}};
};

struct SpectrumRun {
    cd beta;
    EigenvalueAnsatz ansatz;
    OracleResult oracle;
    NewtonReport newton;    // seeded Newton: oracle seeds, or the random cloud when newton_only
    NewtonReport homotopy;  // newton_only: total-degree homotopy paths
    std::vector<SpectrumSolution> solutions;  // oracle-seeded, or deduplicated cloud roots
    std::vector<double> oracle_match;         // per solution: min relative distance of τ(μ) to the oracle spectrum
    double multiset_distance_max = 0.0;       // worst over mu_points; infinity on count mismatch
};

SpectrumRun run_spectrum(const Gauge& g, cd beta, const SpectrumRunOptions& opt = {});

}  // namespace osov
