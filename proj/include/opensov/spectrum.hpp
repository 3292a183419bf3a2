#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opensov/sov.hpp"

namespace osov {

// τ(λ) = f(λ) + Σ g_a(λ) x_a, polynomial of degree N+2 in cosh 2λ
struct EigenvalueAnsatz {
    ModelParams p;
    BoundaryParams b;
    cd tau_half;      // τ(η/2)
    cd tau_half_ipi;  // τ(η/2 + iπ/2)
    cd t_inf;         // leading coefficient in cosh 2λ
    std::vector<cd> c0;  // cosh 2ζ_a^{(0)}

    cd f(cd lambda) const;
    cd g(int a, cd lambda) const;  // a = 1..N
    cd tau(cd lambda, const std::vector<cd>& x) const;
};

EigenvalueAnsatz build_ansatz(const ModelParams& p, const BoundaryParams& b);

// 𝐀(λ) = a₊(λ|β−1) A−(λ)
cd coeff_A_big(const Gauge& g, cd beta, cd lambda);
// 𝐃(ζ_a^{(1)}) = d₊(ζ_a^{(1)}|β−1) f_a(β) A−(−ζ_a^{(0)})
cd coeff_D_big_node(const Gauge& g, cd beta, int a);
// det_q K₊(ξₙ) det_q U−(ξₙ) / [sinh(η+2ξₙ) sinh(η−2ξₙ)]
cd quadratic_rhs(const ModelParams& p, const BoundaryParams& b, int n);

// F_n(x) = x_n (Σ_a g_a(ζ_n^{(1)}) x_a + f(ζ_n^{(1)})) − q_n
struct QuadraticSystem {
    EigenvalueAnsatz ansatz;
    CMatrix g_nodes;  // g_a(ζ_n^{(1)}) at (n,a)
    CVector f_nodes;
    CVector q;

    int size() const { return int(q.size()); }
    CVector residual(const CVector& x) const;
    CMatrix jacobian(const CVector& x) const;
};

QuadraticSystem assemble_quadratic_system(const EigenvalueAnsatz& ansatz);

struct SpectrumSolution {
    std::vector<cd> x;
    std::vector<cd> q_ratio;     // Q(ζ_a^{(1)})/Q(ζ_a^{(0)})
    std::vector<cd> qbar_ratio;  // Q̄(ζ_a^{(1)})/Q̄(ζ_a^{(0)})
    double system_residual = 0.0;
    double functional_residual = 0.0;
    double eigen_residual = 0.0;
    int iterations = 0;
    bool converged = false;
    bool spurious = false;
    std::string q_form;
};

struct OracleResult {
    std::vector<SpectrumSolution> solutions;
    CMatrix eigenvectors;  // columns aligned with solutions
    std::vector<cd> probe_eigenvalues;
    cd probe;
    double simplicity_gap = 0.0;  // min |τ_i − τ_j| / max |τ| at the probe
};

// dense diagonalization of T at the probe point; x_a from Rayleigh quotients of T(ζ_a^{(0)})
OracleResult solve_spectrum_oracle(const ModelParams& p, const BoundaryParams& b, cd probe = cd(0.31, 0.17));

struct NewtonOptions {
    double tol = 1e-12;
    int max_iterations = 100;
    double dedup_distance = 1e-7;
};

struct NewtonReport {
    std::vector<SpectrumSolution> roots;  // deduplicated converged roots
    int seeds = 0;
    int converged = 0;
    int singular = 0;
    int max_iterations_used = 0;
};

SpectrumSolution newton_solve(const QuadraticSystem& sys, const std::vector<cd>& seed, const NewtonOptions& opt = {});
NewtonReport solve_spectrum_newton(const QuadraticSystem& sys, const std::vector<std::vector<cd>>& seeds,
                                   const NewtonOptions& opt = {});
// log-uniform modulus about sqrt|q|, uniform phase
std::vector<std::vector<cd>> random_seeds(const QuadraticSystem& sys, int count, std::uint64_t seed);
// deduplicates converged runs in order
NewtonReport collect_roots(std::vector<SpectrumSolution> runs, const NewtonOptions& opt = {});

// Total-degree homotopy (1−t)γ(x∘x − |q|) + tF(x). Each equation is quadratic, so the Bézout
// count 2^N equals the number of roots; path k starts at x_a = ±sqrt|q_a| by the bits of k.
cd homotopy_gamma(std::uint64_t seed);
SpectrumSolution track_homotopy_path(const QuadraticSystem& sys, cd gamma, int path, const NewtonOptions& opt = {});
NewtonReport solve_spectrum_homotopy(const QuadraticSystem& sys, std::uint64_t seed, const NewtonOptions& opt = {});

// max_a |τ(ζ_a^{(0)})τ(ζ_a^{(1)}) − 𝐀(ζ_a^{(1)})𝐀(−ζ_a^{(0)})| / |𝐀𝐀|
double functional_equation_residual(const Gauge& g, cd beta, const EigenvalueAnsatz& ans, const std::vector<cd>& x);

enum class QForm { division, printed };

std::vector<cd> q_ratios(const Gauge& g, cd beta, const std::vector<cd>& x, QForm form);
std::vector<cd> qbar_ratios(const Gauge& g, cd beta, const EigenvalueAnsatz& ans, const std::vector<cd>& x, QForm form);

// Σ_h Π_{h_a=1} ratio_a · V(h) · state(h)
CVector build_right_eigenstate(const SovGrid& grid, const std::vector<cd>& q_ratio, const SovBasis& right);
CRow build_left_eigenstate(const SovGrid& grid, const std::vector<cd>& qbar_ratio, const SovBasis& left);

// max over points of ‖T(λ)v − τ(λ)v‖/‖v‖
double right_eigen_residual(const ModelParams& p, const BoundaryParams& b, const CVector& v, const EigenvalueAnsatz& ans,
                            const std::vector<cd>& x, const std::vector<cd>& points);
double left_eigen_residual(const ModelParams& p, const BoundaryParams& b, const CRow& v, const EigenvalueAnsatz& ans,
                           const std::vector<cd>& x, const std::vector<cd>& points);

// fills q_ratio/qbar_ratio and eigen_residual, trying the division form first
void attach_eigenstates(SpectrumSolution& sol, const Gauge& g, cd beta, const EigenvalueAnsatz& ans,
                        const SovBasis& right_at_beta, const SovBasis& left_at_beta_m2,
                        const std::vector<cd>& points, double tol = 1e-8);

// τ(ζₙ^{(hₙ)})Ψ(h) = 𝐀(ζₙ^{(hₙ)})Ψ(Tₙ⁻h) + 𝐀(−ζₙ^{(hₙ)})Ψ(Tₙ⁺h), Ψ(h) = ⟨β−2,h|v⟩
double baxter_residual(const Gauge& g, cd beta, const EigenvalueAnsatz& ans, const std::vector<cd>& x,
                       const SovBasis& left_at_beta_m2, const CVector& v);

// greedy matching of two multisets; max relative distance
double multiset_distance(std::vector<cd> a, std::vector<cd> b);

}  // namespace osov
