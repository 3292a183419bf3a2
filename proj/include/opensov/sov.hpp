#pragma once

#include <array>
#include <string>
#include <vector>

#include "opensov/gauge.hpp"

namespace osov {

// ζ_a^{(h)} = φ_a[ξ_a + (h−1/2)η], a = 1..2N with ξ_{a+N} = ξ_a, φ_a = ±1
struct SovGrid {
    int n_sites = 0;
    cd eta;
    std::vector<cd> xi;

    explicit SovGrid(const ModelParams& p) : n_sites(p.n_sites), eta(p.eta), xi(p.xi) {}
    int phi(int a) const { return a <= n_sites ? 1 : -1; }
    cd zeta(int a, int h) const;
    cd eta_val(int a, int h) const;  // cosh 2[ξ_a + (h−1/2)η], a = 1..N
    double min_separation() const;   // over all pairs (a,h) ≠ (b,k)
};

// h ↔ κ(h) = 1 + Σ 2^{a−1} h_a; index = κ(h) − 1
std::vector<int> sov_h(int index, int n_sites);
int sov_index(const std::vector<int>& h);

cd vandermonde(const SovGrid& grid, const std::vector<int>& h);
// w_a = sinh(2ξ_a+βη)/sinh βη
cd site_weight(const ModelParams& p, cd beta, int a);
cd f_coeff(const ModelParams& p, cd beta, int a);  // f_a(β)

struct SovBasis {
    Side side = Side::left;
    cd beta;
    CMatrix states;  // left: rows ⟨β,h|; right: columns |β,h⟩; ordered by κ(h)
    double condition = 0.0;

    CRow bra(int index) const { return states.row(index); }
    CVector ket(int index) const { return states.col(index); }
};

SovBasis left_sov_basis(const Gauge& g, cd beta);
SovBasis right_sov_basis(const Gauge& g, cd beta);

cd pseudo_eigenvalue_left(const Gauge& g, const std::vector<int>& h, cd lambda, cd beta);   // B_h(λ|β)
cd pseudo_eigenvalue_right(const Gauge& g, const std::vector<int>& h, cd lambda, cd beta);  // B̄_h(λ|β)

// max over h of ‖⟨β,h|ℬ(λ|β) − B_h⟨β−2,h|‖ relative to the larger side; bases at β and β−2
double left_pseudo_eigen_residual(const Gauge& g, const SovBasis& at_beta, const SovBasis& at_beta_m2, cd lambda);
// max over h of ‖ℬ(λ|β)|β,h⟩ − B̄_h|β+2,h⟩‖ relative to the larger side; bases at β and β+2
double right_pseudo_eigen_residual(const Gauge& g, const SovBasis& at_beta, const SovBasis& at_beta_p2, cd lambda);

// coefficients over the basis of ⟨β,h|𝒜−(λ|β+2), resp. 𝒟−(λ|β)|β,h⟩
CVector a_minus_left_coefficients(const Gauge& g, cd beta, const std::vector<int>& h, cd lambda);
CVector d_minus_right_coefficients(const Gauge& g, cd beta, const std::vector<int>& h, cd lambda);
CRow a_minus_left_action(const Gauge& g, const SovBasis& left, const std::vector<int>& h, cd lambda);
CVector d_minus_right_action(const Gauge& g, const SovBasis& right, const std::vector<int>& h, cd lambda);

// Z(β) = V(1,…,1) ⟨β| Π 𝒜−(η/2−ξₙ|β+2)/A−(η/2−ξₙ) |−β⟩
cd sov_normalization(const Gauge& g, cd beta);

// ⟨β−2,h|β,h⟩ = Z(β−2) Π_a w_a^{1−h_a} / V(h)
cd gram_diagonal_closed(const Gauge& g, cd beta, cd z_beta_m2, const std::vector<int>& h);
CMatrix gram_matrix(const SovBasis& left_at_beta_m2, const SovBasis& right_at_beta);
// ‖Σ_h V(h)/(Z w(h)) |β,h⟩⟨β−2,h| − I‖_F
double identity_decomposition_residual(const Gauge& g, const SovBasis& left_at_beta_m2,
                                       const SovBasis& right_at_beta, cd z_beta_m2);

struct ConstructionStatus {
    std::string name;  // I_b, II_b, I_c, II_c
    bool feasible = true;
    std::string violated;  // empty when feasible
};

struct SovApplicability {
    std::array<ConstructionStatus, 4> constructions;
    bool fail_i = false;   // left constructions fail
    bool fail_ii = false;  // right constructions fail
    bool applicable() const { return !(fail_i && fail_ii); }
    std::string verdict() const { return applicable() ? "SOV applicable" : "SOV schema inapplicable"; }
};

// ±(N−1)η ≡ τ−−τ+ + (−1)^k(α−+β−) + (−1)^m(α+−β+) + iπ(k+m) mod 2πi, all k, m
bool fail_sov_condition(const ModelParams& p, const BoundaryParams& b, int sign, double tol = 1e-9);
SovApplicability sov_applicability(const ModelParams& p, const BoundaryParams& b, double tol = 1e-9);

// gauge-level conditions at a fixed (α,β); true when the identity is violated for some k
bool nilpotent_b_left(const ModelParams& p, const BoundaryParams& b, cd alpha, cd beta, double tol = 1e-9);
bool nilpotent_b_right(const ModelParams& p, const BoundaryParams& b, cd alpha, cd beta, double tol = 1e-9);

// A−(η/2−ξₙ) ≠ 0 for every n; returns the first offending site (1-based) or 0
int a_minus_vanishing_site(const ModelParams& p, const BoundaryParams& b, double tol = 1e-10);

}  // namespace osov
