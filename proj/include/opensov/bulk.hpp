#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opensov/numcore.hpp"

namespace osov {

struct ModelParams {
    int n_sites = 1;
    cd eta{0.0, 0.73};
    std::vector<cd> xi;  // ξ_1..ξ_N

    Eigen::Index dim() const { return Eigen::Index(1) << n_sites; }
};

struct BoundaryParams {
    cd zeta_m, kappa_m, tau_m;
    cd zeta_p, kappa_p, tau_p;
    cd alpha_m, beta_m, alpha_p, beta_p;
};

// fills α±, β± from ζ±, κ± (principal arcsinh branch)
BoundaryParams make_boundary(cd zeta_m, cd kappa_m, cd tau_m, cd zeta_p, cd kappa_p, cd tau_p);

// residual of sinh α cosh β = sinh ζ/2κ, cosh α sinh β = cosh ζ/2κ for both ends
double alpha_beta_residual(const BoundaryParams& b);

// ξ_a ≠ ξ_b + rη mod iπ, r ∈ {-1,0,1}; returns a description of the first violation
std::optional<std::string> check_esov(const ModelParams& p, double tol = 1e-10);

// x ≡ 0 mod iπ within tol
bool zero_mod_ipi(cd x, double tol);

CMatrix r_matrix(cd lambda, cd eta);

// R_{0N}(λ-ξ_N-η/2) ... R_{01}(λ-ξ_1-η/2), auxiliary factor leftmost
CMatrix monodromy(const ModelParams& p, cd lambda);
CMatrix monodromy_hat(const ModelParams& p, cd lambda);

// right-multiplies m (acting on aux ⊗ sites) by R_{0n}(mu)
void apply_r_right(CMatrix& m, int site, int n_sites, cd mu, cd eta);

cd coeff_a(const ModelParams& p, cd lambda);
cd coeff_d(const ModelParams& p, cd lambda);
cd coeff_g(const BoundaryParams& b, int sign, cd eta, cd lambda);
cd coeff_A_minus(const ModelParams& p, const BoundaryParams& b, cd lambda);
cd coeff_a_h(const ModelParams& p, const std::vector<int>& h, cd lambda);
cd qdet_m(const ModelParams& p, cd lambda);

}  // namespace osov
