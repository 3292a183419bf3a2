#pragma once

#include <string>
#include <vector>

#include "opensov/bulk.hpp"

namespace osov {

Mat2 k_scalar(cd lambda, cd zeta, cd kappa, cd tau, cd eta);
Mat2 k_minus(const ModelParams& p, const BoundaryParams& b, cd lambda);
Mat2 k_plus(const ModelParams& p, const BoundaryParams& b, cd lambda);  // K(λ+η; ζ+,κ+,τ+)

cd qdet_k_minus(const ModelParams& p, const BoundaryParams& b, cd lambda);
cd qdet_k_plus(const ModelParams& p, const BoundaryParams& b, cd lambda);

CMatrix u_minus(const ModelParams& p, const BoundaryParams& b, cd lambda);
CMatrix u_plus(const ModelParams& p, const BoundaryParams& b, cd lambda);

cd qdet_u_minus(const ModelParams& p, const BoundaryParams& b, cd lambda);
// A(ελ+η/2)A(η/2-ελ) + B(ελ+η/2)C(η/2-ελ), times sinh(2λ-2η); form 2 uses D,D,C,B
CMatrix qdet_u_minus_operator(const ModelParams& p, const BoundaryParams& b, cd lambda, int eps, int form);

CMatrix transfer_matrix(const ModelParams& p, const BoundaryParams& b, cd lambda);
CMatrix transfer_matrix_plus(const ModelParams& p, const BoundaryParams& b, cd lambda);

// tr over aux of K ⋅ U with U given as a full (2d)x(2d) matrix
CMatrix trace_k_u(const Mat2& k, const CMatrix& u);

CMatrix hamiltonian_direct(int n_sites, cd eta, const BoundaryParams& b);
// prefactor · dT/dλ at η/2, central differences with one Richardson step
CMatrix hamiltonian_from_transfer(const ModelParams& p, const BoundaryParams& b, double step_scale = 1e-3);
// ξ_n = δ n, two δ values combined by Richardson extrapolation
CMatrix hamiltonian_homogeneous_limit(int n_sites, cd eta, const BoundaryParams& b, double delta = 1e-4);
CMatrix traceless(const CMatrix& m);

enum class Regime { massless, massive };

struct HermiticityReport {
    bool conforms = false;  // parameters satisfy the regime reality conditions
    double u_minus_residual = 0.0;
    double u_plus_residual = 0.0;
    double transfer_residual = 0.0;
    bool hermitian(double tol) const {
        return u_minus_residual < tol && u_plus_residual < tol && transfer_residual < tol;
    }
};

// massless: η, ζ±, τ± imaginary; κ±, ξ real.  massive: η, ζ±, κ± real; τ±, ξ imaginary.
bool regime_conforms(const ModelParams& p, const BoundaryParams& b, Regime r, double tol = 1e-12);
HermiticityReport check_hermiticity(const ModelParams& p, const BoundaryParams& b, Regime r,
                                    const std::vector<cd>& sample_points);

}  // namespace osov
