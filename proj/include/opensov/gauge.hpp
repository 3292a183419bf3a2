#pragma once

#include "opensov/reflection.hpp"

namespace osov {

struct GaugeParams {
    cd alpha;
    cd beta;  // base value used by the SOV constructions
};

// (α−β+2)η = −τ₊ + (−1)^k(α₊−β₊) + iπk solved for β
GaugeParams triangular_gauge(const ModelParams& p, const BoundaryParams& b, cd alpha, int k = 0);

enum class Side { left, right };

class Gauge {
public:
    Gauge(ModelParams p, BoundaryParams b, cd alpha);

    const ModelParams& model() const { return p_; }
    const BoundaryParams& boundary() const { return b_; }
    cd alpha() const { return alpha_; }
    cd eta() const { return p_.eta; }

    // columns
    Vec2 X(cd lambda, cd beta) const;
    Vec2 Y(cd lambda, cd beta) const;
    Vec2 X_hat(cd lambda, cd beta_plus2) const;   // X̂(λ|β+2), argument given as β+2
    Vec2 Y_hat(cd lambda, cd beta_minus2) const;  // Ŷ(λ|β−2), argument given as β−2
    // rows
    Row2 X_bar(cd lambda, cd beta) const;
    Row2 Y_bar(cd lambda, cd beta) const;
    Row2 X_tilde(cd lambda, cd beta) const;
    Row2 Y_tilde(cd lambda, cd beta) const;

    Mat2 G_bar(cd lambda, cd beta) const;
    Mat2 G_bar_inv(cd lambda, cd beta) const;
    Mat2 G_tilde(cd lambda, cd beta) const;
    Mat2 G_tilde_inv(cd lambda, cd beta) const;
    Mat2 G_hat(cd lambda, cd beta) const;
    Mat2 G_hat_inv(cd lambda, cd beta) const;

    CMatrix monodromy(cd lambda, cd beta) const;      // M(λ|β)
    CMatrix monodromy_hat(cd lambda, cd beta) const;  // M̂(λ|β)

    // e^{−λ+η/2} G̃⁻¹(λ−η/2|β) U−(λ) G̃(η/2−λ|β); blocks 𝒜(β+2), ℬ(β), 𝒞(β+2), 𝒟(β)
    CMatrix u_minus(cd lambda, cd beta) const;
    // same from the dynamical boundary-bulk decomposition
    CMatrix u_minus_decomposed(cd lambda, cd beta) const;

    CMatrix A(cd lambda, cd beta) const;  // 𝒜−(λ|β)
    CMatrix B(cd lambda, cd beta) const;  // ℬ−(λ|β)
    CMatrix C(cd lambda, cd beta) const;  // 𝒞−(λ|β)
    CMatrix D(cd lambda, cd beta) const;  // 𝒟−(λ|β)

    Mat2 k_minus(cd lambda, cd beta) const;
    Mat2 k_minus_bar(cd lambda, cd beta) const;

    // vector sandwiches
    Mat2 k_plus_sandwich(cd lambda, cd beta, Side side) const;
    // explicit entries; equal e^{λ−η/2} times the sandwich
    Mat2 k_plus_closed(cd lambda, cd beta, Side side) const;

    cd a_plus(cd lambda, cd beta) const;
    cd d_plus(cd lambda, cd beta) const;

    CRow bra_ref(cd beta) const;     // ⟨β|
    CVector ket_ref(cd beta) const;  // |β⟩
    cd bra_norm(cd beta) const;      // ⟨β| = N_β ⟨0| Π Ḡₙ⁻¹(ξₙ|β+N−n)

    // relative residual of T against the four-term gauged decompositions (base β)
    double transfer_decomposition_residual(cd lambda, cd beta, Side side) const;
    // relative residual of the a₊ (left) or d₊ (right) forms
    double transfer_diagonal_form_residual(cd lambda, cd beta, Side side) const;

private:
    void check_beta(cd beta, const char* where) const;

    ModelParams p_;
    BoundaryParams b_;
    cd alpha_;
};

}  // namespace osov
