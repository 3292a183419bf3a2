#pragma once

#include <vector>

#include "opensov/spectrum.hpp"

namespace osov {

// coefficients over h: Π_a factor_a(ζ_a^{(h_a)}) · V(h)
struct SeparateState {
    Side side = Side::left;
    cd beta_base;                  // left: ⟨β−2,h|, right: |β,h⟩
    std::vector<Vec2> factors;     // (value at ζ_a^{(0)}, value at ζ_a^{(1)})

    cd coefficient(const SovGrid& grid, const std::vector<int>& h) const;
};

SeparateState random_separate_state(Side side, cd beta, int n_sites, std::uint64_t seed);
SeparateState eigenstate_as_separate(const SpectrumSolution& sol, Side side, cd beta);

// Z(β−2) det_N ℳ, ℳ_ab = Σ_h ω_a(h) ρ_a(h) w_a^{1−h} (η_a^{(h)})^{b−1}
cd scalar_product_det(const ModelParams& p, cd beta, const SeparateState& omega, const SeparateState& rho, cd z_beta_m2);
CMatrix scalar_product_matrix(const ModelParams& p, cd beta, const SeparateState& omega, const SeparateState& rho);

// Σ_h coefficients × closed Gram diagonal
cd scalar_product_direct_sum(const Gauge& g, cd beta, const SeparateState& omega, const SeparateState& rho,
                             cd z_beta_m2);

CRow separate_bra(const SovGrid& grid, const SeparateState& omega, const SovBasis& left_at_beta_m2);
CVector separate_ket(const SovGrid& grid, const SeparateState& rho, const SovBasis& right_at_beta);

}  // namespace osov
