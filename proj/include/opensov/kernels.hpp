#pragma once

#include <cstdint>
#include <vector>

#include "opensov/scalar.hpp"

namespace osov {

enum class Exec { serial, openmp };

int openmp_threads();

std::vector<CMatrix> transfer_batch(const ModelParams& p, const BoundaryParams& b, const std::vector<cd>& points,
                                    Exec exec = Exec::openmp);

// row k of entry i: interpolated ⟨β,h_k|𝒜−(λ_i|β+2)
std::vector<CMatrix> a_minus_action_batch(const Gauge& g, const SovBasis& left, const std::vector<cd>& points,
                                          Exec exec = Exec::openmp);

// roots kept in seed order so the result does not depend on scheduling
NewtonReport newton_multi_seed(const QuadraticSystem& sys, const std::vector<std::vector<cd>>& seeds,
                               const NewtonOptions& opt = {}, Exec exec = Exec::openmp);
NewtonReport homotopy_all_paths(const QuadraticSystem& sys, std::uint64_t seed, const NewtonOptions& opt = {},
                                Exec exec = Exec::openmp);

struct PairCheck {
    int pairs = 0;
    double max_rel_error = 0.0;
};

// determinant formula vs direct sum over random separate-state pairs; pair i uses seeds from `seed`+2i
PairCheck random_pair_scalar_check(const Gauge& g, cd beta, cd z_beta_m2, int pairs, std::uint64_t seed,
                                   Exec exec = Exec::openmp);

}  // namespace osov
