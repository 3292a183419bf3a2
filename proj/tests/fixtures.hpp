#pragma once

#include <random>
#include <vector>

#include "opensov/verify.hpp"

namespace osov::test {

inline std::vector<cd> random_points(int n, std::uint64_t seed, double scale = 0.7) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, scale);
    std::vector<cd> out;
    for (int i = 0; i < n; ++i) out.emplace_back(nd(rng), nd(rng));
    return out;
}

inline VerifyContext context(int n, std::uint64_t seed) {
    return VerifyContext{seeded_model(n, seed), seeded_boundary(seed), seeded_alpha(seed), 0, seed, 1.0};
}

}  // namespace osov::test
