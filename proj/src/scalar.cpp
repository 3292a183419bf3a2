#include "opensov/scalar.hpp"

#include <random>

namespace osov {

cd SeparateState::coefficient(const SovGrid& grid, const std::vector<int>& h) const {
    cd c = vandermonde(grid, h);
    for (std::size_t a = 0; a < h.size(); ++a) c *= factors[a](h[a]);
    return c;
}

SeparateState random_separate_state(Side side, cd beta, int n_sites, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    SeparateState s{side, beta, {}};
    for (int a = 0; a < n_sites; ++a) {
        Vec2 f;
        f << cd(nd(rng), nd(rng)), cd(nd(rng), nd(rng));
        s.factors.push_back(f);
    }
    return s;
}

SeparateState eigenstate_as_separate(const SpectrumSolution& sol, Side side, cd beta) {
    const std::vector<cd>& r = side == Side::right ? sol.q_ratio : sol.qbar_ratio;
    SeparateState s{side, beta, {}};
    for (const cd& z : r) {
        Vec2 f;
        f << 1.0, z;
        s.factors.push_back(f);
    }
    return s;
}

CMatrix scalar_product_matrix(const ModelParams& p, cd beta, const SeparateState& omega, const SeparateState& rho) {
    const int n = p.n_sites;
    const SovGrid grid(p);
    CMatrix m = CMatrix::Zero(n, n);
    for (int a = 1; a <= n; ++a) {
        const cd w = site_weight(p, beta, a);
        for (int h = 0; h <= 1; ++h) {
            const cd base = omega.factors[a - 1](h) * rho.factors[a - 1](h) * (h == 0 ? w : cd(1.0));
            const cd e = grid.eta_val(a, h);
            cd pw = 1.0;
            for (int c = 0; c < n; ++c, pw *= e) m(a - 1, c) += base * pw;
        }
    }
    return m;
}

cd scalar_product_det(const ModelParams& p, cd beta, const SeparateState& omega, const SeparateState& rho, cd z_beta_m2) {
    return z_beta_m2 * scalar_product_matrix(p, beta, omega, rho).determinant();
}

cd scalar_product_direct_sum(const Gauge& g, cd beta, const SeparateState& omega, const SeparateState& rho,
                             cd z_beta_m2) {
    const int n = g.model().n_sites;
    const SovGrid grid(g.model());
    cd s = 0.0;
    for (int k = 0; k < (1 << n); ++k) {
        const std::vector<int> h = sov_h(k, n);
        s += omega.coefficient(grid, h) * rho.coefficient(grid, h) * gram_diagonal_closed(g, beta, z_beta_m2, h);
    }
    return s;
}

CRow separate_bra(const SovGrid& grid, const SeparateState& omega, const SovBasis& left_at_beta_m2) {
    CRow v = CRow::Zero(left_at_beta_m2.states.cols());
    for (Eigen::Index k = 0; k < left_at_beta_m2.states.rows(); ++k)
        v += omega.coefficient(grid, sov_h(int(k), grid.n_sites)) * left_at_beta_m2.states.row(k);
    return v;
}

CVector separate_ket(const SovGrid& grid, const SeparateState& rho, const SovBasis& right_at_beta) {
    CVector v = CVector::Zero(right_at_beta.states.rows());
    for (Eigen::Index k = 0; k < right_at_beta.states.cols(); ++k)
        v += rho.coefficient(grid, sov_h(int(k), grid.n_sites)) * right_at_beta.states.col(k);
    return v;
}

}  // namespace osov
