#include "test_util.hpp"

using namespace osov;
using osov::test::random_points;

namespace {

// op4 acting on tensor slots i < j of an n-fold product, assembled from elementary matrices
CMatrix embed_pair(const CMatrix& op4, int i, int j, int n) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    CMatrix out = CMatrix::Zero(dim, dim);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    const cd w = op4(2 * a + c, 2 * b + d);
                    if (w == 0.0) continue;
                    CMatrix e1 = CMatrix::Zero(2, 2), e2 = CMatrix::Zero(2, 2);
                    e1(a, b) = 1.0;
                    e2(c, d) = 1.0;
                    out += w * embed_site(e1, i, n) * embed_site(e2, j, n);
                }
    return out;
}

}  // namespace

TEST(Bulk, RMatrixYangBaxterExplicit) {
    const cd eta(0.0, 0.73);
    for (const cd& l : random_points(5, 11))
        for (const cd& m : random_points(3, 12)) {
            const CMatrix lhs = embed_pair(r_matrix(l - m, eta), 1, 2, 3) * embed_pair(r_matrix(l, eta), 1, 3, 3) *
                                embed_pair(r_matrix(m, eta), 2, 3, 3);
            const CMatrix rhs = embed_pair(r_matrix(m, eta), 2, 3, 3) * embed_pair(r_matrix(l, eta), 1, 3, 3) *
                                embed_pair(r_matrix(l - m, eta), 1, 2, 3);
            EXPECT_LT(rel_diff(lhs, rhs), 1e-13);
            EXPECT_LT(yang_baxter_residual(l, m, eta), 1e-13);
        }
}

TEST(Bulk, RMatrixAtZeroIsPermutation) {
    const cd eta(0.2, 0.5);
    CMatrix perm = CMatrix::Zero(4, 4);
    perm(0, 0) = perm(3, 3) = perm(1, 2) = perm(2, 1) = 1.0;
    EXPECT_LT((r_matrix(0.0, eta) - std::sinh(eta) * perm).norm(), 1e-14);
}

TEST(Bulk, MonodromyMatchesExplicitProduct) {
    for (int n = 1; n <= 3; ++n) {
        const ModelParams p = seeded_model(n, 5);
        for (const cd& l : random_points(3, 20 + n)) {
            CMatrix expect = CMatrix::Identity(Eigen::Index(2) << n, Eigen::Index(2) << n);
            for (int s = n; s >= 1; --s)
                expect = expect * embed_pair(r_matrix(l - p.xi[s - 1] - 0.5 * p.eta, p.eta), 1, s + 1, n + 1);
            EXPECT_LT(rel_diff(monodromy(p, l), expect), 1e-13) << "N=" << n;
        }
    }
}

TEST(Bulk, MonodromyOnReferenceState) {
    // A|↑…↑⟩ = a(λ)|↑…↑⟩, D|↑…↑⟩ = d(λ)|↑…↑⟩, C|↑…↑⟩ = 0
    const ModelParams p = seeded_model(3, 2);
    const cd l(0.3, -0.2);
    const AuxBlocks m = aux_blocks(monodromy(p, l));
    CVector up = CVector::Zero(8);
    up(0) = 1.0;
    EXPECT_LT((m.A * up - coeff_a(p, l) * up).norm(), 1e-13);
    EXPECT_LT((m.D * up - coeff_d(p, l) * up).norm(), 1e-13);
    EXPECT_LT((m.C * up).norm(), 1e-13);
}

TEST(Bulk, MonodromyInverseViaHat) {
    for (int n = 1; n <= 4; ++n) {
        const ModelParams p = seeded_model(n, 3);
        const cd l(0.17, 0.41);
        const CMatrix prod = monodromy_hat(p, 0.5 * p.eta - l) * monodromy(p, l + 0.5 * p.eta);
        const double sgn = n % 2 ? -1.0 : 1.0;
        const CMatrix expect = sgn * qdet_m(p, l) * CMatrix::Identity(prod.rows(), prod.cols());
        EXPECT_LT(rel_diff(prod, expect), 1e-12) << "N=" << n;
    }
}

TEST(Bulk, QuantumDeterminantIsCentral) {
    // A(λ+η/2)D(λ−η/2) − B(λ+η/2)C(λ−η/2) = det_q M(λ)·I
    for (int n = 1; n <= 3; ++n) {
        const ModelParams p = seeded_model(n, 9);
        const cd l(0.2, 0.1);
        const AuxBlocks u = aux_blocks(monodromy(p, l + 0.5 * p.eta)), v = aux_blocks(monodromy(p, l - 0.5 * p.eta));
        const CMatrix q = u.A * v.D - u.B * v.C;
        EXPECT_LT(rel_diff(q, qdet_m(p, l) * CMatrix::Identity(q.rows(), q.cols())), 1e-12) << "N=" << n;
    }
}

TEST(Bulk, BoundaryParametrization) {
    for (std::uint64_t s = 1; s <= 5; ++s) EXPECT_LT(alpha_beta_residual(seeded_boundary(s)), 1e-12);
    const BoundaryParams b = make_boundary(cd(0.3, 0.2), cd(0.8, -0.1), cd(0.1, 0.4), cd(-0.5, 0.3), cd(0.6, 0.2), cd(0.0, 0.1));
    EXPECT_LT(alpha_beta_residual(b), 1e-12);
}

TEST(Bulk, EsovValidator) {
    ModelParams p = seeded_model(3, 1);
    EXPECT_FALSE(check_esov(p).has_value());
    p.xi[1] = p.xi[0];
    auto v = check_esov(p);
    ASSERT_TRUE(v.has_value());
    EXPECT_NE(v->find("E-SOV"), std::string::npos);
    p = seeded_model(3, 1);
    p.xi[2] = p.xi[0] + p.eta + cd(0.0, PI);
    EXPECT_TRUE(check_esov(p).has_value());
}

TEST(Bulk, CoefficientZeros) {
    const ModelParams p = seeded_model(3, 4);
    for (int a = 0; a < 3; ++a) {
        EXPECT_LT(std::abs(coeff_a(p, p.xi[a] - 0.5 * p.eta)), 1e-14);
        EXPECT_LT(std::abs(coeff_d(p, p.xi[a] + 0.5 * p.eta)), 1e-14);
    }
}

TEST(Bulk, SuitePasses) {
    for (int n = 1; n <= 3; ++n) osov::test::expect_all_pass(bulk_suite(osov::test::context(n, 2)));
}
