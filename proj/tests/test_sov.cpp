#include "test_util.hpp"

using namespace osov;
using osov::test::context;
using osov::test::random_points;

TEST(Sov, IndexBijection) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k < (1 << n); ++k) {
            const std::vector<int> h = sov_h(k, n);
            ASSERT_EQ(int(h.size()), n);
            EXPECT_EQ(sov_index(h), k);
        }
    EXPECT_EQ(sov_h(1, 3), (std::vector<int>{1, 0, 0}));
}

TEST(Sov, VandermondeOfGrid) {
    const ModelParams p = seeded_model(3, 1);
    const SovGrid grid(p);
    const std::vector<int> h{1, 0, 1};
    cd v = 1.0;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b < a; ++b) v *= grid.eta_val(a, h[a - 1]) - grid.eta_val(b, h[b - 1]);
    EXPECT_LT(std::abs(vandermonde(grid, h) - v), 1e-14 * std::abs(v));
    EXPECT_LT(std::abs(grid.zeta(1, 1) - (p.xi[0] + 0.5 * p.eta)), 1e-15);
    EXPECT_LT(std::abs(grid.zeta(4, 0) + (p.xi[0] - 0.5 * p.eta)), 1e-15);
    EXPECT_GT(grid.min_separation(), 1e-3);
}

TEST(Sov, PseudoEigenRelationsUpToFiveSites) {
    for (int n = 1; n <= 5; ++n) {
        const VerifyContext ctx = context(n, 1);
        const Gauge g(ctx.p, ctx.b, ctx.alpha);
        const cd beta = triangular_gauge(ctx.p, ctx.b, ctx.alpha).beta;
        const SovBasis l = left_sov_basis(g, beta - 2.0), l0 = left_sov_basis(g, beta - 4.0);
        const SovBasis r = right_sov_basis(g, beta), r2 = right_sov_basis(g, beta + 2.0);
        for (const cd& lam : random_points(2, 70 + n)) {
            EXPECT_LT(left_pseudo_eigen_residual(g, l, l0, lam), 1e-9) << "N=" << n;
            EXPECT_LT(right_pseudo_eigen_residual(g, r, r2, lam), 1e-9) << "N=" << n;
        }
    }
}

TEST(Sov, ReferenceStateIsFirstLeftState) {
    const VerifyContext ctx = context(2, 4);
    const Gauge g(ctx.p, ctx.b, ctx.alpha);
    const cd beta(0.9, -0.4);
    const SovBasis l = left_sov_basis(g, beta);
    EXPECT_LT((l.bra(0) - g.bra_ref(beta)).norm(), 1e-14 * g.bra_ref(beta).norm());
    const SovBasis r = right_sov_basis(g, beta);
    EXPECT_LT((r.ket(3) - g.ket_ref(2.0 - beta)).norm(), 1e-14 * g.ket_ref(2.0 - beta).norm());
}

TEST(Sov, GramMatrixAndIdentityDecomposition) {
    for (int n = 1; n <= 4; ++n) {
        const VerifyContext ctx = context(n, 2);
        const Gauge g(ctx.p, ctx.b, ctx.alpha);
        const cd beta = triangular_gauge(ctx.p, ctx.b, ctx.alpha).beta;
        const SovBasis l = left_sov_basis(g, beta - 2.0), r = right_sov_basis(g, beta);
        const cd z = sov_normalization(g, beta - 2.0);
        const CMatrix gram = gram_matrix(l, r);
        for (int k = 0; k < (1 << n); ++k) {
            const cd c = gram_diagonal_closed(g, beta, z, sov_h(k, n));
            EXPECT_LT(std::abs(gram(k, k) - c) / std::abs(c), 1e-8);
        }
        EXPECT_LT(identity_decomposition_residual(g, l, r, z), 1e-9) << "N=" << n;
    }
}

TEST(Sov, ApplicabilityGeneric) {
    const ModelParams p = seeded_model(3, 1);
    const BoundaryParams b = seeded_boundary(1);
    const SovApplicability a = sov_applicability(p, b);
    EXPECT_FALSE(a.fail_i);
    EXPECT_FALSE(a.fail_ii);
    EXPECT_TRUE(a.applicable());
    for (const auto& c : a.constructions) EXPECT_TRUE(c.feasible) << c.name;
}

TEST(Sov, ApplicabilityEngineeredFailures) {
    const ModelParams p = seeded_model(3, 1);
    const BoundaryParams b = seeded_boundary(1);
    const SovApplicability ai = sov_applicability(p, engineer_failure(p, b, +1));
    EXPECT_TRUE(ai.fail_i);
    EXPECT_FALSE(ai.fail_ii);
    EXPECT_TRUE(ai.applicable());
    EXPECT_FALSE(ai.constructions[0].feasible);  // I_b
    EXPECT_TRUE(ai.constructions[1].feasible);   // II_b
    EXPECT_FALSE(ai.constructions[2].feasible);  // I_c
    EXPECT_TRUE(ai.constructions[3].feasible);   // II_c

    const SovApplicability aii = sov_applicability(p, engineer_failure(p, b, -1));
    EXPECT_FALSE(aii.fail_i);
    EXPECT_TRUE(aii.fail_ii);
    EXPECT_TRUE(aii.constructions[0].feasible);
    EXPECT_FALSE(aii.constructions[1].feasible);
}

TEST(Sov, ApplicabilityBothFailuresAtOneSite) {
    // for N = 1 the two conditions coincide
    const ModelParams p = seeded_model(1, 2);
    const SovApplicability a = sov_applicability(p, engineer_failure(p, seeded_boundary(2), +1));
    EXPECT_TRUE(a.fail_i);
    EXPECT_TRUE(a.fail_ii);
    EXPECT_FALSE(a.applicable());
    EXPECT_EQ(a.verdict(), "SOV schema inapplicable");
}

TEST(Sov, EngineeredFailureDegeneratesLeftReference) {
    const ModelParams p = seeded_model(3, 3);
    const BoundaryParams b = engineer_failure(p, seeded_boundary(3), +1);
    const cd alpha = seeded_alpha(3);
    const Gauge g(p, b, alpha);
    const cd beta = triangular_gauge(p, b, alpha).beta;
    EXPECT_TRUE(nilpotent_b_left(p, b, alpha, beta - 2.0));
    const CRow bra = g.bra_ref(beta - 2.0);
    for (const cd& lam : random_points(3, 80)) {
        const CMatrix bb = g.B(lam, beta - 2.0);
        EXPECT_LT((bra * bb).norm() / (bra.norm() * bb.norm()), 1e-12);
    }
}

TEST(Sov, AMinusVanishingDetection) {
    const ModelParams p = seeded_model(2, 1);
    BoundaryParams b = seeded_boundary(1);
    EXPECT_EQ(a_minus_vanishing_site(p, b), 0);
}

TEST(Sov, SuitePasses) {
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t s = 1; s <= 2; ++s) osov::test::expect_all_pass(sov_suite(context(n, s)));
}
