#include "test_util.hpp"

using namespace osov;
using osov::test::context;
using osov::test::random_points;

TEST(Gauge, TriangularGaugeSolvesDefiningRelation) {
    const ModelParams p = seeded_model(2, 1);
    const BoundaryParams b = seeded_boundary(1);
    const cd alpha(0.3, 0.2);
    for (int k : {0, 1, 2, -1}) {
        const GaugeParams gp = triangular_gauge(p, b, alpha, k);
        const double sgn = k % 2 ? -1.0 : 1.0;
        const cd lhs = (gp.alpha - gp.beta + 2.0) * p.eta;
        const cd rhs = -b.tau_p + sgn * (b.alpha_p - b.beta_p) + I_UNIT * PI * double(k);
        EXPECT_LT(std::abs(lhs - rhs), 1e-13) << "k=" << k;
    }
}

TEST(Gauge, TriangularGaugeZeroesUpperEntryForBothBranches) {
    const ModelParams p = seeded_model(2, 3);
    const BoundaryParams b = seeded_boundary(3);
    const cd alpha = seeded_alpha(3);
    const Gauge g(p, b, alpha);
    for (int k : {0, 1}) {
        const cd beta = triangular_gauge(p, b, alpha, k).beta;
        for (const cd& l : random_points(4, 7))
            for (Side s : {Side::left, Side::right}) {
                const Mat2 kk = g.k_plus_closed(l, beta - 1.0, s);
                EXPECT_LT(std::abs(kk(0, 1)) / kk.norm(), 1e-13);
                EXPECT_GT(std::abs(kk(1, 0)) / kk.norm(), 1e-6);
            }
    }
}

TEST(Gauge, GaugedDoubleRowMonodromyIsSimilarityTransform) {
    const ModelParams p = seeded_model(2, 4);
    const BoundaryParams b = seeded_boundary(4);
    const Gauge g(p, b, seeded_alpha(4));
    const cd l(0.21, -0.12), beta(1.3, 0.4), e = p.eta;
    const Eigen::Index d = p.dim();
    const CMatrix expect = std::exp(-l + 0.5 * e) * aux_right(aux_left(g.G_tilde_inv(l - 0.5 * e, beta), u_minus(p, b, l)),
                                                              g.G_tilde(0.5 * e - l, beta));
    EXPECT_LT(rel_diff(g.u_minus(l, beta), expect), 1e-12);
    EXPECT_LT(rel_diff(g.u_minus_decomposed(l, beta), expect), 1e-11);
    // block accessors follow the shifted-argument convention
    EXPECT_LT(rel_diff(g.B(l, beta), g.u_minus(l, beta).topRightCorner(d, d)), 1e-14);
    EXPECT_LT(rel_diff(g.A(l, beta), g.u_minus(l, beta - 2.0).topLeftCorner(d, d)), 1e-14);
}

TEST(Gauge, TransferMatrixIsGaugeInvariant) {
    const ModelParams p = seeded_model(3, 5);
    const BoundaryParams b = seeded_boundary(5);
    const Gauge g(p, b, seeded_alpha(5));
    for (const cd& l : random_points(3, 9))
        for (const cd& beta : random_points(2, 10))
            for (Side s : {Side::left, Side::right}) {
                EXPECT_LT(g.transfer_decomposition_residual(l, beta + 1.0, s), 1e-11);
            }
}

TEST(Gauge, ReferenceStatesAreNormalizable) {
    const ModelParams p = seeded_model(3, 2);
    const BoundaryParams b = seeded_boundary(2);
    const Gauge g(p, b, seeded_alpha(2));
    const cd beta(0.7, 0.3);
    EXPECT_TRUE(all_finite(g.bra_ref(beta)));
    EXPECT_GT(g.bra_ref(beta).norm(), 1e-8);
    EXPECT_GT(g.ket_ref(beta).norm(), 1e-8);
}

TEST(Gauge, CommutationRelationsAsOperatorIdentities) {
    for (int n = 1; n <= 3; ++n) {
        const VerifyContext ctx = context(n, 6);
        const Gauge g(ctx.p, ctx.b, ctx.alpha);
        const auto pts = random_points(4, 60 + n);
        for (int r = 0; r < 4; ++r)
            EXPECT_LT(gauged_commutation_residual(g, cd(1.4, -0.3), pts[0], pts[1], GaugedRelation(r)), 1e-10)
                << relation_name(GaugedRelation(r)) << " N=" << n;
    }
}

TEST(Gauge, SingularGaugeParameterIsRejected) {
    const ModelParams p = seeded_model(1, 1);
    const Gauge g(p, seeded_boundary(1), seeded_alpha(1));
    EXPECT_THROW(g.B(cd(0.1, 0.2), 0.0), numeric_error);
}

TEST(Gauge, SuitePasses) {
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t s = 1; s <= 2; ++s) osov::test::expect_all_pass(gauge_suite(context(n, s)));
}
