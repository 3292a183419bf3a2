#include "test_util.hpp"

using namespace osov;
using osov::test::random_points;

TEST(Reflection, ScalarKSolvesReflectionEquation) {
    const BoundaryParams b = seeded_boundary(3);
    const ModelParams p = seeded_model(1, 3);
    const auto pts = random_points(8, 31);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
        const CMatrix kl = k_minus(p, b, pts[i]), km = k_minus(p, b, pts[i + 1]);
        EXPECT_LT(reflection_residual(kl, km, pts[i], pts[i + 1], p.eta), 1e-13);
    }
}

TEST(Reflection, KMatrixAtHalfEtaIsIdentity) {
    const BoundaryParams b = seeded_boundary(4);
    const ModelParams p = seeded_model(1, 4);
    EXPECT_LT((k_minus(p, b, 0.5 * p.eta) - Mat2::Identity()).norm(), 1e-14);
}

TEST(Reflection, DoubleRowMonodromySolvesReflectionEquation) {
    for (int n = 1; n <= 3; ++n) {
        const ModelParams p = seeded_model(n, 6);
        const BoundaryParams b = seeded_boundary(6);
        const cd l(0.23, -0.31), m(-0.14, 0.27);
        EXPECT_LT(reflection_residual(u_minus(p, b, l), u_minus(p, b, m), l, m, p.eta), 1e-11) << "N=" << n;
    }
}

TEST(Reflection, TransferMatricesCommuteAndAreEven) {
    const ModelParams p = seeded_model(4, 8);
    const BoundaryParams b = seeded_boundary(8);
    const auto pts = random_points(6, 41);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
        EXPECT_LT(transfer_commutator_residual(p, b, pts[i], pts[i + 1]), 1e-11);
    for (const cd& l : pts) EXPECT_LT(rel_diff(transfer_matrix(p, b, -l), transfer_matrix(p, b, l)), 1e-11);
}

TEST(Reflection, TransferAnchors) {
    for (int n = 1; n <= 4; ++n) {
        const ModelParams p = seeded_model(n, 2);
        const BoundaryParams b = seeded_boundary(2);
        const CMatrix id = CMatrix::Identity(p.dim(), p.dim());
        const double sgn = n % 2 ? -1.0 : 1.0;
        const cd e = p.eta, ipi2(0.0, 0.5 * PI);
        EXPECT_LT(rel_diff(transfer_matrix(p, b, 0.5 * e), sgn * 2.0 * std::cosh(e) * qdet_m(p, 0.0) * id), 1e-11);
        const cd coth_m = std::cosh(b.zeta_m) / std::sinh(b.zeta_m), coth_p = std::cosh(b.zeta_p) / std::sinh(b.zeta_p);
        const CMatrix t2 = transfer_matrix(p, b, 0.5 * e + ipi2);
        EXPECT_LT(rel_diff(t2, -2.0 * std::cosh(e) * coth_m * coth_p * qdet_m(p, ipi2) * id), 1e-11);
        EXPECT_LT(rel_diff(u_minus(p, b, 0.5 * e), sgn * qdet_m(p, 0.0) * CMatrix::Identity(2 * p.dim(), 2 * p.dim())),
                  1e-11);
    }
}

TEST(Reflection, QuantumDeterminantOperatorIsScalar) {
    const ModelParams p = seeded_model(2, 5);
    const BoundaryParams b = seeded_boundary(5);
    const cd l(0.19, 0.33);
    const CMatrix id = CMatrix::Identity(p.dim(), p.dim());
    for (int eps : {1, -1})
        for (int form : {1, 2})
            EXPECT_LT(rel_diff(qdet_u_minus_operator(p, b, l, eps, form), qdet_u_minus(p, b, l) * id), 1e-11);
}

TEST(Reflection, HamiltonianFromTransferMatchesDirect) {
    for (int n = 2; n <= 3; ++n) {
        const BoundaryParams b = seeded_boundary(7);
        const cd eta(0.0, 0.73);
        const CMatrix ht = traceless(hamiltonian_homogeneous_limit(n, eta, b));
        const CMatrix hd = traceless(hamiltonian_direct(n, eta, b));
        EXPECT_LT(rel_diff(ht, hd), 1e-5) << "N=" << n;
    }
}

TEST(Reflection, HermiticityInBothRegimes) {
    for (Regime r : {Regime::massless, Regime::massive}) {
        const auto [p, b] = regime_params(3, r, 4);
        ASSERT_TRUE(regime_conforms(p, b, r));
        const HermiticityReport h = check_hermiticity(p, b, r, random_points(4, 51));
        EXPECT_TRUE(h.hermitian(1e-10)) << h.u_minus_residual << " " << h.u_plus_residual << " " << h.transfer_residual;
        const CMatrix hd = hamiltonian_direct(3, p.eta, b);
        EXPECT_LT((hd - hd.adjoint()).norm() / hd.norm(), 1e-12);
    }
}

TEST(Reflection, GenericParametersAreNotHermitian) {
    const ModelParams p = seeded_model(2, 1);
    const BoundaryParams b = seeded_boundary(1);
    EXPECT_FALSE(regime_conforms(p, b, Regime::massless));
    EXPECT_FALSE(check_hermiticity(p, b, Regime::massless, random_points(2, 3)).hermitian(1e-6));
}

TEST(Reflection, SuitePasses) {
    for (int n = 1; n <= 3; ++n) osov::test::expect_all_pass(reflection_suite(osov::test::context(n, 3)));
}
