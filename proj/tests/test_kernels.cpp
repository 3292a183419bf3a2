#include "test_util.hpp"

using namespace osov;
using osov::test::context;
using osov::test::random_points;

TEST(Kernels, TransferBatchMatchesSerial) {
    const VerifyContext ctx = context(3, 1);
    const auto pts = random_points(6, 5);
    const auto a = transfer_batch(ctx.p, ctx.b, pts, Exec::serial);
    const auto b = transfer_batch(ctx.p, ctx.b, pts, Exec::openmp);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Kernels, AMinusActionBatchMatchesDirect) {
    const VerifyContext ctx = context(2, 2);
    const Gauge g(ctx.p, ctx.b, ctx.alpha);
    const cd beta = triangular_gauge(ctx.p, ctx.b, ctx.alpha).beta;
    const SovBasis l = left_sov_basis(g, beta - 2.0);
    const auto pts = random_points(3, 6);
    const auto s = a_minus_action_batch(g, l, pts, Exec::serial);
    const auto o = a_minus_action_batch(g, l, pts, Exec::openmp);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_EQ(s[i], o[i]);
        EXPECT_LT(rel_diff(s[i], l.states * g.A(pts[i], beta)), 1e-9);
    }
}

TEST(Kernels, NewtonMultiSeedIsDeterministic) {
    const VerifyContext ctx = context(3, 3);
    const QuadraticSystem sys = assemble_quadratic_system(build_ansatz(ctx.p, ctx.b));
    const auto seeds = random_seeds(sys, 64, 9);
    const NewtonReport a = newton_multi_seed(sys, seeds, {}, Exec::serial);
    const NewtonReport b = newton_multi_seed(sys, seeds, {}, Exec::openmp);
    const NewtonReport c = solve_spectrum_newton(sys, seeds);
    ASSERT_EQ(a.roots.size(), b.roots.size());
    ASSERT_EQ(a.roots.size(), c.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
        EXPECT_EQ(a.roots[i].x, b.roots[i].x);
        EXPECT_EQ(a.roots[i].x, c.roots[i].x);
    }
}

TEST(Kernels, HomotopyParallelMatchesSerial) {
    const VerifyContext ctx = context(3, 4);
    const QuadraticSystem sys = assemble_quadratic_system(build_ansatz(ctx.p, ctx.b));
    const NewtonReport a = homotopy_all_paths(sys, 2, {}, Exec::serial);
    const NewtonReport b = homotopy_all_paths(sys, 2, {}, Exec::openmp);
    const NewtonReport c = solve_spectrum_homotopy(sys, 2);
    ASSERT_EQ(a.roots.size(), 8u);
    ASSERT_EQ(b.roots.size(), 8u);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(a.roots[i].x, b.roots[i].x);
        EXPECT_EQ(a.roots[i].x, c.roots[i].x);
    }
}

TEST(Kernels, PairScalarCheck) {
    const VerifyContext ctx = context(3, 5);
    const Gauge g(ctx.p, ctx.b, ctx.alpha);
    const cd beta = triangular_gauge(ctx.p, ctx.b, ctx.alpha).beta;
    const cd z = sov_normalization(g, beta - 2.0);
    const PairCheck s = random_pair_scalar_check(g, beta, z, 20, 11, Exec::serial);
    const PairCheck o = random_pair_scalar_check(g, beta, z, 20, 11, Exec::openmp);
    EXPECT_EQ(s.pairs, 20);
    EXPECT_EQ(s.max_rel_error, o.max_rel_error);
    EXPECT_LT(s.max_rel_error, 1e-10);
}

TEST(Kernels, ThreadCountIsPositive) { EXPECT_GE(openmp_threads(), 1); }
