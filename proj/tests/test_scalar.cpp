#include "test_util.hpp"

using namespace osov;
using osov::test::context;

TEST(Scalar, DeterminantEqualsDirectSum) {
    for (int n = 1; n <= 4; ++n) {
        const VerifyContext ctx = context(n, 1);
        const Gauge g(ctx.p, ctx.b, ctx.alpha);
        const cd beta = triangular_gauge(ctx.p, ctx.b, ctx.alpha).beta;
        const cd z = sov_normalization(g, beta - 2.0);
        for (std::uint64_t s = 0; s < 10; ++s) {
            const SeparateState o = random_separate_state(Side::left, beta, n, 100 + 2 * s);
            const SeparateState r = random_separate_state(Side::right, beta, n, 101 + 2 * s);
            const cd d = scalar_product_det(ctx.p, beta, o, r, z);
            const cd direct = scalar_product_direct_sum(g, beta, o, r, z);
            EXPECT_LT(std::abs(d - direct) / std::abs(direct), 1e-10) << "N=" << n;
        }
    }
}

TEST(Scalar, DeterminantEqualsVectorPairing) {
    const VerifyContext ctx = context(3, 2);
    const Gauge g(ctx.p, ctx.b, ctx.alpha);
    const cd beta = triangular_gauge(ctx.p, ctx.b, ctx.alpha).beta;
    const SovGrid grid(ctx.p);
    const SovBasis l = left_sov_basis(g, beta - 2.0), r = right_sov_basis(g, beta);
    const cd z = sov_normalization(g, beta - 2.0);
    const SeparateState o = random_separate_state(Side::left, beta, 3, 7);
    const SeparateState rho = random_separate_state(Side::right, beta, 3, 8);
    const cd v = (separate_bra(grid, o, l) * separate_ket(grid, rho, r)).value();
    EXPECT_LT(std::abs(scalar_product_det(ctx.p, beta, o, rho, z) - v) / std::abs(v), 1e-8);
}

TEST(Scalar, MatrixIsBilinearInFactors) {
    const VerifyContext ctx = context(2, 3);
    const cd beta(1.1, 0.3);
    SeparateState o = random_separate_state(Side::left, beta, 2, 1);
    const SeparateState r = random_separate_state(Side::right, beta, 2, 2);
    const cd d1 = scalar_product_det(ctx.p, beta, o, r, 1.0);
    o.factors[0] *= cd(2.0, -1.0);
    const cd d2 = scalar_product_det(ctx.p, beta, o, r, 1.0);
    EXPECT_LT(std::abs(d2 - cd(2.0, -1.0) * d1), 1e-12 * std::abs(d2));
}

TEST(Scalar, EigenstatePairingsAreDiagonal) {
    for (int n = 2; n <= 3; ++n) {
        const VerifyContext ctx = context(n, 4);
        const Gauge g(ctx.p, ctx.b, ctx.alpha);
        const cd beta = triangular_gauge(ctx.p, ctx.b, ctx.alpha).beta;
        const cd z = sov_normalization(g, beta - 2.0);
        const SpectrumRun run = run_spectrum(g, beta);
        const std::size_t m = run.solutions.size();
        CMatrix table(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                table(i, j) = scalar_product_det(ctx.p, beta, eigenstate_as_separate(run.solutions[i], Side::left, beta),
                                                 eigenstate_as_separate(run.solutions[j], Side::right, beta), z);
        for (std::size_t i = 0; i < m; ++i) {
            EXPECT_GT(std::abs(table(i, i)), 0.0);
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                EXPECT_LT(std::abs(table(i, j)) / std::sqrt(std::abs(table(i, i) * table(j, j))), 1e-8);
            }
        }
    }
}

TEST(Scalar, SuitePasses) {
    for (int n = 1; n <= 4; ++n) osov::test::expect_all_pass(scalar_suite(context(n, 1)));
}
