#include "test_util.hpp"

using namespace osov;
using osov::test::context;

namespace {

struct Fixture {
    VerifyContext ctx;
    Gauge g;
    cd beta;
    EigenvalueAnsatz ans;
    QuadraticSystem sys;
    explicit Fixture(int n, std::uint64_t seed = 1)
        : ctx(context(n, seed)),
          g(ctx.p, ctx.b, ctx.alpha),
          beta(triangular_gauge(ctx.p, ctx.b, ctx.alpha).beta),
          ans(build_ansatz(ctx.p, ctx.b)),
          sys(assemble_quadratic_system(ans)) {}
};

}  // namespace

TEST(Spectrum, AnsatzAnchorsMatchTransferMatrix) {
    for (int n = 1; n <= 4; ++n) {
        const Fixture f(n);
        const cd e = f.ctx.p.eta;
        const CMatrix t = transfer_matrix(f.ctx.p, f.ctx.b, 0.5 * e);
        EXPECT_LT(std::abs(t(0, 0) - f.ans.tau_half) / std::abs(f.ans.tau_half), 1e-11);
        const CMatrix t2 = transfer_matrix(f.ctx.p, f.ctx.b, 0.5 * e + cd(0.0, 0.5 * PI));
        EXPECT_LT(std::abs(t2(0, 0) - f.ans.tau_half_ipi) / std::abs(f.ans.tau_half_ipi), 1e-11);
    }
}

TEST(Spectrum, AnsatzInterpolatesEveryEigenvalue) {
    // τ(λ) = f(λ) + Σ g_a(λ) τ(ζ_a^{(0)}) on each joint eigenvector, at an arbitrary λ
    const Fixture f(3);
    const OracleResult o = solve_spectrum_oracle(f.ctx.p, f.ctx.b);
    const cd mu(0.37, -0.22);
    const CMatrix t = transfer_matrix(f.ctx.p, f.ctx.b, mu);
    for (std::size_t k = 0; k < o.solutions.size(); ++k) {
        const CVector v = o.eigenvectors.col(Eigen::Index(k));
        const cd exact = v.dot(t * v);
        EXPECT_LT(std::abs(f.ans.tau(mu, o.solutions[k].x) - exact) / std::abs(exact), 1e-10);
    }
}

TEST(Spectrum, OneSiteMatchesTwoByTwoDiagonalization) {
    const Fixture f(1);
    const QuadraticSystem& s = f.sys;
    // x (g x + f) = q is a scalar quadratic
    const cd a = s.g_nodes(0, 0), b = s.f_nodes(0), c = -s.q(0);
    const cd disc = std::sqrt(b * b - 4.0 * a * c);
    std::vector<cd> roots{(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)};
    const cd mu(0.31, 0.17);
    std::vector<cd> taus;
    for (cd x : roots) taus.push_back(f.ans.tau(mu, {x}));
    EXPECT_LT(multiset_distance(taus, eig_dense(transfer_matrix(f.ctx.p, f.ctx.b, mu)).eigenvalues), 1e-10);
}

TEST(Spectrum, OracleRootsSolveQuadraticSystem) {
    for (int n = 2; n <= 5; ++n) {
        const Fixture f(n);
        const OracleResult o = solve_spectrum_oracle(f.ctx.p, f.ctx.b);
        ASSERT_EQ(o.solutions.size(), std::size_t(1) << n);
        for (const SpectrumSolution& s : o.solutions) {
            const SpectrumSolution polished = newton_solve(f.sys, s.x);
            EXPECT_TRUE(polished.converged);
            EXPECT_LT(polished.system_residual, 1e-12);
            EXPECT_LT(functional_equation_residual(f.g, f.beta, f.ans, polished.x), 1e-8) << "N=" << n;
        }
        EXPECT_GT(o.simplicity_gap, 1e-6);
    }
}

TEST(Spectrum, HomotopyFindsAllRootsWithoutOracle) {
    for (int n = 1; n <= 5; ++n) {
        const Fixture f(n, 2);
        const NewtonReport rep = solve_spectrum_homotopy(f.sys, 5);
        EXPECT_EQ(rep.roots.size(), std::size_t(1) << n) << "N=" << n;
        const cd mu(-0.41, 0.17);
        std::vector<cd> taus;
        for (const SpectrumSolution& s : rep.roots) taus.push_back(f.ans.tau(mu, s.x));
        EXPECT_LT(multiset_distance(taus, eig_dense(transfer_matrix(f.ctx.p, f.ctx.b, mu)).eigenvalues), 1e-8);
    }
}

TEST(Spectrum, EigenstatesAndBaxterEquations) {
    for (int n = 1; n <= 4; ++n) {
        const Fixture f(n);
        SpectrumRunOptions opt;
        const SpectrumRun run = run_spectrum(f.g, f.beta, opt);
        ASSERT_EQ(run.solutions.size(), std::size_t(1) << n);
        const SovBasis left = left_sov_basis(f.g, f.beta - 2.0);
        for (std::size_t k = 0; k < run.solutions.size(); ++k) {
            const SpectrumSolution& s = run.solutions[k];
            EXPECT_FALSE(s.spurious);
            EXPECT_LT(s.eigen_residual, 1e-8) << "N=" << n << " state " << k;
            EXPECT_LT(baxter_residual(f.g, f.beta, f.ans, run.oracle.solutions[k].x, left,
                                      run.oracle.eigenvectors.col(Eigen::Index(k))),
                      1e-8);
        }
    }
}

TEST(Spectrum, SpuriousRootIsFlagged) {
    const Fixture f(2);
    SpectrumSolution s;
    s.x = {cd(0.3, 0.1), cd(-0.2, 0.4)};
    EXPECT_GT(functional_equation_residual(f.g, f.beta, f.ans, s.x), 1e-3);
}

TEST(Spectrum, MultisetDistance) {
    EXPECT_EQ(multiset_distance({1.0, 2.0}, {2.0, 1.0}), 0.0);
    EXPECT_GT(multiset_distance({1.0, 1.0}, {1.0, 2.0}), 0.1);
    EXPECT_TRUE(std::isinf(multiset_distance({1.0}, {1.0, 2.0})));
}

TEST(Spectrum, SuitePasses) {
    for (int n = 1; n <= 4; ++n) osov::test::expect_all_pass(spectrum_suite(context(n, 3)));
}
