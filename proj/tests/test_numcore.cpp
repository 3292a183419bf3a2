#include "test_util.hpp"

using namespace osov;

TEST(Numcore, PauliAlgebra) {
    const Mat2 x = pauli::x(), y = pauli::y(), z = pauli::z();
    EXPECT_LT((x * y - I_UNIT * z).norm(), 1e-15);
    EXPECT_LT((y * z - I_UNIT * x).norm(), 1e-15);
    EXPECT_LT((x * x - pauli::id()).norm(), 1e-15);
}

TEST(Numcore, KronMatchesIndexFormula) {
    const CMatrix a = CMatrix::Random(2, 3), b = CMatrix::Random(3, 2);
    const CMatrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 6);
    ASSERT_EQ(k.cols(), 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int r = 0; r < 3; ++r)
                for (int s = 0; s < 2; ++s) EXPECT_EQ(k(i * 3 + r, j * 2 + s), a(i, j) * b(r, s));
}

TEST(Numcore, EmbedSiteOrdersFactorsLeftToRight) {
    // site 1 is the leading tensor factor
    const CMatrix e = embed_site(pauli::z(), 1, 3);
    EXPECT_LT((e - kron(pauli::z(), CMatrix::Identity(4, 4))).norm(), 1e-15);
    const CMatrix e3 = embed_site(pauli::x(), 3, 3);
    EXPECT_LT((e3 - kron(CMatrix::Identity(4, 4), pauli::x())).norm(), 1e-15);
}

TEST(Numcore, PartialTraceOfProduct) {
    const CMatrix a = CMatrix::Random(2, 2), b = CMatrix::Random(4, 4);
    EXPECT_LT((partial_trace_aux(kron(a, b)) - a.trace() * b).norm(), 1e-13);
}

TEST(Numcore, AuxBlocksRoundTrip) {
    const CMatrix m = CMatrix::Random(8, 8);
    const AuxBlocks bl = aux_blocks(m);
    EXPECT_EQ(bl.A, m.topLeftCorner(4, 4));
    EXPECT_EQ(bl.D, m.bottomRightCorner(4, 4));
    EXPECT_EQ(from_aux_blocks(bl), m);
}

TEST(Numcore, AuxMultiplicationMatchesKron) {
    const Mat2 o = Mat2::Random();
    const CMatrix m = CMatrix::Random(8, 8);
    EXPECT_LT((aux_left(o, m) - aux_embed(o, 4) * m).norm(), 1e-13);
    EXPECT_LT((aux_right(m, o) - m * aux_embed(o, 4)).norm(), 1e-13);
}

TEST(Numcore, AuxTransposeSwapsOffDiagonalBlocks) {
    const CMatrix m = CMatrix::Random(4, 4);
    const AuxBlocks b = aux_blocks(m), t = aux_blocks(aux_transpose(m));
    EXPECT_EQ(t.B, b.C);
    EXPECT_EQ(t.C, b.B);
    EXPECT_EQ(t.A, b.A);
}

TEST(Numcore, EigDenseUnitColumnsAndResiduals) {
    const CMatrix m = CMatrix::Random(6, 6);
    const EigenDecomposition ed = eig_dense(m);
    ASSERT_EQ(ed.eigenvalues.size(), 6u);
    for (int k = 0; k < 6; ++k) {
        EXPECT_NEAR(ed.right_eigenvectors.col(k).norm(), 1.0, 1e-12);
        EXPECT_LT((m * ed.right_eigenvectors.col(k) - ed.eigenvalues[k] * ed.right_eigenvectors.col(k)).norm(), 1e-12);
        EXPECT_LT(ed.residuals[k], 1e-12);
    }
}

TEST(Numcore, EigDenseRejectsNonSquare) { EXPECT_THROW(eig_dense(CMatrix::Zero(2, 3)), std::invalid_argument); }

TEST(Numcore, RelDiff) {
    const CMatrix a = CMatrix::Identity(3, 3);
    EXPECT_EQ(rel_diff(a, a), 0.0);
    EXPECT_NEAR(rel_diff(a, 2.0 * a), 0.5, 1e-15);
}
