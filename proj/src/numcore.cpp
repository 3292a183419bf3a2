#include "opensov/numcore.hpp"

#include <cmath>

namespace osov {

namespace pauli {
Mat2 id() { return Mat2::Identity(); }
Mat2 x() {
    Mat2 m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}
Mat2 y() {
    Mat2 m;
    m << 0.0, -I_UNIT, I_UNIT, 0.0;
    return m;
}
Mat2 z() {
    Mat2 m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}
}  // namespace pauli

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix embed_site(const CMatrix& op2, int site, int n_sites) {
    if (op2.rows() != 2 || op2.cols() != 2) throw std::invalid_argument("embed_site: op must be 2x2");
    if (site < 1 || site > n_sites) throw std::out_of_range("embed_site: site out of range");
    const Eigen::Index left = Eigen::Index(1) << (site - 1);
    const Eigen::Index right = Eigen::Index(1) << (n_sites - site);
    return kron(kron(CMatrix::Identity(left, left), op2), CMatrix::Identity(right, right));
}

CMatrix partial_trace_aux(const CMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw std::invalid_argument("partial_trace_aux: odd or non-square dimension");
    const Eigen::Index d = m.rows() / 2;
    return m.topLeftCorner(d, d) + m.bottomRightCorner(d, d);
}

EigenDecomposition eig_dense(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eig_dense: matrix not square");
    if (m.rows() > 4096) throw std::invalid_argument("eig_dense: dimension above 4096");
    Eigen::ComplexEigenSolver<CMatrix> es(m, true);
    if (es.info() != Eigen::Success)
        throw numeric_error("eig_dense: no convergence after " + std::to_string(es.getMaxIterations()) +
                            " iterations per eigenvalue");
    EigenDecomposition out;
    const Eigen::Index n = m.rows();
    out.right_eigenvectors = es.eigenvectors();
    out.eigenvalues.resize(n);
    out.residuals.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        CVector v = out.right_eigenvectors.col(i);
        v.normalize();
        out.right_eigenvectors.col(i) = v;
        out.eigenvalues[i] = es.eigenvalues()(i);
        out.residuals[i] = (m * v - out.eigenvalues[i] * v).norm();
    }
    return out;
}

AuxBlocks aux_blocks(const CMatrix& m) {
    const Eigen::Index d = m.rows() / 2;
    return {m.topLeftCorner(d, d), m.topRightCorner(d, d), m.bottomLeftCorner(d, d), m.bottomRightCorner(d, d)};
}

CMatrix from_aux_blocks(const AuxBlocks& b) {
    const Eigen::Index d = b.A.rows();
    CMatrix m(2 * d, 2 * d);
    m << b.A, b.B, b.C, b.D;
    return m;
}

CMatrix aux_embed(const Mat2& op2, Eigen::Index d) {
    return kron(op2, CMatrix::Identity(d, d));
}

CMatrix aux_transpose(const CMatrix& m) {
    auto b = aux_blocks(m);
    return from_aux_blocks({b.A, b.C, b.B, b.D});
}

CMatrix aux_left(const Mat2& op2, const CMatrix& m) {
    const Eigen::Index d = m.rows() / 2;
    CMatrix out(m.rows(), m.cols());
    out.topRows(d) = op2(0, 0) * m.topRows(d) + op2(0, 1) * m.bottomRows(d);
    out.bottomRows(d) = op2(1, 0) * m.topRows(d) + op2(1, 1) * m.bottomRows(d);
    return out;
}

CMatrix aux_right(const CMatrix& m, const Mat2& op2) {
    const Eigen::Index d = m.cols() / 2;
    CMatrix out(m.rows(), m.cols());
    out.leftCols(d) = m.leftCols(d) * op2(0, 0) + m.rightCols(d) * op2(1, 0);
    out.rightCols(d) = m.leftCols(d) * op2(0, 1) + m.rightCols(d) * op2(1, 1);
    return out;
}

double rel_diff(const CMatrix& a, const CMatrix& b) {
    const double s = std::max(a.norm(), b.norm());
    return s == 0.0 ? 0.0 : (a - b).norm() / s;
}

bool all_finite(const CMatrix& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i)
        if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag())) return false;
    return true;
}

}  // namespace osov
