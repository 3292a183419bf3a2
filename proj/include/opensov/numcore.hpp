#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace osov {

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRow = Eigen::RowVectorXcd;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;
using Row2 = Eigen::RowVector2cd;

inline constexpr cd I_UNIT{0.0, 1.0};
inline constexpr double PI = 3.14159265358979323846;

struct EigenDecomposition {
    std::vector<cd> eigenvalues;
    CMatrix right_eigenvectors;  // unit-norm columns
    std::vector<double> residuals;
};

namespace pauli {
Mat2 id();
Mat2 x();
Mat2 y();
Mat2 z();
}  // namespace pauli

CMatrix kron(const CMatrix& a, const CMatrix& b);

// I ⊗ ... ⊗ op2 ⊗ ... ⊗ I, op2 in slot `site` (1-based)
CMatrix embed_site(const CMatrix& op2, int site, int n_sites);

// trace over the leading 2-dim factor
CMatrix partial_trace_aux(const CMatrix& m);

EigenDecomposition eig_dense(const CMatrix& m);

// Auxiliary-space views of a (2d)x(2d) operator: blocks [[A,B],[C,D]].
struct AuxBlocks {
    CMatrix A, B, C, D;
};
AuxBlocks aux_blocks(const CMatrix& m);
CMatrix from_aux_blocks(const AuxBlocks& b);

// op2 ⊗ I_d
CMatrix aux_embed(const Mat2& op2, Eigen::Index d);

// transpose in the auxiliary space only
CMatrix aux_transpose(const CMatrix& m);

// left multiplication by op2 ⊗ I without forming the Kronecker product
CMatrix aux_left(const Mat2& op2, const CMatrix& m);
CMatrix aux_right(const CMatrix& m, const Mat2& op2);

double rel_diff(const CMatrix& a, const CMatrix& b);
bool all_finite(const CMatrix& m);

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace osov
