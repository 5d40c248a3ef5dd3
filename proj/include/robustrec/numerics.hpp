#pragma once

#include "robustrec/types.hpp"

namespace robustrec {

/// Result of a minimum-norm least-squares solve.
struct LeastSquaresSolution {
  Vector x;
  double residual_norm = 0.0;
};

/// Orthonormal basis of {v : M v = 0}, decided by singular values
/// sigma_i <= cutoff * sigma_max. A zero (or row-less) matrix yields the full
/// identity-spanned basis. Basis vectors follow the sign convention below.
OrthonormalBasis kernel_basis(const Matrix& M, const ToleranceConfig& tol);

/// Orthonormal basis of the row space of M (equivalently, the orthogonal
/// complement of its kernel).
OrthonormalBasis rowspan_basis(const Matrix& M, const ToleranceConfig& tol);

/// Orthonormal basis of the orthogonal complement of span(B).
OrthonormalBasis orthogonal_complement(const OrthonormalBasis& B,
                                       const ToleranceConfig& tol);

/// P = sum_i b_i b_i^T, the orthogonal projector onto span(B). Built as a
/// symmetric rank update, so the result is exactly symmetric.
Matrix projector_onto_span(const OrthonormalBasis& B);

/// The zero and nonzero eigenspaces of a symmetric positive-semidefinite
/// matrix, split at the absolute threshold tol.eig_zero.
struct EigenspaceSplit {
  OrthonormalBasis zero;     // eigenvectors with lambda < eig_zero
  OrthonormalBasis nonzero;  // eigenvectors with lambda >= eig_zero
};

/// Eigendecomposition split of C. Throws NonSymmetricInput if
/// ||C - C^T||_max > 1e-12 * (1 + ||C||_max).
EigenspaceSplit split_eigenspaces(const Matrix& C, const ToleranceConfig& tol);

/// Orthonormal basis of the eigenspace of C with eigenvalue below
/// tol.eig_zero. Throws NonSymmetricInput on asymmetric C.
OrthonormalBasis zero_eigenspace(const Matrix& C, const ToleranceConfig& tol);

/// Minimum-Euclidean-norm least-squares solution of M x = b, with the
/// residual ||M x - b||_2.
LeastSquaresSolution min_norm_solve(const Matrix& M, const Vector& b,
                                    const ToleranceConfig& tol);

/// Number of singular values above cutoff * sigma_max.
Index numerical_rank(const Matrix& M, const ToleranceConfig& tol);

/// Flips each column so that its first entry of magnitude > 1e-12 is
/// positive. Decompositions are sign-ambiguous per vector; fixing the sign
/// makes results reproducible given identical input bits.
void fix_sign_convention(Matrix& vectors);

}  // namespace robustrec
