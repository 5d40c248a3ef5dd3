#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace robustrec {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Every floating-point threshold used anywhere in the library, in one place.
///
/// Exact arithmetic never has to decide what "zero" means; floating point
/// does, and the answer is policy. These four knobs are that policy.
struct ToleranceConfig {
  /// Relative singular-value cutoff for rank decisions: sigma_i is treated as
  /// zero when sigma_i <= rank_rel * sigma_max. The value 0 selects the
  /// standard shape-dependent default max(rows, cols) * machine epsilon.
  double rank_rel = 0.0;

  /// Absolute cutoff below which an eigenvalue of the accumulator C counts as
  /// zero. C is a sum of orthogonal projectors, so its nonzero eigenvalues
  /// stay bounded away from zero at desk scale; an absolute cutoff separates
  /// cleanly. Raise it for badly conditioned inputs.
  double eig_zero = 1e-10;

  /// Entry-magnitude cutoff defining the numerical support of a vector.
  double supp_abs = 1e-9;

  /// Relative residual cutoff deciding whether a linear system is consistent:
  /// the system M x = b counts as solvable when the least-squares residual is
  /// at most consist_rel * (1 + ||b||).
  double consist_rel = 1e-9;

  /// Effective rank cutoff (relative to sigma_max) for a matrix of the given
  /// shape.
  double rank_cutoff(Index rows, Index cols) const;

  /// Throws std::invalid_argument if any threshold is out of range.
  void validate() const;
};

/// An orthonormal set of vectors in R^ambient_dim, stored as the columns of
/// `vectors` (ambient_dim x count). The set may be empty.
struct OrthonormalBasis {
  Index ambient_dim = 0;
  Matrix vectors;

  Index count() const { return vectors.cols(); }
  bool empty() const { return vectors.cols() == 0; }

  static OrthonormalBasis empty_basis(Index ambient_dim);
  static OrthonormalBasis identity(Index ambient_dim);
};

/// True iff all columns are unit length and pairwise orthogonal within `tol`,
/// and count <= ambient_dim.
bool is_orthonormal(const OrthonormalBasis& basis, double tol = 1e-12);

/// Largest absolute entry; 0 for empty matrices.
double max_abs(const Matrix& M);

}  // namespace robustrec
