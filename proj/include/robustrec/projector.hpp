#pragma once

#include <cstdint>

#include "robustrec/numerics.hpp"
#include "robustrec/types.hpp"

namespace robustrec {

/// A measurement matrix together with the corruption budget: up to q entries
/// of y = A x + e may be adversarially corrupted.
struct ProblemSpec {
  Matrix A;
  int q = 0;

  Index m() const { return A.rows(); }
  Index n() const { return A.cols(); }

  /// Throws DimensionMismatch for empty/non-finite A, BudgetTooLarge unless
  /// 0 <= q and 2q < m.
  void validate() const;
};

/// The robust orthogonal projector U onto the robust subspace
/// R = intersection over all (m-2q)-row submatrices A_T of rowspan(A_T).
///
/// U x is everything about x that survives any q-sparse corruption of the
/// measurements; ker(U) collects the directions an adversary can hide.
struct RobustProjector {
  Matrix U;                     // n x n, symmetric idempotent
  Index rank = 0;               // dim R
  OrthonormalBasis image_basis;   // spans R = range(U)
  OrthonormalBasis kernel_basis;  // spans R^perp = ker(U)
  Index m = 0;
  Index n = 0;
  int q = 0;
  std::uint64_t subsets_processed = 0;
};

struct ProjectorOptions {
  /// Number of worker threads for the subset sweep. Partial accumulators are
  /// reduced in fixed chunk order, so the result is deterministic for a given
  /// thread count.
  int threads = 1;

  /// Stop the sweep once the accumulated kernels already span R^n (the
  /// projector is then certainly zero). Off by default: when it triggers,
  /// subsets_processed reports only the subsets actually visited.
  bool early_exit = false;
};

/// C(m, 2q), the number of row subsets the sweep visits.
std::uint64_t subset_count(Index m, int q);

/// The accumulator C = sum over T of B_T B_T^T, where B_T is an orthonormal
/// kernel basis of A_T and T ranges over all (m-2q)-subsets of [m] in
/// lexicographic order. C is exactly symmetric; its image is Span(S_q^A) and
/// its kernel is the robust subspace.
Matrix ambiguity_span_accumulator(const ProblemSpec& spec,
                                  const ToleranceConfig& tol,
                                  const ProjectorOptions& options = {},
                                  std::uint64_t* subsets_out = nullptr);

/// Computes the robust orthogonal projector by the subset sweep: accumulate
/// kernel projectors over all (m-2q)-row submatrices, then project onto the
/// zero eigenspace of the accumulator.
RobustProjector robust_projector(const ProblemSpec& spec,
                                 const ToleranceConfig& tol,
                                 const ProjectorOptions& options = {});

/// Independent cross-check: computes the robust subspace directly by folding
/// pairwise subspace intersections of the submatrix rowspans (intersecting
/// via the kernel of stacked orthogonal-complement bases), then projecting.
/// Intended for small instances (m <= 12 or so); agrees with
/// robust_projector within 1e-8 entrywise.
RobustProjector robust_projector_oracle(const ProblemSpec& spec,
                                        const ToleranceConfig& tol);

}  // namespace robustrec
