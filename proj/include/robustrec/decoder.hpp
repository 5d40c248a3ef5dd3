#pragma once

#include <vector>

#include "robustrec/projector.hpp"
#include "robustrec/types.hpp"

namespace robustrec {

/// An exact l0-decode: x_hat minimizes the number of nonzero entries of
/// y - A x. Whenever y = A x_star + e with ||e||_0 <= q, the projection
/// U x_hat equals U x_star.
struct DecodeResult {
  Vector x_hat;
  Vector e_hat;                     // y - A x_hat
  std::vector<Index> support;      // numerical supp(e_hat), ascending
  Index support_size = 0;
  std::vector<Index> dropped_rows;  // rows excluded by the winning subsystem
};

/// Exact l0-decoding by combinatorial search: for k = 0, 1, ..., q and each
/// dropped row set D of size k in lexicographic order, test whether the
/// remaining subsystem is consistent (least-squares residual at most
/// consist_rel * (1 + ||y||)); the first hit wins and x_hat is its
/// minimum-norm solution. k-ascending order makes the first hit l0-minimal.
///
/// Throws BudgetExceeded when no subsystem with at most q dropped rows is
/// consistent -- the data cannot be explained by a q-sparse corruption, so
/// the recovery guarantee would be void. Throws DimensionMismatch if
/// |y| != m.
DecodeResult l0_decode(const ProblemSpec& spec, const Vector& y,
                       const ToleranceConfig& tol);

/// Numerical ||y - A x||_0 under the supp_abs cutoff.
Index l0_residual_norm(const ProblemSpec& spec, const Vector& y,
                       const Vector& x, const ToleranceConfig& tol);

}  // namespace robustrec
