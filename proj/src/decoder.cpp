#include "robustrec/decoder.hpp"

#include <string>

#include "robustrec/combinations.hpp"
#include "robustrec/errors.hpp"
#include "robustrec/numerics.hpp"

namespace robustrec {

DecodeResult l0_decode(const ProblemSpec& spec, const Vector& y,
                       const ToleranceConfig& tol) {
  spec.validate();
  tol.validate();
  if (y.size() != spec.m())
    throw DimensionMismatch("l0_decode: y has " + std::to_string(y.size()) +
                            " entries, expected " + std::to_string(spec.m()));

  const double consistency_bound = tol.consist_rel * (1.0 + y.norm());

  // Dropping a row set D of size k relaxes the support constraint: the
  // remaining subsystem is consistent iff some x has residual support inside
  // D. Scanning k upward therefore makes the first consistent subsystem an
  // l0-minimizer; within one k, lexicographic order fixes the tie-break.
  for (Index k = 0; k <= static_cast<Index>(spec.q); ++k) {
    std::vector<Index> dropped = first_combination(k);
    do {
      const std::vector<Index> kept = complement_indices(dropped, spec.m());
      const LeastSquaresSolution solution = min_norm_solve(
          select_rows(spec.A, kept), select_entries(y, kept), tol);
      if (solution.residual_norm <= consistency_bound) {
        DecodeResult result;
        result.x_hat = solution.x;
        result.e_hat = y - spec.A * result.x_hat;
        for (Index i = 0; i < result.e_hat.size(); ++i)
          if (std::abs(result.e_hat(i)) > tol.supp_abs)
            result.support.push_back(i);
        result.support_size = static_cast<Index>(result.support.size());
        result.dropped_rows = dropped;
        return result;
      }
    } while (next_combination(dropped, spec.m()));
  }

  throw BudgetExceeded(
      "l0_decode: no subsystem with at most q = " + std::to_string(spec.q) +
      " dropped rows is consistent; the corruption exceeds the budget or the "
      "model does not match");
}

Index l0_residual_norm(const ProblemSpec& spec, const Vector& y,
                       const Vector& x, const ToleranceConfig& tol) {
  spec.validate();
  tol.validate();
  if (y.size() != spec.m() || x.size() != spec.n())
    throw DimensionMismatch("l0_residual_norm: vector dimensions do not match A");
  const Vector residual = y - spec.A * x;
  Index count = 0;
  for (Index i = 0; i < residual.size(); ++i)
    if (std::abs(residual(i)) > tol.supp_abs) ++count;
  return count;
}

}  // namespace robustrec
