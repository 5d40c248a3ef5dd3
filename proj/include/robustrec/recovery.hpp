#pragma once

#include "robustrec/decoder.hpp"
#include "robustrec/projector.hpp"
#include "robustrec/types.hpp"

namespace robustrec {

/// The affine set x_hat + ker(U) of all signals indistinguishable from the
/// truth under the adversary model. It is the inclusion-wise minimal set
/// any (A, q)-robust recovery can produce, and it always contains x_star.
struct RecoverySet {
  Vector anchor;                 // an l0-minimizer x_hat
  OrthonormalBasis kernel_basis;  // spans ker(U)
  Vector projected_anchor;       // U x_hat, the canonical invariant of the set
  Index rank = 0;                // dim of recovered information = rank(U)
};

/// End-to-end recovery: l0-decode y, compute the robust projector, and
/// return the affine solution set. Propagates BudgetExceeded and
/// BudgetTooLarge.
RecoverySet recover(const ProblemSpec& spec, const Vector& y,
                    const ToleranceConfig& tol);

/// True iff x - anchor lies in span(kernel_basis): the residual after
/// projecting onto the basis is at most 1e-8 * (1 + ||x||).
bool set_member(const RecoverySet& set, const Vector& x,
                const ToleranceConfig& tol);

/// True iff both sets describe the same affine set: equal kernel spans
/// (projector distance <= 1e-8) and matching projected anchors.
bool sets_equal(const RecoverySet& a, const RecoverySet& b,
                const ToleranceConfig& tol);

}  // namespace robustrec
