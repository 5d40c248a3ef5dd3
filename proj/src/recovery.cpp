#include "robustrec/recovery.hpp"

#include <string>

#include "robustrec/errors.hpp"
#include "robustrec/numerics.hpp"

namespace robustrec {

RecoverySet recover(const ProblemSpec& spec, const Vector& y,
                    const ToleranceConfig& tol) {
  const DecodeResult decoded = l0_decode(spec, y, tol);
  const RobustProjector projector = robust_projector(spec, tol);

  RecoverySet set;
  set.anchor = decoded.x_hat;
  set.kernel_basis = projector.kernel_basis;
  set.projected_anchor = projector.U * decoded.x_hat;
  set.rank = projector.rank;
  return set;
}

bool set_member(const RecoverySet& set, const Vector& x,
                const ToleranceConfig& tol) {
  tol.validate();
  if (x.size() != set.anchor.size())
    throw DimensionMismatch("set_member: x has " + std::to_string(x.size()) +
                            " entries, expected " +
                            std::to_string(set.anchor.size()));

  Vector residual = x - set.anchor;
  if (!set.kernel_basis.empty()) {
    const Matrix& K = set.kernel_basis.vectors;
    residual -= K * (K.transpose() * residual);
  }
  return residual.norm() <= 1e-8 * (1.0 + x.norm());
}

bool sets_equal(const RecoverySet& a, const RecoverySet& b,
                const ToleranceConfig& tol) {
  tol.validate();
  if (a.anchor.size() != b.anchor.size())
    throw DimensionMismatch("sets_equal: ambient dimensions differ");

  // Same kernel span: the orthogonal projectors onto the two spans coincide.
  const Matrix Pa = projector_onto_span(a.kernel_basis);
  const Matrix Pb = projector_onto_span(b.kernel_basis);
  if (max_abs(Pa - Pb) > 1e-8) return false;

  // Same projected truth. With equal kernels the two U's agree, so the
  // cached projected anchors are directly comparable.
  const Vector diff = a.projected_anchor - b.projected_anchor;
  const double scale =
      1.0 + std::max(a.projected_anchor.norm(), b.projected_anchor.norm());
  return diff.norm() <= 1e-8 * scale;
}

}  // namespace robustrec
