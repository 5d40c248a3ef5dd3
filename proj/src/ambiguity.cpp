#include "robustrec/ambiguity.hpp"

#include <string>

#include "robustrec/errors.hpp"
#include "robustrec/numerics.hpp"

namespace robustrec {

AmbiguityCertificate ambiguity_member(const ProblemSpec& spec, const Vector& v,
                                      const ToleranceConfig& tol) {
  spec.validate();
  tol.validate();
  if (v.size() != spec.n())
    throw DimensionMismatch("ambiguity_member: v has " +
                            std::to_string(v.size()) + " entries, expected " +
                            std::to_string(spec.n()));

  AmbiguityCertificate cert;
  cert.v = v;
  cert.q = spec.q;
  const Vector image = spec.A * v;
  for (Index i = 0; i < image.size(); ++i)
    if (std::abs(image(i)) > tol.supp_abs) cert.support.push_back(i);
  cert.support_size = static_cast<Index>(cert.support.size());
  cert.is_member = cert.support_size <= 2 * static_cast<Index>(spec.q);
  return cert;
}

SparsePairWitness sparse_pair_witness(const ProblemSpec& spec, const Vector& v,
                                      const ToleranceConfig& tol) {
  const AmbiguityCertificate cert = ambiguity_member(spec, v, tol);
  if (!cert.is_member)
    throw NotAMember("sparse_pair_witness: ||A v||_0 = " +
                     std::to_string(cert.support_size) + " exceeds 2q = " +
                     std::to_string(2 * spec.q));

  const Vector image = spec.A * v;
  SparsePairWitness witness;
  witness.e_prime = Vector::Zero(spec.m());
  witness.e = Vector::Zero(spec.m());
  // Alternate sorted support indices between the halves; each half then
  // holds at most ceil(|supp| / 2) <= q entries.
  for (std::size_t pos = 0; pos < cert.support.size(); ++pos) {
    const Index row = cert.support[pos];
    if (pos % 2 == 0)
      witness.e_prime(row) = image(row);
    else
      witness.e(row) = -image(row);
  }
  return witness;
}

OrthonormalBasis span_ambiguity(const ProblemSpec& spec,
                                const ToleranceConfig& tol) {
  const Matrix C = ambiguity_span_accumulator(spec, tol);
  return split_eigenspaces(C, tol).nonzero;
}

bool certify_linear_robust(const ProblemSpec& spec, const Matrix& M,
                           const RobustProjector& projector,
                           const ToleranceConfig& tol) {
  spec.validate();
  tol.validate();
  if (M.cols() != spec.n())
    throw DimensionMismatch("certify_linear_robust: M has " +
                            std::to_string(M.cols()) + " columns, expected " +
                            std::to_string(spec.n()));
  if (projector.n != spec.n())
    throw DimensionMismatch("certify_linear_robust: projector dimension mismatch");

  // Linear maps are constant on the span of the ambiguity set exactly when
  // they annihilate ker(U), i.e. M (I - U) = 0.
  const Matrix off_kernel =
      M * (Matrix::Identity(spec.n(), spec.n()) - projector.U);
  return max_abs(off_kernel) <= 1e-8 * (1.0 + max_abs(M));
}

}  // namespace robustrec
