#pragma once

#include <vector>

#include "robustrec/projector.hpp"
#include "robustrec/types.hpp"

namespace robustrec {

/// Membership verdict for the ambiguity set S_q^A = {v : ||A v||_0 <= 2q},
/// the signal differences explainable by two q-sparse corruptions.
struct AmbiguityCertificate {
  Vector v;
  std::vector<Index> support;  // numerical supp(A v), 0-based, ascending
  Index support_size = 0;
  int q = 0;
  bool is_member = false;
};

/// A pair of q-sparse corruptions exhibiting the ambiguity of a member v:
/// A (x + v) + e = A x + e_prime for every x.
struct SparsePairWitness {
  Vector e_prime;
  Vector e;
};

/// Computes the numerical support of A v (entries with |.| > tol.supp_abs)
/// and the verdict |supp| <= 2q.
AmbiguityCertificate ambiguity_member(const ProblemSpec& spec, const Vector& v,
                                      const ToleranceConfig& tol);

/// Splits supp(A v) into two halves T1, T2 of size <= q (sorted indices,
/// alternating assignment) and returns e_prime carrying (A v)_j on T1 and
/// e carrying -(A v)_j on T2, so that A v = e_prime - e. Throws NotAMember
/// if v is not in the ambiguity set.
SparsePairWitness sparse_pair_witness(const ProblemSpec& spec, const Vector& v,
                                      const ToleranceConfig& tol);

/// Orthonormal basis of Span(S_q^A), the span of the ambiguity set. Equals
/// the kernel basis of the robust projector: it is the image of the subset
/// sweep's accumulator.
OrthonormalBasis span_ambiguity(const ProblemSpec& spec,
                                const ToleranceConfig& tol);

/// True iff the linear map x -> M x is (A, q)-robust, i.e. constant across
/// every ambiguity. For linear maps this is equivalent to M annihilating
/// ker(U), tested as ||M (I - U)||_max <= 1e-8 * (1 + ||M||_max).
bool certify_linear_robust(const ProblemSpec& spec, const Matrix& M,
                           const RobustProjector& projector,
                           const ToleranceConfig& tol);

}  // namespace robustrec
