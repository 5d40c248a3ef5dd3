#include "robustrec/types.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace robustrec {

double ToleranceConfig::rank_cutoff(Index rows, Index cols) const {
  if (rank_rel > 0.0) return rank_rel;
  const double dim = static_cast<double>(std::max<Index>({rows, cols, 1}));
  return dim * std::numeric_limits<double>::epsilon();
}

void ToleranceConfig::validate() const {
  if (rank_rel < 0.0 || !std::isfinite(rank_rel))
    throw std::invalid_argument("rank_rel must be >= 0 (0 selects the default)");
  if (eig_zero <= 0.0 || !std::isfinite(eig_zero))
    throw std::invalid_argument("eig_zero must be strictly positive");
  if (supp_abs <= 0.0 || !std::isfinite(supp_abs))
    throw std::invalid_argument("supp_abs must be strictly positive");
  if (consist_rel <= 0.0 || !std::isfinite(consist_rel))
    throw std::invalid_argument("consist_rel must be strictly positive");
}

OrthonormalBasis OrthonormalBasis::empty_basis(Index ambient_dim) {
  return OrthonormalBasis{ambient_dim, Matrix(ambient_dim, 0)};
}

OrthonormalBasis OrthonormalBasis::identity(Index ambient_dim) {
  return OrthonormalBasis{ambient_dim, Matrix::Identity(ambient_dim, ambient_dim)};
}

bool is_orthonormal(const OrthonormalBasis& basis, double tol) {
  if (basis.vectors.rows() != basis.ambient_dim) return false;
  if (basis.count() > basis.ambient_dim) return false;
  if (basis.empty()) return true;
  const Matrix gram = basis.vectors.transpose() * basis.vectors;
  const Matrix deviation =
      gram - Matrix::Identity(basis.count(), basis.count());
  return max_abs(deviation) <= tol;
}

double max_abs(const Matrix& M) {
  if (M.size() == 0) return 0.0;
  return M.cwiseAbs().maxCoeff();
}

}  // namespace robustrec
