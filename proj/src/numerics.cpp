#include "robustrec/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "robustrec/errors.hpp"

namespace robustrec {

namespace {

constexpr double kSignProbe = 1e-12;
constexpr double kSymmetryRel = 1e-12;

}  // namespace

void fix_sign_convention(Matrix& vectors) {
  for (Index j = 0; j < vectors.cols(); ++j) {
    for (Index i = 0; i < vectors.rows(); ++i) {
      const double v = vectors(i, j);
      if (std::abs(v) > kSignProbe) {
        if (v < 0.0) vectors.col(j) = -vectors.col(j);
        break;
      }
    }
  }
}

OrthonormalBasis kernel_basis(const Matrix& M, const ToleranceConfig& tol) {
  const Index n = M.cols();
  if (M.rows() == 0) return OrthonormalBasis::identity(n);

  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  const double cutoff = tol.rank_cutoff(M.rows(), n) * sigma_max;

  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;

  // The trailing right singular vectors span the kernel.
  Matrix vectors = svd.matrixV().rightCols(n - rank);
  fix_sign_convention(vectors);
  return OrthonormalBasis{n, std::move(vectors)};
}

OrthonormalBasis rowspan_basis(const Matrix& M, const ToleranceConfig& tol) {
  const Index n = M.cols();
  if (M.rows() == 0) return OrthonormalBasis::empty_basis(n);

  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  const double cutoff = tol.rank_cutoff(M.rows(), n) * sigma_max;

  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;

  Matrix vectors = svd.matrixV().leftCols(rank);
  fix_sign_convention(vectors);
  return OrthonormalBasis{n, std::move(vectors)};
}

OrthonormalBasis orthogonal_complement(const OrthonormalBasis& B,
                                       const ToleranceConfig& tol) {
  if (B.empty()) return OrthonormalBasis::identity(B.ambient_dim);
  // v is orthogonal to span(B) iff B^T v = 0.
  return kernel_basis(B.vectors.transpose(), tol);
}

Matrix projector_onto_span(const OrthonormalBasis& B) {
  Matrix P = Matrix::Zero(B.ambient_dim, B.ambient_dim);
  if (!B.empty()) {
    P.selfadjointView<Eigen::Lower>().rankUpdate(B.vectors);
    P.triangularView<Eigen::StrictlyUpper>() =
        P.transpose().triangularView<Eigen::StrictlyUpper>();
  }
  return P;
}

EigenspaceSplit split_eigenspaces(const Matrix& C, const ToleranceConfig& tol) {
  if (C.rows() != C.cols())
    throw NonSymmetricInput("zero_eigenspace: matrix is not square");
  const double asym = max_abs(C - C.transpose());
  if (asym > kSymmetryRel * (1.0 + max_abs(C)))
    throw NonSymmetricInput("zero_eigenspace: symmetry check failed, |C - C^T|_max = " +
                            std::to_string(asym));

  Eigen::SelfAdjointEigenSolver<Matrix> eig(C);
  if (eig.info() != Eigen::Success)
    throw Error("zero_eigenspace: eigendecomposition failed to converge");

  // Eigenvalues come back ascending, so the zero eigenspace is a prefix.
  const auto& lambda = eig.eigenvalues();
  const Index n = C.rows();
  Index zero_count = 0;
  while (zero_count < n && lambda(zero_count) < tol.eig_zero) ++zero_count;

  Matrix zero_vectors = eig.eigenvectors().leftCols(zero_count);
  Matrix nonzero_vectors = eig.eigenvectors().rightCols(n - zero_count);
  fix_sign_convention(zero_vectors);
  fix_sign_convention(nonzero_vectors);
  return EigenspaceSplit{OrthonormalBasis{n, std::move(zero_vectors)},
                         OrthonormalBasis{n, std::move(nonzero_vectors)}};
}

OrthonormalBasis zero_eigenspace(const Matrix& C, const ToleranceConfig& tol) {
  return split_eigenspaces(C, tol).zero;
}

LeastSquaresSolution min_norm_solve(const Matrix& M, const Vector& b,
                                    const ToleranceConfig& tol) {
  if (M.rows() != b.size())
    throw DimensionMismatch("min_norm_solve: M has " + std::to_string(M.rows()) +
                            " rows but b has " + std::to_string(b.size()) +
                            " entries");
  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(tol.rank_cutoff(M.rows(), M.cols()));
  Vector x = svd.solve(b);
  const double residual = (M * x - b).norm();
  return LeastSquaresSolution{std::move(x), residual};
}

Index numerical_rank(const Matrix& M, const ToleranceConfig& tol) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(M);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  const double cutoff = tol.rank_cutoff(M.rows(), M.cols()) * sigma_max;
  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  return rank;
}

}  // namespace robustrec
