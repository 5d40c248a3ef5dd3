#include "robustrec/projector.hpp"

#include <cmath>
#include <thread>
#include <utility>
#include <vector>

#include "robustrec/combinations.hpp"
#include "robustrec/errors.hpp"

namespace robustrec {

namespace {

// Minimum component norm at which the early-exit tracker accepts a new
// direction; well above accumulated rounding noise.
constexpr double kEarlyExitDirTol = 1e-7;

struct SweepResult {
  Matrix C_lower;  // accumulator, valid lower triangle only
  std::uint64_t processed = 0;
  bool spanned_everything = false;
};

// Tracks an orthonormal spanning set of the kernels seen so far. Once it
// reaches n vectors the robust subspace is certainly {0}.
class SpanTracker {
public:
  explicit SpanTracker(Index n) : basis_(n, n), count_(0) {}

  void absorb(const Matrix& vectors) {
    for (Index j = 0; j < vectors.cols() && !full(); ++j) {
      Vector r = vectors.col(j);
      // Two Gram-Schmidt passes keep the set orthonormal.
      for (int pass = 0; pass < 2; ++pass)
        if (count_ > 0)
          r -= basis_.leftCols(count_) * (basis_.leftCols(count_).transpose() * r);
      const double norm = r.norm();
      if (norm > kEarlyExitDirTol) basis_.col(count_++) = r / norm;
    }
  }

  bool full() const { return count_ == basis_.rows(); }

private:
  Matrix basis_;
  Index count_;
};

// Accumulates sum of kernel projectors over the lexicographic subset range
// [first_rank, last_rank).
SweepResult sweep_range(const ProblemSpec& spec, const ToleranceConfig& tol,
                        Index subset_size, std::uint64_t first_rank,
                        std::uint64_t last_rank, bool early_exit) {
  const Index n = spec.n();
  SweepResult result;
  result.C_lower = Matrix::Zero(n, n);
  if (first_rank >= last_rank) return result;

  SpanTracker tracker(n);
  std::vector<Index> subset =
      unrank_combination(spec.m(), subset_size, first_rank);
  for (std::uint64_t rank = first_rank; rank < last_rank; ++rank) {
    const OrthonormalBasis kernel =
        kernel_basis(select_rows(spec.A, subset), tol);
    if (!kernel.empty())
      result.C_lower.selfadjointView<Eigen::Lower>().rankUpdate(kernel.vectors);
    ++result.processed;
    if (early_exit) {
      tracker.absorb(kernel.vectors);
      if (tracker.full()) {
        result.spanned_everything = true;
        break;
      }
    }
    next_combination(subset, spec.m());
  }
  return result;
}

SweepResult sweep_all(const ProblemSpec& spec, const ToleranceConfig& tol,
                      const ProjectorOptions& options) {
  const Index subset_size = spec.m() - 2 * static_cast<Index>(spec.q);
  const std::uint64_t total = binomial(spec.m(), 2 * static_cast<Index>(spec.q));

  const int threads = std::max(1, options.threads);
  if (threads == 1 || total < 2 * static_cast<std::uint64_t>(threads))
    return sweep_range(spec, tol, subset_size, 0, total, options.early_exit);

  // Fixed contiguous chunks, reduced in chunk order: deterministic for a
  // given thread count regardless of scheduling. Early exit is a serial-path
  // feature and is ignored here.
  const std::uint64_t chunk_count = static_cast<std::uint64_t>(threads);
  std::vector<SweepResult> partials(chunk_count);
  std::vector<std::thread> workers;
  workers.reserve(chunk_count);
  for (std::uint64_t c = 0; c < chunk_count; ++c) {
    const std::uint64_t begin = total * c / chunk_count;
    const std::uint64_t end = total * (c + 1) / chunk_count;
    workers.emplace_back([&, c, begin, end] {
      partials[c] = sweep_range(spec, tol, subset_size, begin, end, false);
    });
  }
  for (auto& w : workers) w.join();

  SweepResult merged;
  merged.C_lower = Matrix::Zero(spec.n(), spec.n());
  for (const auto& partial : partials) {
    merged.C_lower += partial.C_lower;
    merged.processed += partial.processed;
  }
  return merged;
}

Matrix materialize_symmetric(const Matrix& lower) {
  return Matrix(lower.selfadjointView<Eigen::Lower>());
}

// Intersection of two subspaces: the kernel of the stacked orthogonal
// complements, since (span V1)^perp + (span V2)^perp = (V1 cap V2)^perp.
OrthonormalBasis intersect_subspaces(const OrthonormalBasis& B1,
                                     const OrthonormalBasis& B2,
                                     const ToleranceConfig& tol) {
  const Index n = B1.ambient_dim;
  const OrthonormalBasis W1 = orthogonal_complement(B1, tol);
  const OrthonormalBasis W2 = orthogonal_complement(B2, tol);
  const Index rows = W1.count() + W2.count();
  if (rows == 0) return OrthonormalBasis::identity(n);
  Matrix stacked(rows, n);
  stacked.topRows(W1.count()) = W1.vectors.transpose();
  stacked.bottomRows(W2.count()) = W2.vectors.transpose();
  return kernel_basis(stacked, tol);
}

}  // namespace

void ProblemSpec::validate() const {
  if (A.rows() < 1 || A.cols() < 1)
    throw DimensionMismatch("measurement matrix must have at least one row and column");
  if (!A.allFinite())
    throw DimensionMismatch("measurement matrix contains NaN or infinite entries");
  if (q < 0)
    throw BudgetTooLarge("corruption budget q must be nonnegative, got " +
                         std::to_string(q));
  if (2 * static_cast<Index>(q) >= A.rows())
    throw BudgetTooLarge("corruption budget q = " + std::to_string(q) +
                         " requires 2q < m = " + std::to_string(A.rows()));
}

std::uint64_t subset_count(Index m, int q) {
  if (q < 0 || 2 * static_cast<Index>(q) >= m)
    throw BudgetTooLarge("subset_count requires 0 <= 2q < m");
  return binomial(m, 2 * static_cast<Index>(q));
}

Matrix ambiguity_span_accumulator(const ProblemSpec& spec,
                                  const ToleranceConfig& tol,
                                  const ProjectorOptions& options,
                                  std::uint64_t* subsets_out) {
  spec.validate();
  tol.validate();
  SweepResult sweep = sweep_all(spec, tol, options);
  if (subsets_out) *subsets_out = sweep.processed;
  return materialize_symmetric(sweep.C_lower);
}

RobustProjector robust_projector(const ProblemSpec& spec,
                                 const ToleranceConfig& tol,
                                 const ProjectorOptions& options) {
  spec.validate();
  tol.validate();

  RobustProjector result;
  result.m = spec.m();
  result.n = spec.n();
  result.q = spec.q;

  SweepResult sweep = sweep_all(spec, tol, options);
  result.subsets_processed = sweep.processed;

  if (sweep.spanned_everything) {
    // The accumulated kernels already span R^n, so the robust subspace is
    // {0} and no eigendecomposition is needed.
    result.U = Matrix::Zero(spec.n(), spec.n());
    result.rank = 0;
    result.image_basis = OrthonormalBasis::empty_basis(spec.n());
    result.kernel_basis = OrthonormalBasis::identity(spec.n());
    return result;
  }

  const EigenspaceSplit split =
      split_eigenspaces(materialize_symmetric(sweep.C_lower), tol);
  result.image_basis = split.zero;
  result.kernel_basis = split.nonzero;
  result.rank = result.image_basis.count();
  result.U = projector_onto_span(result.image_basis);
  return result;
}

RobustProjector robust_projector_oracle(const ProblemSpec& spec,
                                        const ToleranceConfig& tol) {
  spec.validate();
  tol.validate();

  const Index subset_size = spec.m() - 2 * static_cast<Index>(spec.q);
  OrthonormalBasis robust = OrthonormalBasis::identity(spec.n());
  std::uint64_t processed = 0;

  std::vector<Index> subset = first_combination(subset_size);
  do {
    const OrthonormalBasis rows =
        rowspan_basis(select_rows(spec.A, subset), tol);
    robust = intersect_subspaces(robust, rows, tol);
    ++processed;
  } while (next_combination(subset, spec.m()));

  RobustProjector result;
  result.m = spec.m();
  result.n = spec.n();
  result.q = spec.q;
  result.subsets_processed = processed;
  result.image_basis = robust;
  result.kernel_basis = orthogonal_complement(robust, tol);
  result.rank = robust.count();
  result.U = projector_onto_span(robust);
  return result;
}

}  // namespace robustrec
