#include "robustrec/combinations.hpp"

#include <numeric>
#include <stdexcept>

namespace robustrec {

std::uint64_t binomial(Index m, Index k) {
  if (k < 0 || m < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  unsigned __int128 result = 1;
  for (Index i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned __int128>(m - k + i) /
             static_cast<unsigned __int128>(i);
    if (result > static_cast<unsigned __int128>(UINT64_MAX))
      throw std::overflow_error("binomial: C(m, k) exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<Index> first_combination(Index k) {
  std::vector<Index> combo(static_cast<std::size_t>(k));
  std::iota(combo.begin(), combo.end(), Index{0});
  return combo;
}

bool next_combination(std::vector<Index>& combo, Index m) {
  const Index k = static_cast<Index>(combo.size());
  // Rightmost element that can still move right.
  Index i = k - 1;
  while (i >= 0 && combo[static_cast<std::size_t>(i)] == m - k + i) --i;
  if (i < 0) return false;
  ++combo[static_cast<std::size_t>(i)];
  for (Index j = i + 1; j < k; ++j)
    combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

std::vector<Index> unrank_combination(Index m, Index k, std::uint64_t rank) {
  std::vector<Index> combo;
  combo.reserve(static_cast<std::size_t>(k));
  Index next = 0;
  for (Index slot = 0; slot < k; ++slot) {
    // Advance `next` until the block of combinations starting with it
    // contains the requested rank.
    while (true) {
      const std::uint64_t block = binomial(m - next - 1, k - slot - 1);
      if (rank < block) break;
      rank -= block;
      ++next;
    }
    combo.push_back(next);
    ++next;
  }
  return combo;
}

std::vector<Index> complement_indices(const std::vector<Index>& sorted_subset,
                                      Index m) {
  std::vector<Index> complement;
  complement.reserve(static_cast<std::size_t>(m) - sorted_subset.size());
  std::size_t pos = 0;
  for (Index i = 0; i < m; ++i) {
    if (pos < sorted_subset.size() && sorted_subset[pos] == i) {
      ++pos;
    } else {
      complement.push_back(i);
    }
  }
  return complement;
}

Matrix select_rows(const Matrix& A, const std::vector<Index>& rows) {
  Matrix sub(static_cast<Index>(rows.size()), A.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    sub.row(static_cast<Index>(i)) = A.row(rows[i]);
  return sub;
}

Vector select_entries(const Vector& v, const std::vector<Index>& rows) {
  Vector sub(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    sub(static_cast<Index>(i)) = v(rows[i]);
  return sub;
}

}  // namespace robustrec
