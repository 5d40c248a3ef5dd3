#pragma once

#include <cstdint>
#include <vector>

#include "robustrec/types.hpp"

namespace robustrec {

/// C(m, k) computed exactly in 128-bit intermediates. Throws
/// std::overflow_error if the result does not fit in 64 bits (cannot happen
/// for m <= 64).
std::uint64_t binomial(Index m, Index k);

/// {0, 1, ..., k-1}, the lexicographically first k-subset.
std::vector<Index> first_combination(Index k);

/// Advances `combo` (a sorted k-subset of [0, m)) to its lexicographic
/// successor. Returns false when `combo` was already the last subset.
bool next_combination(std::vector<Index>& combo, Index m);

/// The k-subset of [0, m) at lexicographic position `rank` (0-based).
std::vector<Index> unrank_combination(Index m, Index k, std::uint64_t rank);

/// Sorted complement of a sorted index subset of [0, m).
std::vector<Index> complement_indices(const std::vector<Index>& sorted_subset,
                                      Index m);

/// Rows of A selected by `rows`, in order.
Matrix select_rows(const Matrix& A, const std::vector<Index>& rows);

/// Entries of v selected by `rows`, in order.
Vector select_entries(const Vector& v, const std::vector<Index>& rows);

}  // namespace robustrec
