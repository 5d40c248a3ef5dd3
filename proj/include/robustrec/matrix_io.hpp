#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "robustrec/types.hpp"

namespace robustrec {

// Text matrix format: a header line "m n", then m whitespace-separated rows.
// Decimal or scientific notation; lines starting with '#' are comments.
// Vectors travel as single-column (or single-row) matrix files.

/// Parses a matrix from a stream. Throws ParseError, DimensionError (ragged
/// rows), or NonFiniteEntry, all carrying 1-based line/column positions.
Matrix parse_matrix(std::istream& in);

/// Reads a matrix file. Throws the parse errors above, or ParseError if the
/// file cannot be opened.
Matrix read_matrix(const std::filesystem::path& path);

/// Writes a matrix with 17 significant digits, enough for an exact
/// round-trip through read_matrix.
void write_matrix(std::ostream& out, const Matrix& M);
void write_matrix(const std::filesystem::path& path, const Matrix& M);

/// Reads a vector stored as an m x 1 or 1 x n matrix file.
Vector read_vector(const std::filesystem::path& path);

/// Writes a vector as a single-column matrix file.
void write_vector(const std::filesystem::path& path, const Vector& v);

}  // namespace robustrec
