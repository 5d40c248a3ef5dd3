#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace robustrec {

/// Base class for all robustrec errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when 2q >= m, i.e. the corruption budget leaves no usable subsystem.
class BudgetTooLarge : public Error {
public:
  using Error::Error;
};

/// Thrown when no consistent subsystem exists for any k <= q. The measurement
/// cannot be explained by a q-sparse corruption, so the recovery guarantee is
/// void and we refuse to return a best-effort answer.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Shape mismatch or malformed matrix/vector input to an operation.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Input to an eigendecomposition fails the symmetry check.
class NonSymmetricInput : public Error {
public:
  using Error::Error;
};

/// sparse_pair_witness called on a vector outside the ambiguity set.
class NotAMember : public Error {
public:
  using Error::Error;
};

/// Text-format parse failure; line/column are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Ragged or empty matrix file.
class DimensionError : public Error {
public:
  DimensionError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// NaN or infinity parsed from a matrix file.
class NonFiniteEntry : public Error {
public:
  NonFiniteEntry(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace robustrec
