#include "robustrec/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "robustrec/errors.hpp"

namespace robustrec {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

// Splits a line into whitespace-separated tokens with column positions.
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    tokens.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return tokens;
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

Index parse_count(const Token& token, std::size_t line_no, const char* what) {
  Index value = 0;
  const char* begin = token.text.data();
  const char* end = begin + token.text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || value < 1)
    throw ParseError(std::string("expected positive integer ") + what +
                         ", got '" + token.text + "'",
                     line_no, token.column);
  return value;
}

double parse_entry(const Token& token, std::size_t line_no) {
  double value = 0.0;
  const char* begin = token.text.data();
  const char* end = begin + token.text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError("expected numeric entry, got '" + token.text + "'",
                     line_no, token.column);
  if (!std::isfinite(value))
    throw NonFiniteEntry("matrix entry '" + token.text + "' is not finite",
                         line_no, token.column);
  return value;
}

}  // namespace

Matrix parse_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  // Header: "m n".
  Index rows = 0;
  Index cols = 0;
  bool have_header = false;
  while (!have_header && std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.size() != 2)
      throw ParseError("header must be 'rows cols', got " +
                           std::to_string(tokens.size()) + " tokens",
                       line_no, tokens.empty() ? 1 : tokens[0].column);
    rows = parse_count(tokens[0], line_no, "row count");
    cols = parse_count(tokens[1], line_no, "column count");
    have_header = true;
  }
  if (!have_header) throw ParseError("missing 'rows cols' header", line_no + 1, 1);

  Matrix M(rows, cols);
  Index row = 0;
  while (row < rows && std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const std::vector<Token> tokens = tokenize(line);
    if (static_cast<Index>(tokens.size()) != cols)
      throw DimensionError("row " + std::to_string(row + 1) + " has " +
                               std::to_string(tokens.size()) +
                               " entries, expected " + std::to_string(cols),
                           line_no);
    for (Index c = 0; c < cols; ++c)
      M(row, c) = parse_entry(tokens[static_cast<std::size_t>(c)], line_no);
    ++row;
  }
  if (row < rows)
    throw DimensionError("matrix body ended after " + std::to_string(row) +
                             " of " + std::to_string(rows) + " rows",
                         line_no);

  while (std::getline(in, line)) {
    ++line_no;
    if (!is_comment_or_blank(line))
      throw ParseError("unexpected content after matrix body", line_no,
                       tokenize(line)[0].column);
  }
  return M;
}

Matrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0, 0);
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& M) {
  out << M.rows() << ' ' << M.cols() << '\n';
  char buffer[64];
  for (Index r = 0; r < M.rows(); ++r) {
    for (Index c = 0; c < M.cols(); ++c) {
      // 17 significant digits round-trip a double exactly.
      std::snprintf(buffer, sizeof(buffer), "%.17g", M(r, c));
      out << (c == 0 ? "" : " ") << buffer;
    }
    out << '\n';
  }
}

void write_matrix(const std::filesystem::path& path, const Matrix& M) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_matrix(out, M);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

Vector read_vector(const std::filesystem::path& path) {
  const Matrix M = read_matrix(path);
  if (M.cols() == 1) return M.col(0);
  if (M.rows() == 1) return M.row(0).transpose();
  throw DimensionMismatch("'" + path.string() +
                          "' is not a vector: expected a single row or column, got " +
                          std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
}

void write_vector(const std::filesystem::path& path, const Vector& v) {
  write_matrix(path, Matrix(v));
}

}  // namespace robustrec
