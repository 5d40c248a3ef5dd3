#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "robustrec/errors.hpp"
#include "robustrec/matrix_io.hpp"
#include "robustrec/recovery.hpp"
#include "robustrec/serialize.hpp"
#include "test_support.hpp"

using namespace robustrec;
using namespace robustrec::testing;

namespace {

const ToleranceConfig kTol;

// Self-cleaning scratch directory for file round-trip tests.
struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("robustrec_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

Matrix parse_from_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

}  // namespace

TEST_CASE("matrix text round-trips exactly") {
  StableRng rng(1);
  Matrix M = random_matrix(4, 3, rng);
  M(0, 0) = 1.0 / 3.0;
  M(1, 2) = -1e-17;
  M(2, 1) = 12345678901234.5;
  M(3, 0) = 0.0;

  std::ostringstream out;
  write_matrix(out, M);
  const Matrix back = parse_from_string(out.str());
  REQUIRE(back.rows() == 4);
  REQUIRE(back.cols() == 3);
  CHECK(max_abs(back - M) == 0.0);
}

TEST_CASE("comments, blank lines, and scientific notation") {
  const Matrix M = parse_from_string(
      "# measurement matrix\n"
      "\n"
      "2 3\n"
      "# row one\n"
      "1 2.5e-1 -3\n"
      "\n"
      "4e2 5 6\n"
      "# trailing comment\n");
  REQUIRE(M.rows() == 2);
  CHECK(M(0, 1) == 0.25);
  CHECK(M(1, 0) == 400.0);
}

TEST_CASE("header errors carry positions") {
  CHECK_THROWS_AS(parse_from_string(""), ParseError);
  CHECK_THROWS_AS(parse_from_string("3\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_from_string("2 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_from_string("0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_from_string("-1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_from_string("two 3\n"), ParseError);

  try {
    parse_from_string("# comment\ntwo 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
    CHECK(err.column() == 1);
  }
}

TEST_CASE("ragged and truncated bodies") {
  CHECK_THROWS_AS(parse_from_string("2 2\n1 2\n3\n"), DimensionError);
  CHECK_THROWS_AS(parse_from_string("2 2\n1 2 3\n4 5\n"), DimensionError);
  CHECK_THROWS_AS(parse_from_string("3 2\n1 2\n3 4\n"), DimensionError);

  try {
    parse_from_string("2 2\n1 2\n3\n");
    FAIL("expected DimensionError");
  } catch (const DimensionError& err) {
    CHECK(err.line() == 3);
  }
}

TEST_CASE("bad and non-finite entries carry positions") {
  try {
    parse_from_string("1 3\n1 x 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
    CHECK(err.column() == 3);
  }

  try {
    parse_from_string("1 2\n1 inf\n");
    FAIL("expected NonFiniteEntry");
  } catch (const NonFiniteEntry& err) {
    CHECK(err.line() == 2);
    CHECK(err.column() == 3);
  }
  CHECK_THROWS_AS(parse_from_string("1 1\nnan\n"), NonFiniteEntry);
}

TEST_CASE("content after the body is rejected") {
  CHECK_THROWS_AS(parse_from_string("1 1\n1\n2\n"), ParseError);
  CHECK_NOTHROW(parse_from_string("1 1\n1\n# fine\n\n"));
}

TEST_CASE("file round-trip and vector shapes") {
  TempDir tmp;
  StableRng rng(2);

  const Matrix M = random_matrix(3, 4, rng);
  write_matrix(tmp.path / "m.txt", M);
  CHECK(max_abs(read_matrix(tmp.path / "m.txt") - M) == 0.0);

  const Vector v = random_vector(5, rng);
  write_vector(tmp.path / "v.txt", v);
  CHECK(max_abs(read_vector(tmp.path / "v.txt") - v) == 0.0);

  // A 1 x n file also reads as a vector.
  std::ofstream(tmp.path / "row.txt") << "1 3\n7 8 9\n";
  const Vector row = read_vector(tmp.path / "row.txt");
  REQUIRE(row.size() == 3);
  CHECK(row(2) == 9.0);

  write_matrix(tmp.path / "square.txt", Matrix::Identity(2, 2));
  CHECK_THROWS_AS(read_vector(tmp.path / "square.txt"), DimensionMismatch);
  CHECK_THROWS_AS(read_matrix(tmp.path / "missing.txt"), ParseError);
}

TEST_CASE("shipped tomography fixture matches the built-in matrix") {
  const std::filesystem::path fixture =
      std::filesystem::path(ROBUSTREC_TEST_DATA_DIR) / "tomography_5x5.txt";
  CHECK(max_abs(read_matrix(fixture) - tomography_matrix()) == 0.0);
}

TEST_CASE("json: matrices are row-major, bases one vector per row") {
  Matrix M(2, 3);
  M << 1, 2, 3, 4, 5, 6;
  const nlohmann::json jm = matrix_to_json(M);
  CHECK(jm.size() == 2);
  CHECK(jm[0] == nlohmann::json::array({1.0, 2.0, 3.0}));
  CHECK(jm[1][2] == 6.0);

  OrthonormalBasis basis = OrthonormalBasis::empty_basis(3);
  basis.vectors = Matrix(3, 1);
  basis.vectors << 0, 0, 1;
  const nlohmann::json jb = basis_to_json(basis);
  REQUIRE(jb.size() == 1);
  CHECK(jb[0] == nlohmann::json::array({0.0, 0.0, 1.0}));
}

TEST_CASE("json: projector document") {
  const ProblemSpec spec{replicated_readings_matrix(), 1};
  const RobustProjector projector = robust_projector(spec, kTol);
  const nlohmann::json doc = projector_to_json(projector);

  CHECK(doc.at("format") == 1);
  CHECK(doc.at("m") == 5);
  CHECK(doc.at("n") == 2);
  CHECK(doc.at("q") == 1);
  CHECK(doc.at("rank") == 1);
  CHECK(doc.at("anchor").is_null());
  CHECK(doc.at("projected_anchor").is_null());
  CHECK(doc.at("U").size() == 2);
  CHECK(doc.at("U")[0][0].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(doc.at("U")[1][1].get<double>() == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(doc.at("image_basis").size() == 1);
  CHECK(doc.at("kernel_basis").size() == 1);
}

TEST_CASE("json: recovery document carries both anchors") {
  const ProblemSpec spec{tomography_matrix(), 1};
  Vector x_star(5);
  x_star << 1, 2, 3, 10, 20;
  const RecoverySet set = recover(spec, spec.A * x_star, kTol);
  const RobustProjector projector = robust_projector(spec, kTol);
  const nlohmann::json doc = recovery_to_json(projector, set);

  REQUIRE(doc.at("anchor").is_array());
  REQUIRE(doc.at("projected_anchor").size() == 5);
  CHECK(doc.at("projected_anchor")[0].get<double>() ==
        doctest::Approx(2.0).epsilon(1e-8));
  CHECK(doc.at("projected_anchor")[4].get<double>() ==
        doctest::Approx(15.0).epsilon(1e-8));
  // Round-trip through text stays parseable with the same values.
  const nlohmann::json reparsed = nlohmann::json::parse(doc.dump());
  CHECK(reparsed.at("rank") == 2);
}

TEST_CASE("json: decode document") {
  const ProblemSpec spec{replicated_readings_matrix(), 1};
  Vector x_star(2);
  x_star << 4, -7;
  Vector y = spec.A * x_star;
  y(1) += 9.0;
  const DecodeResult result = l0_decode(spec, y, kTol);
  const nlohmann::json doc = decode_to_json(spec, result);

  CHECK(doc.at("format") == 1);
  CHECK(doc.at("support") == nlohmann::json::array({1}));
  CHECK(doc.at("support_size") == 1);
  CHECK(doc.at("x_hat").size() == 2);
  CHECK(doc.at("e_hat")[1].get<double>() == doctest::Approx(9.0).epsilon(1e-9));
}
