#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "robustrec/errors.hpp"
#include "robustrec/instance_gen.hpp"
#include "robustrec/recovery.hpp"
#include "test_support.hpp"

using namespace robustrec;
using namespace robustrec::testing;

namespace {
const ToleranceConfig kTol;
}

TEST_CASE("tomography recovery pins the block averages") {
  const ProblemSpec spec{tomography_matrix(), 1};
  Vector x_star(5);
  x_star << 1, 2, 3, 10, 20;
  Vector projected_truth(5);
  projected_truth << 2, 2, 2, 15, 15;

  SUBCASE("clean data") {
    const RecoverySet set = recover(spec, spec.A * x_star, kTol);
    CHECK(max_abs(set.projected_anchor - projected_truth) <= 1e-8);
    CHECK(set.rank == 2);
    CHECK(set.kernel_basis.count() == 3);
    CHECK(set_member(set, x_star, kTol));
  }
  SUBCASE("any single corrupted entry") {
    for (Index corrupted = 0; corrupted < 5; ++corrupted) {
      Vector y = spec.A * x_star;
      y(corrupted) -= 25.0;
      const RecoverySet set = recover(spec, y, kTol);
      CHECK(max_abs(set.projected_anchor - projected_truth) <= 1e-8);
      CHECK(set_member(set, x_star, kTol));
    }
  }
}

TEST_CASE("recovery set always contains the truth") {
  StableRng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    InstanceConfig cfg;
    cfg.m = 6 + static_cast<Index>(rng.below(4));
    cfg.n = 3 + static_cast<Index>(rng.below(3));
    cfg.q = 1 + static_cast<int>(rng.below(2));
    cfg.seed = 500 + static_cast<std::uint64_t>(trial);
    const Instance instance = gen_instance(cfg);
    const ProblemSpec spec{instance.A, cfg.q};

    const RecoverySet set = recover(spec, instance.y, kTol);
    CHECK(set_member(set, instance.x_star, kTol));
    CHECK(set.rank + set.kernel_basis.count() == cfg.n);
    // The projected anchor is the anchor with its kernel component removed.
    const RobustProjector projector = robust_projector(spec, kTol);
    CHECK(max_abs(set.projected_anchor - projector.U * set.anchor) <= 1e-12);
  }
}

TEST_CASE("recovery sets from different corruptions coincide") {
  // The adversary may pick any corruption within budget; the reported set of
  // candidate signals must not depend on the choice.
  const ProblemSpec spec{tomography_matrix(), 1};
  Vector x_star(5);
  x_star << 1, 2, 3, 10, 20;

  const RecoverySet clean = recover(spec, spec.A * x_star, kTol);
  for (Index corrupted = 0; corrupted < 5; ++corrupted) {
    for (double magnitude : {-100.0, 0.5, 3e3}) {
      Vector y = spec.A * x_star;
      y(corrupted) += magnitude;
      CHECK(sets_equal(clean, recover(spec, y, kTol), kTol));
    }
  }
}

TEST_CASE("set membership separates inside from outside") {
  const ProblemSpec spec{replicated_readings_matrix(), 1};
  Vector x_star(2);
  x_star << 5, 6;
  const RecoverySet set = recover(spec, spec.A * x_star, kTol);

  // ker(U) = span(e2): shifting the second coordinate stays inside, shifting
  // the first leaves the set.
  Vector inside = x_star;
  inside(1) += 123.0;
  CHECK(set_member(set, inside, kTol));

  Vector outside = x_star;
  outside(0) += 1e-3;
  CHECK_FALSE(set_member(set, outside, kTol));
}

TEST_CASE("full-rank projector gives a point set") {
  // Three independent readings of each coordinate: U = I, the set is {x*}.
  Matrix A(6, 2);
  A << 1, 0, 1, 0, 1, 0,
       0, 1, 0, 1, 0, 1;
  const ProblemSpec spec{A, 1};
  Vector x_star(2);
  x_star << -2, 9;
  Vector y = spec.A * x_star;
  y(2) += 11.0;

  const RecoverySet set = recover(spec, y, kTol);
  CHECK(set.rank == 2);
  CHECK(set.kernel_basis.count() == 0);
  CHECK(max_abs(set.projected_anchor - x_star) <= 1e-8);
  CHECK(set_member(set, x_star, kTol));
  Vector other = x_star;
  other(1) += 1e-3;
  CHECK_FALSE(set_member(set, other, kTol));
}

TEST_CASE("sets_equal discriminates anchors and kernels") {
  const ProblemSpec spec{replicated_readings_matrix(), 1};
  Vector x_a(2), x_b(2);
  x_a << 5, 6;
  x_b << 5, -100;  // same first coordinate, different hidden part
  const RecoverySet set_a = recover(spec, spec.A * x_a, kTol);
  const RecoverySet set_b = recover(spec, spec.A * x_b, kTol);
  CHECK(sets_equal(set_a, set_b, kTol));

  Vector x_c(2);
  x_c << 6, 6;
  const RecoverySet set_c = recover(spec, spec.A * x_c, kTol);
  CHECK_FALSE(sets_equal(set_a, set_c, kTol));

  RecoverySet different_kernel = set_a;
  different_kernel.kernel_basis = OrthonormalBasis::empty_basis(2);
  CHECK_FALSE(sets_equal(set_a, different_kernel, kTol));
}

TEST_CASE("recovery propagates decode and budget failures") {
  const ProblemSpec spec{replicated_readings_matrix(), 1};
  Vector y(5);
  y << 1, 2, 3, 4, 4;
  CHECK_THROWS_AS(recover(spec, y, kTol), BudgetExceeded);
  CHECK_THROWS_AS(recover(ProblemSpec{replicated_readings_matrix(), 4},
                          Vector::Zero(5), kTol),
                  BudgetTooLarge);
  CHECK_THROWS_AS(set_member(RecoverySet{Vector::Zero(2),
                                         OrthonormalBasis::empty_basis(2),
                                         Vector::Zero(2), 2},
                             Vector::Zero(3), kTol),
                  DimensionMismatch);
}
