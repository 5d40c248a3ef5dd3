#pragma once

#include <cstdint>
#include <random>

#include "robustrec/types.hpp"

namespace robustrec {

/// Deterministic random source: std::mt19937_64 with explicit Box-Muller for
/// normals and rejection sampling for bounded integers. The C++ standard pins
/// the mt19937_64 bit stream, and the derived draws here avoid
/// std::*_distribution (whose algorithms vary across standard libraries), so
/// identical seeds give identical instances on every platform and release.
class StableRng {
public:
  explicit StableRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal via Box-Muller; draws are cached in pairs.
  double normal();

  /// Uniform integer in [0, bound), bound >= 1, by rejection.
  std::uint64_t below(std::uint64_t bound);

  /// Fair coin.
  bool coin();

private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// Entry distribution for generated matrices and signals. Only one family is
/// supported today; the field exists so configs name their distribution
/// explicitly.
enum class Distribution { kStandardNormal };

struct InstanceConfig {
  Index m = 0;
  Index n = 0;
  int q = 0;
  std::uint64_t seed = 0;
  double corruption_magnitude = 100.0;
  Distribution distribution = Distribution::kStandardNormal;

  void validate() const;  // requires m, n >= 1 and 0 <= 2q < m
};

/// A synthetic corrupted-measurement instance.
struct Instance {
  Matrix A;       // m x n, i.i.d. standard normal
  Vector x_star;  // n, i.i.d. standard normal
  Vector e;       // m, q-sparse with entries +-corruption_magnitude
  Vector y;       // A x_star + e
};

/// Draws a fully reproducible instance from the seeded generator: matrix and
/// signal entries first, then the q corruption positions (distinct, uniform)
/// and their signs.
Instance gen_instance(const InstanceConfig& cfg);

}  // namespace robustrec
