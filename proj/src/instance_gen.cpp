#include "robustrec/instance_gen.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace robustrec {

double StableRng::uniform01() {
  // 53 high bits of the engine output, the standard double mantissa fill.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double StableRng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller; u1 is shifted into (0, 1] so the log is finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_normal_ = true;
  return radius * std::cos(angle);
}

std::uint64_t StableRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("StableRng::below: bound must be >= 1");
  // Reject the top partial block so the modulo is unbiased.
  const std::uint64_t remainder = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t draw = 0;
  do {
    draw = engine_();
  } while (draw > UINT64_MAX - remainder);
  return draw % bound;
}

bool StableRng::coin() { return (engine_() >> 63) != 0; }

void InstanceConfig::validate() const {
  if (m < 1 || n < 1)
    throw std::invalid_argument("instance requires m >= 1 and n >= 1");
  if (q < 0 || 2 * static_cast<Index>(q) >= m)
    throw std::invalid_argument("instance requires 0 <= 2q < m");
  if (!std::isfinite(corruption_magnitude) || corruption_magnitude < 0.0)
    throw std::invalid_argument("corruption magnitude must be finite and >= 0");
}

Instance gen_instance(const InstanceConfig& cfg) {
  cfg.validate();
  StableRng rng(cfg.seed);

  Instance instance;
  instance.A = Matrix(cfg.m, cfg.n);
  for (Index r = 0; r < cfg.m; ++r)
    for (Index c = 0; c < cfg.n; ++c) instance.A(r, c) = rng.normal();

  instance.x_star = Vector(cfg.n);
  for (Index i = 0; i < cfg.n; ++i) instance.x_star(i) = rng.normal();

  // q distinct corruption positions via partial Fisher-Yates, then a signed
  // spike of the configured magnitude at each.
  instance.e = Vector::Zero(cfg.m);
  std::vector<Index> positions(static_cast<std::size_t>(cfg.m));
  std::iota(positions.begin(), positions.end(), Index{0});
  for (int i = 0; i < cfg.q; ++i) {
    const std::size_t j =
        static_cast<std::size_t>(i) +
        static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(cfg.m - i)));
    std::swap(positions[static_cast<std::size_t>(i)], positions[j]);
    const double sign = rng.coin() ? 1.0 : -1.0;
    instance.e(positions[static_cast<std::size_t>(i)]) =
        sign * cfg.corruption_magnitude;
  }

  instance.y = instance.A * instance.x_star + instance.e;
  return instance;
}

}  // namespace robustrec
