#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "robustrec/instance_gen.hpp"
#include "robustrec/projector.hpp"

namespace robustrec {

/// One timing row: wall-clock milliseconds of robust_projector on a seeded
/// random instance, mean and standard deviation over `runs` repetitions.
struct BenchRecord {
  Index m = 0;
  Index n = 0;
  int q = 0;
  std::uint64_t subsets = 0;  // C(m, 2q)
  int runs = 0;
  double mean_ms = 0.0;
  double std_ms = 0.0;
  std::uint64_t seed = 0;
};

/// The standard sweep grid: m in {8, 16}, n in {8, 16, 32}, q in {1, 3, 7},
/// skipping combinations with 2q >= m. 15 grid points.
std::vector<InstanceConfig> default_bench_grid(std::uint64_t base_seed = 1);

/// Times robust_projector on each grid point. Runs are single-threaded unless
/// options request otherwise.
std::vector<BenchRecord> run_bench(const std::vector<InstanceConfig>& grid,
                                   int runs,
                                   const ProjectorOptions& options = {});

/// CSV with header m,n,q,subsets,runs,mean_ms,std_ms,seed.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Parses a grid file: one "m n q seed" line per grid point, '#' comments.
std::vector<InstanceConfig> read_bench_grid(const std::filesystem::path& path);

}  // namespace robustrec
