#include "robustrec/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "robustrec/errors.hpp"
#include "robustrec/matrix_io.hpp"

namespace robustrec {

std::vector<InstanceConfig> default_bench_grid(std::uint64_t base_seed) {
  std::vector<InstanceConfig> grid;
  std::uint64_t offset = 0;
  for (Index m : {Index{8}, Index{16}}) {
    for (Index n : {Index{8}, Index{16}, Index{32}}) {
      for (int q : {1, 3, 7}) {
        if (2 * static_cast<Index>(q) >= m) continue;
        InstanceConfig cfg;
        cfg.m = m;
        cfg.n = n;
        cfg.q = q;
        cfg.seed = base_seed + offset++;
        grid.push_back(cfg);
      }
    }
  }
  return grid;
}

std::vector<BenchRecord> run_bench(const std::vector<InstanceConfig>& grid,
                                   int runs, const ProjectorOptions& options) {
  if (runs < 1) throw std::invalid_argument("bench requires runs >= 1");
  using clock = std::chrono::steady_clock;

  std::vector<BenchRecord> records;
  records.reserve(grid.size());
  const ToleranceConfig tol;

  for (const InstanceConfig& cfg : grid) {
    const Instance instance = gen_instance(cfg);
    const ProblemSpec spec{instance.A, cfg.q};

    // One untimed warmup, then `runs` timed repetitions.
    robust_projector(spec, tol, options);

    std::vector<double> samples_ms;
    samples_ms.reserve(static_cast<std::size_t>(runs));
    for (int r = 0; r < runs; ++r) {
      const auto start = clock::now();
      const RobustProjector projector = robust_projector(spec, tol, options);
      const auto stop = clock::now();
      (void)projector;
      samples_ms.push_back(
          std::chrono::duration<double, std::milli>(stop - start).count());
    }

    double mean = 0.0;
    for (double s : samples_ms) mean += s;
    mean /= static_cast<double>(runs);
    double variance = 0.0;
    for (double s : samples_ms) variance += (s - mean) * (s - mean);
    const double std_dev =
        runs > 1 ? std::sqrt(variance / static_cast<double>(runs - 1)) : 0.0;

    BenchRecord record;
    record.m = cfg.m;
    record.n = cfg.n;
    record.q = cfg.q;
    record.subsets = subset_count(cfg.m, cfg.q);
    record.runs = runs;
    record.mean_ms = mean;
    record.std_ms = std_dev;
    record.seed = cfg.seed;
    records.push_back(record);
  }
  return records;
}

void write_bench_csv(std::ostream& out,
                     const std::vector<BenchRecord>& records) {
  out << "m,n,q,subsets,runs,mean_ms,std_ms,seed\n";
  for (const BenchRecord& r : records) {
    out << r.m << ',' << r.n << ',' << r.q << ',' << r.subsets << ','
        << r.runs << ',' << r.mean_ms << ',' << r.std_ms << ',' << r.seed
        << '\n';
  }
}

std::vector<InstanceConfig> read_bench_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open grid file '" + path.string() + "'", 0, 0);

  std::vector<InstanceConfig> grid;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first[0] == '#') continue;

    InstanceConfig cfg;
    try {
      cfg.m = static_cast<Index>(std::stoll(first));
    } catch (const std::exception&) {
      throw ParseError("expected integer m, got '" + first + "'", line_no, 1);
    }
    long long n = 0;
    long long q = 0;
    unsigned long long seed = 0;
    if (!(tokens >> n >> q >> seed))
      throw ParseError("grid line must be 'm n q seed'", line_no, 1);
    std::string extra;
    if (tokens >> extra)
      throw ParseError("unexpected token '" + extra + "' after 'm n q seed'",
                       line_no, 1);
    cfg.n = static_cast<Index>(n);
    cfg.q = static_cast<int>(q);
    cfg.seed = seed;
    cfg.validate();
    grid.push_back(cfg);
  }
  return grid;
}

}  // namespace robustrec
