// Command-line front end: compute robust projectors, decode corrupted
// measurements, recover solution sets, certify linear maps, benchmark the
// subset sweep, and generate seeded test instances.
//
// Exit codes: 0 success, 2 corruption exceeds the budget (no consistent
// subsystem), 3 parse/dimension errors, 4 budget too large (2q >= m).

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "robustrec/ambiguity.hpp"
#include "robustrec/bench.hpp"
#include "robustrec/decoder.hpp"
#include "robustrec/errors.hpp"
#include "robustrec/instance_gen.hpp"
#include "robustrec/matrix_io.hpp"
#include "robustrec/projector.hpp"
#include "robustrec/recovery.hpp"
#include "robustrec/serialize.hpp"

namespace {

using namespace robustrec;

// One shared flag set; only the parsed subcommand reads it.
struct CliState {
  std::string matrix_path;
  std::string rhs_path;
  std::string map_path;
  std::string json_path;
  std::string grid_path;
  std::string csv_path;
  std::string out_dir;
  int q = 0;
  int runs = 10;
  int threads = 1;
  bool early_exit = false;
  long long gen_m = 0;
  long long gen_n = 0;
  std::uint64_t seed = 1;
  double magnitude = 100.0;
  ToleranceConfig tol;
};

void add_tolerance_flags(CLI::App* cmd, ToleranceConfig& tol) {
  cmd->add_option("--tol-rank", tol.rank_rel,
                  "Relative rank cutoff for SVD-based kernels (0 = automatic)");
  cmd->add_option("--tol-eig", tol.eig_zero,
                  "Absolute eigenvalue threshold for the zero eigenspace");
  cmd->add_option("--tol-supp", tol.supp_abs,
                  "Absolute cutoff deciding numerical support");
  cmd->add_option("--tol-consist", tol.consist_rel,
                  "Relative residual bound for subsystem consistency");
}

void print_vector(std::ostream& out, const char* label, const Vector& v) {
  out << label << ':';
  char buffer[64];
  for (Index i = 0; i < v.size(); ++i) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", v(i));
    out << ' ' << buffer;
  }
  out << '\n';
}

void print_indices(std::ostream& out, const char* label,
                   const std::vector<Index>& indices) {
  out << label << ':';
  for (Index i : indices) out << ' ' << i;
  out << '\n';
}

void write_json_file(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw Error("failed writing '" + path + "'");
}

int run_projector(const CliState& state) {
  const ProblemSpec spec{read_matrix(state.matrix_path), state.q};
  ProjectorOptions options;
  options.threads = state.threads;
  options.early_exit = state.early_exit;
  const RobustProjector projector = robust_projector(spec, state.tol, options);

  std::cout << "rank: " << projector.rank << '\n'
            << "kernel_dim: " << projector.kernel_basis.count() << '\n'
            << "subsets: " << projector.subsets_processed << '\n'
            << "U:\n";
  write_matrix(std::cout, projector.U);
  if (!state.json_path.empty())
    write_json_file(state.json_path, projector_to_json(projector));
  return 0;
}

int run_decode(const CliState& state) {
  const ProblemSpec spec{read_matrix(state.matrix_path), state.q};
  const Vector y = read_vector(state.rhs_path);
  const DecodeResult result = l0_decode(spec, y, state.tol);

  print_vector(std::cout, "x_hat", result.x_hat);
  print_vector(std::cout, "e_hat", result.e_hat);
  print_indices(std::cout, "support", result.support);
  std::cout << "support_size: " << result.support_size << '\n';
  print_indices(std::cout, "dropped_rows", result.dropped_rows);
  if (!state.json_path.empty())
    write_json_file(state.json_path, decode_to_json(spec, result));
  return 0;
}

int run_recover(const CliState& state) {
  const ProblemSpec spec{read_matrix(state.matrix_path), state.q};
  const Vector y = read_vector(state.rhs_path);
  const RecoverySet set = recover(spec, y, state.tol);

  std::cout << "rank: " << set.rank << '\n'
            << "kernel_dim: " << set.kernel_basis.count() << '\n';
  print_vector(std::cout, "anchor", set.anchor);
  print_vector(std::cout, "projected_anchor", set.projected_anchor);
  for (Index j = 0; j < set.kernel_basis.count(); ++j) {
    const std::string label = "kernel[" + std::to_string(j) + "]";
    print_vector(std::cout, label.c_str(), set.kernel_basis.vectors.col(j));
  }
  if (!state.json_path.empty()) {
    const RobustProjector projector = robust_projector(spec, state.tol);
    write_json_file(state.json_path, recovery_to_json(projector, set));
  }
  return 0;
}

int run_certify(const CliState& state) {
  const ProblemSpec spec{read_matrix(state.matrix_path), state.q};
  const Matrix M = read_matrix(state.map_path);
  const RobustProjector projector = robust_projector(spec, state.tol);
  const bool robust = certify_linear_robust(spec, M, projector, state.tol);

  const Matrix off_kernel =
      M * (Matrix::Identity(spec.n(), spec.n()) - projector.U);
  std::cout << "robust: " << (robust ? "yes" : "no") << '\n'
            << "max_violation: " << max_abs(off_kernel) << '\n';
  return 0;
}

int run_bench(const CliState& state) {
  const std::vector<InstanceConfig> grid =
      state.grid_path.empty() ? default_bench_grid(state.seed)
                              : read_bench_grid(state.grid_path);
  ProjectorOptions options;
  options.threads = state.threads;
  const std::vector<BenchRecord> records = run_bench(grid, state.runs, options);

  if (state.csv_path.empty()) {
    write_bench_csv(std::cout, records);
  } else {
    std::ofstream out(state.csv_path);
    if (!out) throw Error("cannot open '" + state.csv_path + "' for writing");
    write_bench_csv(out, records);
    std::cout << "wrote " << records.size() << " records to " << state.csv_path
              << '\n';
  }
  return 0;
}

int run_gen(const CliState& state) {
  InstanceConfig cfg;
  cfg.m = static_cast<Index>(state.gen_m);
  cfg.n = static_cast<Index>(state.gen_n);
  cfg.q = state.q;
  cfg.seed = state.seed;
  cfg.corruption_magnitude = state.magnitude;
  const Instance instance = gen_instance(cfg);

  const std::filesystem::path dir(state.out_dir);
  std::filesystem::create_directories(dir);
  write_matrix(dir / "A.txt", instance.A);
  write_vector(dir / "x_star.txt", instance.x_star);
  write_vector(dir / "e.txt", instance.e);
  write_vector(dir / "y.txt", instance.y);
  for (const char* name : {"A.txt", "x_star.txt", "e.txt", "y.txt"})
    std::cout << (dir / name).string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust recovery under q-sparse measurement corruption"};
  app.require_subcommand(1);
  CliState state;

  CLI::App* projector =
      app.add_subcommand("projector", "Compute the robust orthogonal projector");
  projector->add_option("-A,--matrix", state.matrix_path, "Measurement matrix file")
      ->required();
  projector->add_option("-q,--budget", state.q, "Corruption budget")->required();
  projector->add_option("--json", state.json_path, "Write the full result as JSON");
  projector->add_option("--threads", state.threads,
                        "Worker threads for the subset sweep");
  projector->add_flag("--early-exit", state.early_exit,
                      "Stop early once the projector is provably zero");
  add_tolerance_flags(projector, state.tol);

  CLI::App* decode =
      app.add_subcommand("decode", "Exact l0-decode of corrupted measurements");
  decode->add_option("-A,--matrix", state.matrix_path, "Measurement matrix file")
      ->required();
  decode->add_option("-y,--measurements", state.rhs_path, "Measurement vector file")
      ->required();
  decode->add_option("-q,--budget", state.q, "Corruption budget")->required();
  decode->add_option("--json", state.json_path, "Write the full result as JSON");
  add_tolerance_flags(decode, state.tol);

  CLI::App* recover =
      app.add_subcommand("recover", "Recover the affine set of candidate signals");
  recover->add_option("-A,--matrix", state.matrix_path, "Measurement matrix file")
      ->required();
  recover->add_option("-y,--measurements", state.rhs_path, "Measurement vector file")
      ->required();
  recover->add_option("-q,--budget", state.q, "Corruption budget")->required();
  recover->add_option("--json", state.json_path, "Write the full result as JSON");
  add_tolerance_flags(recover, state.tol);

  CLI::App* certify = app.add_subcommand(
      "certify", "Check whether a linear map is robust to q corruptions");
  certify->add_option("-A,--matrix", state.matrix_path, "Measurement matrix file")
      ->required();
  certify->add_option("-q,--budget", state.q, "Corruption budget")->required();
  certify->add_option("-M,--map", state.map_path, "Linear map file (rows = outputs)")
      ->required();
  add_tolerance_flags(certify, state.tol);

  CLI::App* bench =
      app.add_subcommand("bench", "Time the projector over a parameter grid");
  bench->add_option("--grid", state.grid_path,
                    "Grid file ('m n q seed' per line); default: standard sweep");
  bench->add_option("--runs", state.runs, "Timed repetitions per grid point");
  bench->add_option("--csv", state.csv_path, "CSV output file (default: stdout)");
  bench->add_option("--seed", state.seed, "Base seed for the default grid");
  bench->add_option("--threads", state.threads,
                    "Worker threads for the subset sweep");

  CLI::App* gen =
      app.add_subcommand("gen", "Generate a seeded random corrupted instance");
  gen->add_option("--m", state.gen_m, "Number of measurements")->required();
  gen->add_option("--n", state.gen_n, "Signal dimension")->required();
  gen->add_option("--q", state.q, "Corruption budget")->required();
  gen->add_option("--seed", state.seed, "Generator seed")->required();
  gen->add_option("--out-dir", state.out_dir, "Directory for A/x_star/e/y files")
      ->required();
  gen->add_option("--magnitude", state.magnitude, "Corruption spike magnitude");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;  // bad usage reports as a parse error
  }

  try {
    if (projector->parsed()) return run_projector(state);
    if (decode->parsed()) return run_decode(state);
    if (recover->parsed()) return run_recover(state);
    if (certify->parsed()) return run_certify(state);
    if (bench->parsed()) return run_bench(state);
    if (gen->parsed()) return run_gen(state);
  } catch (const BudgetTooLarge& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 4;
  } catch (const BudgetExceeded& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 3;
  }
  return 0;
}
