// oto: experiment driver for the online topological ordering library.
//
//   oto bench  --algo pk,ahrsz --n 100..1000:100 --runs 30 --out out
//   oto verify --n 4 --exhaustive --oracle full
//   oto trace  --n 64 --seed 7 --algo kb --oracle light
//
// Exit status: 0 all checks passed, 1 an invariant failed, 2 bad configuration.

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "oto/bench.hpp"

namespace {

constexpr int kExitInvariant = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string algo = "pk,ahrsz";
  std::string n = "100..1000:100";
  std::size_t runs = 30;
  std::uint64_t seed = 1;
  std::string oracle;
  std::string out = "out";
  std::string checkpoints;
  std::string fault = "none";
  bool timing = false;
  bool exhaustive = false;
  int threads = 0;
};

void add_common(CLI::App& cmd, Options& opt) {
  cmd.add_option("--algo", opt.algo, "comma-separated: naive,mnr,pk,ahrsz,kb or all")
      ->capture_default_str();
  cmd.add_option("--n", opt.n, "node counts: list 4,8,16 or range a..b:step")
      ->capture_default_str();
  cmd.add_option("--runs", opt.runs, "REIS runs per n")->capture_default_str();
  cmd.add_option("--seed", opt.seed, "base seed (trace: the REIS seed itself)")
      ->capture_default_str();
  cmd.add_option("--oracle", opt.oracle, "off | light | full");
  cmd.add_option("--out", opt.out, "output directory")->capture_default_str();
  cmd.add_option("--threads", opt.threads, "OpenMP threads (0: runtime default)");
}

oto::ExperimentConfig to_config(const Options& opt, oto::OracleLevel default_oracle) {
  oto::ExperimentConfig config;
  config.algorithms = oto::parse_algorithm_list(opt.algo);
  config.ns = oto::parse_n_list(opt.n);
  config.runs = opt.runs;
  config.base_seed = opt.seed;
  config.out_dir = opt.out;
  config.checkpoints = oto::parse_u64_list(opt.checkpoints);
  config.timing = opt.timing;
  config.exhaustive = opt.exhaustive;
  config.oracle = default_oracle;
  if (!opt.oracle.empty()) {
    const auto level = oto::parse_oracle_level(opt.oracle);
    if (!level) throw oto::InvalidConfig("unknown oracle level '" + opt.oracle + "'");
    config.oracle = *level;
  }
  if (opt.fault == "skip-relabel")
    config.fault = oto::Fault::skip_relabel;
  else if (opt.fault != "none")
    throw oto::InvalidConfig("unknown fault '" + opt.fault + "'");
  config.validate();
  return config;
}

int report_verify(const oto::ExperimentConfig& config) {
  const oto::VerifyReport report = oto::run_verify(config);
  std::filesystem::create_directories(config.out_dir);
  std::ofstream file(config.out_dir / "verify.txt", std::ios::binary);
  if (!file) throw oto::IoError("cannot write " + (config.out_dir / "verify.txt").string());
  oto::write_verify_report(file, config, report);
  oto::write_verify_report(std::cout, config, report);
  return report.passed() ? 0 : kExitInvariant;
}

int cmd_bench(const Options& opt) {
  const oto::ExperimentConfig config = to_config(opt, oto::OracleLevel::off);
  const oto::BenchResult result = oto::run_bench(config);
  oto::write_bench_outputs(config, result);
  oto::write_summary_csv(std::cout, result.summary);
  if (config.oracle == oto::OracleLevel::off) return 0;
  return report_verify(config);
}

int cmd_verify(const Options& opt) {
  const oto::ExperimentConfig config = to_config(opt, oto::OracleLevel::light);
  if (config.oracle == oto::OracleLevel::off)
    throw oto::InvalidConfig("verify needs --oracle light or full");
  return report_verify(config);
}

int cmd_trace(const Options& opt) {
  const oto::ExperimentConfig config = to_config(opt, oto::OracleLevel::off);
  for (const auto& path : oto::run_trace(config)) std::cout << path.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online topological ordering experiments"};
  app.require_subcommand(1);
  Options opt;

  auto* bench = app.add_subcommand("bench", "REIS runs, runs.csv and summary.csv");
  add_common(*bench, opt);
  bench->add_option("--checkpoints", opt.checkpoints,
                    "edge counts for checkpoints.csv (comma-separated)");
  bench->add_flag("--timing", opt.timing, "record wall_ns (output no longer reproducible)");

  auto* verify = app.add_subcommand("verify", "check invariants against the oracles");
  add_common(*verify, opt);
  verify->add_flag("--exhaustive", opt.exhaustive, "all edge orders on n = 4");
  verify->add_option("--inject-fault", opt.fault, "none | skip-relabel")
      ->capture_default_str();

  auto* trace = app.add_subcommand("trace", "per-insertion ndjson for one REIS");
  add_common(*trace, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
    if (bench->parsed()) return cmd_bench(opt);
    if (verify->parsed()) return cmd_verify(opt);
    return cmd_trace(opt);
  } catch (const oto::InvalidConfig& e) {
    std::cerr << "oto: " << e.what() << '\n';
    return kExitConfig;
  } catch (const oto::IoError& e) {
    std::cerr << "oto: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "oto: " << e.what() << '\n';
    return kExitConfig;
  }
}
