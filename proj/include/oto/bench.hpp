#ifndef OTO_BENCH_HPP
#define OTO_BENCH_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oto/online_order.hpp"
#include "oto/random.hpp"

namespace oto {

enum class OracleLevel { off, light, full };

std::string_view to_string(OracleLevel level);
std::optional<OracleLevel> parse_oracle_level(std::string_view name);

/// Largest n accepted together with OracleLevel::full.
inline constexpr std::size_t kFullOracleMaxN = 128;

struct ExperimentConfig {
  std::vector<Algorithm> algorithms{Algorithm::pk, Algorithm::ahrsz};
  std::vector<std::size_t> ns{100};
  std::size_t runs = 30;
  std::uint64_t base_seed = 1;
  /// Edge counts after which comparable pairs and max degree are sampled.
  std::vector<std::uint64_t> checkpoints;
  OracleLevel oracle = OracleLevel::off;
  std::filesystem::path out_dir = "out";
  /// Record wall time; off by default so output files are reproducible.
  bool timing = false;
  /// verify: enumerate every edge order on n = 4 instead of sampling.
  bool exhaustive = false;
  Fault fault = Fault::none;

  /// Throws InvalidConfig.
  void validate() const;
};

/// "4,8,16" or "100..1000:100" (inclusive, step defaults to 1).
std::vector<std::size_t> parse_n_list(std::string_view text);
/// Comma-separated unsigned integers.
std::vector<std::uint64_t> parse_u64_list(std::string_view text);
std::vector<Algorithm> parse_algorithm_list(std::string_view text);

/// REIS seed of run `run` at size n.
std::uint64_t run_seed(std::uint64_t base_seed, std::size_t n, std::size_t run);

/// One row of runs.csv.
struct RunRecord {
  Algorithm algo{};
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t inval_count = 0;
  std::uint64_t sum_delta_nodes = 0;
  std::uint64_t sum_delta_edges = 0;
  std::uint64_t sum_cover_measure = 0;
  double cost_pk = 0;
  double cost_ahrsz = 0;
  std::uint64_t wall_ns = 0;

  /// C(n): cost_ahrsz for AHRSZ and KB, cost_pk for the others.
  double cost() const;
};

/// One row of summary.csv.
struct SummaryRecord {
  Algorithm algo{};
  std::size_t n = 0;
  std::size_t runs = 0;
  double mean_cost = 0;
  double sd_cost = 0;
  double mean_inval = 0;
};

/// Comparable pairs and max degree after k edges of one REIS.
struct CheckpointRecord {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t k = 0;
  std::uint64_t phi = 0;
  std::size_t max_degree = 0;
};

struct BenchResult {
  std::vector<RunRecord> runs;          // ordered by (algo, n, run)
  std::vector<SummaryRecord> summary;   // ordered by (algo, n)
  std::vector<CheckpointRecord> checkpoints;  // ordered by (n, run, k)
};

/// Runs every (algo, n, run) job. Jobs are spread over OpenMP threads and
/// merged by job index, so the result does not depend on the schedule.
BenchResult run_bench(const ExperimentConfig& config);
/// Reference driver: the same jobs one after another.
BenchResult run_bench_serial(const ExperimentConfig& config);

RunRecord run_single(Algorithm algo, const ReisSequence& reis, bool timing,
                     Fault fault = Fault::none);
std::vector<SummaryRecord> summarize(const std::vector<RunRecord>& runs);

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRecord>& summary);
void write_checkpoints_csv(std::ostream& out,
                           const std::vector<CheckpointRecord>& checkpoints);
/// runs.csv, summary.csv and, if checkpoints were requested, checkpoints.csv.
void write_bench_outputs(const ExperimentConfig& config, const BenchResult& result);

// Verification ------------------------------------------------------------

struct InvariantResult {
  std::string name;
  bool enabled = false;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// "algo=<a> n=<n> seed=<s> edge=<i>" of the first failure.
  std::string first_counterexample;

  bool passed() const noexcept { return failures == 0; }
};

struct VerifyReport {
  std::vector<InvariantResult> invariants;
  std::uint64_t sequences = 0;
  std::uint64_t insertions = 0;

  bool passed() const;
  const InvariantResult& at(std::string_view name) const;
};

/// A sequence to verify; `seed` only labels counterexamples.
struct VerifyCase {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<Edge> edges;
};

/// Feeds every case to all configured algorithms in lockstep and checks
/// the invariants enabled by `level` (light or full).
VerifyReport verify_cases(const std::vector<VerifyCase>& cases,
                          const std::vector<Algorithm>& algorithms, OracleLevel level,
                          Fault fault = Fault::none);

/// REIS cases from the config, or the exhaustive n = 4 family: all 720
/// edge orders of the complete DAG under each of its 24 node orders, plus
/// chains closed into a cycle.
std::vector<VerifyCase> verify_cases_for(const ExperimentConfig& config);

VerifyReport run_verify(const ExperimentConfig& config);
void write_verify_report(std::ostream& out, const ExperimentConfig& config,
                         const VerifyReport& report);

// Tracing -----------------------------------------------------------------

/// One ndjson record per edge of gen_reis(n, seed); a "phi" field is added
/// when the oracle is on.
void write_trace(std::ostream& out, Algorithm algo, std::size_t n, std::uint64_t seed,
                 OracleLevel oracle);

std::filesystem::path trace_path(const std::filesystem::path& dir, std::size_t n,
                                 std::uint64_t seed, Algorithm algo);

/// Writes one trace per (n, algo) with seed = config.base_seed. Returns
/// the files written.
std::vector<std::filesystem::path> run_trace(const ExperimentConfig& config);

}  // namespace oto

#endif  // OTO_BENCH_HPP
