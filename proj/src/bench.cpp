#include "oto/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>

#include "csv.hpp"
#include "oto/closure.hpp"
#include "oto/oracle.hpp"
#include "oto/statistics.hpp"

namespace oto {

std::string_view to_string(OracleLevel level) {
  switch (level) {
    case OracleLevel::off: return "off";
    case OracleLevel::light: return "light";
    case OracleLevel::full: return "full";
  }
  return "?";
}

std::optional<OracleLevel> parse_oracle_level(std::string_view name) {
  for (OracleLevel level : {OracleLevel::off, OracleLevel::light, OracleLevel::full})
    if (to_string(level) == name) return level;
  return std::nullopt;
}

namespace {

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
    throw InvalidConfig("not an unsigned integer: '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const std::size_t cut = text.find(sep);
    parts.push_back(text.substr(0, cut));
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return parts;
}

}  // namespace

std::vector<std::size_t> parse_n_list(std::string_view text) {
  std::vector<std::size_t> ns;
  if (const std::size_t dots = text.find(".."); dots != std::string_view::npos) {
    std::string_view rest = text.substr(dots + 2);
    std::uint64_t step = 1;
    if (const std::size_t colon = rest.find(':'); colon != std::string_view::npos) {
      step = parse_u64(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    const std::uint64_t lo = parse_u64(text.substr(0, dots));
    const std::uint64_t hi = parse_u64(rest);
    if (step == 0 || lo > hi) throw InvalidConfig("bad n range '" + std::string(text) + "'");
    for (std::uint64_t n = lo; n <= hi; n += step) ns.push_back(n);
    return ns;
  }
  for (std::string_view part : split(text, ',')) ns.push_back(parse_u64(part));
  return ns;
}

std::vector<std::uint64_t> parse_u64_list(std::string_view text) {
  std::vector<std::uint64_t> values;
  if (text.empty()) return values;
  for (std::string_view part : split(text, ',')) values.push_back(parse_u64(part));
  return values;
}

std::vector<Algorithm> parse_algorithm_list(std::string_view text) {
  std::vector<Algorithm> algos;
  for (std::string_view part : split(text, ',')) {
    if (part == "all") {
      algos.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
      continue;
    }
    const std::optional<Algorithm> algo = parse_algorithm(part);
    if (!algo) throw InvalidConfig("unknown algorithm '" + std::string(part) + "'");
    algos.push_back(*algo);
  }
  return algos;
}

void ExperimentConfig::validate() const {
  if (algorithms.empty()) throw InvalidConfig("no algorithm selected");
  if (ns.empty()) throw InvalidConfig("no n given");
  if (runs < 1) throw InvalidConfig("runs must be at least 1");
  for (std::size_t n : ns)
    if (n < 2) throw InvalidConfig("every n must be at least 2");
  const std::size_t max_n = *std::max_element(ns.begin(), ns.end());
  if (oracle == OracleLevel::full && max_n > kFullOracleMaxN)
    throw InvalidConfig("oracle=full needs n <= " + std::to_string(kFullOracleMaxN));
  for (std::uint64_t k : checkpoints)
    for (std::size_t n : ns)
      if (k > complete_edge_count(n))
        throw InvalidConfig("checkpoint " + std::to_string(k) + " exceeds N at n = " +
                            std::to_string(n));
  if (exhaustive && (ns.size() != 1 || ns.front() != 4))
    throw InvalidConfig("exhaustive verification is only defined for n = 4");
}

std::uint64_t run_seed(std::uint64_t base_seed, std::size_t n, std::size_t run) {
  return base_seed ^ mix64((static_cast<std::uint64_t>(n) << 32) | run);
}

double RunRecord::cost() const {
  return algo == Algorithm::ahrsz || algo == Algorithm::kb ? cost_ahrsz : cost_pk;
}

RunRecord run_single(Algorithm algo, const ReisSequence& reis, bool timing, Fault fault) {
  const auto start = std::chrono::steady_clock::now();
  std::unique_ptr<OnlineTopoOrder> order = make_online_order(algo, reis.n);
  order->inject_fault(fault);
  const std::vector<InsertOutcome> outcomes =
      insert_sequence(*order, reis.edges, {.measure_delta = true, .timing = false});
  const auto stop = std::chrono::steady_clock::now();

  RunRecord row{.algo = algo, .n = reis.n, .seed = reis.seed};
  std::vector<InsertionStats> stats;
  stats.reserve(outcomes.size());
  for (const InsertOutcome& o : outcomes) {
    stats.push_back(o.stats);
    row.inval_count += o.stats.invalidating;
    row.sum_delta_nodes += o.stats.delta_nodes;
    row.sum_delta_edges += o.stats.delta_edges;
    row.sum_cover_measure += o.stats.cover_measure;
  }
  row.cost_pk = cost_pk(stats);
  row.cost_ahrsz = cost_ahrsz(stats);
  if (timing)
    row.wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  return row;
}

std::vector<SummaryRecord> summarize(const std::vector<RunRecord>& runs) {
  std::map<std::pair<Algorithm, std::size_t>, std::vector<const RunRecord*>> groups;
  std::vector<std::pair<Algorithm, std::size_t>> order;
  for (const RunRecord& r : runs) {
    auto& group = groups[{r.algo, r.n}];
    if (group.empty()) order.emplace_back(r.algo, r.n);
    group.push_back(&r);
  }
  std::vector<SummaryRecord> summary;
  for (const auto& key : order) {
    std::vector<double> costs, invals;
    for (const RunRecord* r : groups[key]) {
      costs.push_back(r->cost());
      invals.push_back(static_cast<double>(r->inval_count));
    }
    summary.push_back({key.first, key.second, costs.size(), mean(costs), sample_sd(costs),
                       mean(invals)});
  }
  return summary;
}

namespace {

struct Job {
  Algorithm algo;
  std::size_t n;
  std::size_t run;
};

std::vector<Job> jobs_for(const ExperimentConfig& config) {
  std::vector<Job> jobs;
  for (Algorithm algo : config.algorithms)
    for (std::size_t n : config.ns)
      for (std::size_t run = 0; run < config.runs; ++run) jobs.push_back({algo, n, run});
  return jobs;
}

RunRecord run_job(const ExperimentConfig& config, const Job& job) {
  const ReisSequence reis = gen_reis(job.n, run_seed(config.base_seed, job.n, job.run));
  return run_single(job.algo, reis, config.timing, config.fault);
}

std::vector<CheckpointRecord> collect_checkpoints(const ExperimentConfig& config) {
  std::vector<CheckpointRecord> rows;
  if (config.checkpoints.empty()) return rows;
  std::vector<std::uint64_t> ks(config.checkpoints);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (std::size_t n : config.ns)
    for (std::size_t run = 0; run < config.runs; ++run) {
      const ReisSequence reis = gen_reis(n, run_seed(config.base_seed, n, run));
      Dag dag(n);
      std::uint64_t inserted = 0;
      for (std::uint64_t k : ks) {
        for (; inserted < k; ++inserted)
          dag.add_edge(reis.edges[inserted].u, reis.edges[inserted].v);
        rows.push_back({n, reis.seed, k, comparable_pairs(dag), max_degree(dag)});
      }
    }
  return rows;
}

}  // namespace

BenchResult run_bench(const ExperimentConfig& config) {
  config.validate();
  const std::vector<Job> jobs = jobs_for(config);
  BenchResult result;
  result.runs.resize(jobs.size());
  // Timed runs stay serial so they do not compete for cores.
  const bool parallel = !config.timing;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(jobs.size()); ++i)
    result.runs[i] = run_job(config, jobs[i]);
  result.summary = summarize(result.runs);
  result.checkpoints = collect_checkpoints(config);
  return result;
}

BenchResult run_bench_serial(const ExperimentConfig& config) {
  config.validate();
  BenchResult result;
  for (const Job& job : jobs_for(config)) result.runs.push_back(run_job(config, job));
  result.summary = summarize(result.runs);
  result.checkpoints = collect_checkpoints(config);
  return result;
}

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs) {
  detail::CsvWriter csv(out);
  csv.row("algo", "n", "seed", "inval_count", "sum_delta_nodes", "sum_delta_edges",
          "sum_cover_measure", "cost_pk", "cost_ahrsz", "wall_ns");
  for (const RunRecord& r : runs)
    csv.row(to_string(r.algo), r.n, r.seed, r.inval_count, r.sum_delta_nodes,
            r.sum_delta_edges, r.sum_cover_measure, r.cost_pk, r.cost_ahrsz, r.wall_ns);
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRecord>& summary) {
  detail::CsvWriter csv(out);
  csv.row("algo", "n", "runs", "mean_cost", "sd_cost", "mean_inval", "cost_over_n2_ln_n",
          "cost_over_n2_ln2_n", "cost_over_n2", "cost_over_n2_per_ln_n");
  for (const SummaryRecord& s : summary) {
    const double n = static_cast<double>(s.n);
    const double ln = std::log(n);
    const double n2 = n * n;
    csv.row(to_string(s.algo), s.n, s.runs, s.mean_cost, s.sd_cost, s.mean_inval,
            s.mean_cost / (n2 * ln), s.mean_cost / (n2 * ln * ln), s.mean_cost / n2,
            s.mean_cost / (n2 / ln));
  }
}

void write_checkpoints_csv(std::ostream& out,
                           const std::vector<CheckpointRecord>& checkpoints) {
  detail::CsvWriter csv(out);
  csv.row("n", "seed", "k", "phi", "predicted_phi", "max_degree", "degree_bound");
  for (const CheckpointRecord& c : checkpoints) {
    std::string predicted;
    try {
      predicted = detail::format_number(predicted_phi(c.n, static_cast<double>(c.k)));
    } catch (const DomainError&) {
    }
    const double bound = 21.0 * static_cast<double>(c.k) / static_cast<double>(c.n);
    csv.row(c.n, c.seed, c.k, c.phi, predicted, c.max_degree, bound);
  }
}

void write_bench_outputs(const ExperimentConfig& config, const BenchResult& result) {
  std::filesystem::create_directories(config.out_dir);
  detail::write_file(config.out_dir / "runs.csv",
                     [&](std::ostream& out) { write_runs_csv(out, result.runs); });
  detail::write_file(config.out_dir / "summary.csv",
                     [&](std::ostream& out) { write_summary_csv(out, result.summary); });
  if (!config.checkpoints.empty())
    detail::write_file(config.out_dir / "checkpoints.csv", [&](std::ostream& out) {
      write_checkpoints_csv(out, result.checkpoints);
    });
}

}  // namespace oto
