#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "oto/bench.hpp"
#include "oto/closure.hpp"

namespace oto {
namespace {

std::string runs_text(const BenchResult& r) {
  std::ostringstream out;
  write_runs_csv(out, r.runs);
  write_summary_csv(out, r.summary);
  write_checkpoints_csv(out, r.checkpoints);
  return out.str();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("oto_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(Parsers, NodeLists) {
  EXPECT_EQ(parse_n_list("4,8,16"), (std::vector<std::size_t>{4, 8, 16}));
  EXPECT_EQ(parse_n_list("100..400:100"), (std::vector<std::size_t>{100, 200, 300, 400}));
  EXPECT_EQ(parse_n_list("3..5"), (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_THROW(parse_n_list("5..3"), InvalidConfig);
  EXPECT_THROW(parse_n_list("1..5:0"), InvalidConfig);
  EXPECT_THROW(parse_n_list("4,x"), InvalidConfig);
  EXPECT_THROW(parse_n_list(""), InvalidConfig);
  EXPECT_TRUE(parse_u64_list("").empty());
  EXPECT_EQ(parse_u64_list("7,9"), (std::vector<std::uint64_t>{7, 9}));
}

TEST(Parsers, Algorithms) {
  EXPECT_EQ(parse_algorithm_list("pk,kb"), (std::vector{Algorithm::pk, Algorithm::kb}));
  EXPECT_EQ(parse_algorithm_list("all").size(), std::size(kAllAlgorithms));
  EXPECT_THROW(parse_algorithm_list("pk,quick"), InvalidConfig);
  EXPECT_EQ(parse_oracle_level("full"), OracleLevel::full);
  EXPECT_FALSE(parse_oracle_level("heavy"));
}

TEST(Config, Validation) {
  ExperimentConfig ok;
  EXPECT_NO_THROW(ok.validate());
  auto broken = [](auto edit) {
    ExperimentConfig c;
    edit(c);
    return c;
  };
  EXPECT_THROW(broken([](auto& c) { c.runs = 0; }).validate(), InvalidConfig);
  EXPECT_THROW(broken([](auto& c) { c.ns = {1}; }).validate(), InvalidConfig);
  EXPECT_THROW(broken([](auto& c) { c.algorithms.clear(); }).validate(), InvalidConfig);
  EXPECT_THROW(broken([](auto& c) {
                 c.ns = {200};
                 c.oracle = OracleLevel::full;
               }).validate(),
               InvalidConfig);
  EXPECT_THROW(broken([](auto& c) {
                 c.ns = {4};
                 c.checkpoints = {7};
               }).validate(),
               InvalidConfig);
  EXPECT_THROW(broken([](auto& c) { c.exhaustive = true; }).validate(), InvalidConfig);
}

TEST(Bench, SingleSmallRun) {
  ExperimentConfig config;
  config.algorithms = {Algorithm::pk};
  config.ns = {4};
  config.runs = 1;
  config.base_seed = 7;
  const BenchResult r = run_bench(config);
  ASSERT_EQ(r.runs.size(), 1u);
  const RunRecord& row = r.runs[0];
  EXPECT_EQ(row.n, 4u);
  EXPECT_EQ(row.seed, run_seed(7, 4, 0));
  EXPECT_LE(row.inval_count, 6u);
  EXPECT_LE(row.sum_delta_nodes, 12u);
  EXPECT_EQ(row.wall_ns, 0u);
  ASSERT_EQ(r.summary.size(), 1u);
  EXPECT_EQ(r.summary[0].runs, 1u);
  EXPECT_EQ(r.summary[0].sd_cost, 0.0);
  EXPECT_DOUBLE_EQ(r.summary[0].mean_cost, row.cost_pk);

  std::ostringstream csv;
  write_runs_csv(csv, r.runs);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')),
            "algo,n,seed,inval_count,sum_delta_nodes,sum_delta_edges,sum_cover_measure,"
            "cost_pk,cost_ahrsz,wall_ns");
}

TEST(Bench, ParallelMatchesSerialAndIsRepeatable) {
  ExperimentConfig config;
  config.algorithms = {Algorithm::pk, Algorithm::ahrsz, Algorithm::kb, Algorithm::mnr};
  config.ns = {10, 20, 30};
  config.runs = 4;
  config.base_seed = 11;
  config.checkpoints = {20, 40};
  const std::string parallel = runs_text(run_bench(config));
  EXPECT_EQ(parallel, runs_text(run_bench_serial(config)));
  EXPECT_EQ(parallel, runs_text(run_bench(config)));
  config.base_seed = 12;
  EXPECT_NE(parallel, runs_text(run_bench(config)));
}

TEST(Bench, CheckpointsMatchPrefixClosure) {
  ExperimentConfig config;
  config.algorithms = {Algorithm::pk};
  config.ns = {12};
  config.runs = 3;
  config.checkpoints = {30, 10};
  const BenchResult r = run_bench(config);
  ASSERT_EQ(r.checkpoints.size(), 6u);
  for (std::size_t run = 0; run < 3; ++run) {
    const ReisSequence reis = gen_reis(12, run_seed(config.base_seed, 12, run));
    for (std::size_t j = 0; j < 2; ++j) {
      const CheckpointRecord& c = r.checkpoints[run * 2 + j];
      const std::uint64_t k = j == 0 ? 10 : 30;
      EXPECT_EQ(c.k, k);
      Dag dag(12);
      for (std::uint64_t i = 0; i < k; ++i) dag.add_edge(reis.edges[i].u, reis.edges[i].v);
      EXPECT_EQ(c.phi, comparable_pairs_serial(dag));
    }
  }
}

TEST(Bench, OutputFilesAreByteIdentical) {
  ExperimentConfig config;
  config.ns = {16, 24};
  config.runs = 3;
  config.checkpoints = {50};
  config.out_dir = scratch("bench_a");
  write_bench_outputs(config, run_bench(config));
  const std::filesystem::path first = config.out_dir;
  config.out_dir = scratch("bench_b");
  write_bench_outputs(config, run_bench(config));
  for (const char* file : {"runs.csv", "summary.csv", "checkpoints.csv"}) {
    const std::string a = slurp(first / file);
    EXPECT_FALSE(a.empty()) << file;
    EXPECT_EQ(a, slurp(config.out_dir / file)) << file;
  }
}

TEST(Trace, SumsMatchRunRecord) {
  for (Algorithm algo : kAllAlgorithms) {
    const ReisSequence reis = gen_reis(20, 5);
    const RunRecord row = run_single(algo, reis, false);
    std::ostringstream out;
    write_trace(out, algo, 20, 5, OracleLevel::light);
    std::istringstream lines(out.str());
    std::string line;
    std::uint64_t count = 0, inval = 0, nodes = 0, edges = 0, measure = 0, last_phi = 0;
    while (std::getline(lines, line)) {
      const auto rec = nlohmann::json::parse(line);
      EXPECT_EQ(rec["i"].get<std::uint64_t>(), ++count);
      inval += rec["inval"].get<bool>();
      nodes += rec["delta_nodes"].get<std::uint64_t>();
      edges += rec["delta_edges"].get<std::uint64_t>();
      measure += rec["cover_measure"].get<std::uint64_t>();
      if (algo == Algorithm::pk)
        EXPECT_GE(rec["work_units"].get<std::uint64_t>(), rec["delta_edges"].get<std::uint64_t>());
      const auto phi = rec["phi"].get<std::uint64_t>();
      EXPECT_GE(phi, last_phi);
      last_phi = phi;
    }
    EXPECT_EQ(count, reis.edges.size());
    EXPECT_EQ(inval, row.inval_count);
    EXPECT_EQ(nodes, row.sum_delta_nodes);
    EXPECT_EQ(edges, row.sum_delta_edges);
    EXPECT_EQ(measure, row.sum_cover_measure);
    EXPECT_EQ(last_phi, complete_edge_count(20));
  }
}

TEST(Trace, TwoNodesForwardEdge) {
  std::uint64_t seed = 0;
  while (gen_reis(2, seed).edges[0] != Edge{0, 1}) ++seed;
  std::ostringstream out;
  write_trace(out, Algorithm::pk, 2, seed, OracleLevel::off);
  const auto rec = nlohmann::json::parse(out.str());
  EXPECT_EQ(rec["u"], 0);
  EXPECT_EQ(rec["v"], 1);
  EXPECT_EQ(rec["inval"], false);
  EXPECT_EQ(rec["delta_nodes"], 0);
  EXPECT_FALSE(rec.contains("phi"));
}

TEST(Trace, FilesNamedBySizeSeedAndAlgorithm) {
  ExperimentConfig config;
  config.algorithms = {Algorithm::kb};
  config.ns = {8};
  config.base_seed = 3;
  config.out_dir = scratch("trace");
  const auto paths = run_trace(config);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], config.out_dir / "trace-8-3-kb.ndjson");
  EXPECT_TRUE(std::filesystem::exists(paths[0]));
}

TEST(Verify, ExhaustiveFourNodesPasses) {
  ExperimentConfig config;
  config.algorithms.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
  config.ns = {4};
  config.exhaustive = true;
  config.oracle = OracleLevel::full;
  const VerifyReport report = run_verify(config);
  EXPECT_EQ(report.sequences, 24u * 720 + 24);
  for (const InvariantResult& row : report.invariants) {
    EXPECT_TRUE(row.enabled) << row.name;
    EXPECT_GT(row.checked, 0u) << row.name;
    EXPECT_TRUE(row.passed()) << row.name << ' ' << row.first_counterexample;
  }
}

TEST(Verify, ChainsAreRejectedByEveryAlgorithm) {
  ExperimentConfig config;
  config.algorithms.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
  config.ns = {4};
  config.exhaustive = true;
  int chains = 0;
  for (const VerifyCase& c : verify_cases_for(config)) {
    if (c.edges.size() != 5) continue;
    ++chains;
    for (Algorithm algo : kAllAlgorithms) {
      auto order = make_online_order(algo, 4);
      const auto outcomes = insert_sequence(*order, c.edges);
      EXPECT_TRUE(outcomes[3].accepted() == false && outcomes[4].accepted() == false);
    }
  }
  EXPECT_EQ(chains, 24);
}

TEST(Verify, InjectedFaultIsReported) {
  ExperimentConfig config;
  config.algorithms = {Algorithm::pk};
  config.ns = {8};
  config.runs = 2;
  config.oracle = OracleLevel::light;
  config.fault = Fault::skip_relabel;
  const VerifyReport report = run_verify(config);
  EXPECT_FALSE(report.passed());
  const InvariantResult& validity = report.at("order_validity");
  EXPECT_GT(validity.failures, 0u);
  EXPECT_NE(validity.first_counterexample.find("algo=pk n=8 seed="), std::string::npos);
  EXPECT_NE(validity.first_counterexample.find(" edge="), std::string::npos);
  std::ostringstream text;
  write_verify_report(text, config, report);
  EXPECT_NE(text.str().find("order_validity FAIL"), std::string::npos);
  EXPECT_NE(text.str().find("result FAIL"), std::string::npos);
}

TEST(Verify, LightOracleSkipsClosureChecks) {
  ExperimentConfig config;
  config.algorithms = {Algorithm::ahrsz};
  config.ns = {200};
  config.runs = 1;
  config.oracle = OracleLevel::light;
  const VerifyReport report = run_verify(config);
  EXPECT_TRUE(report.passed());
  EXPECT_FALSE(report.at("delta_phi_bound").enabled);
  EXPECT_FALSE(report.at("cover_3_approx").enabled);
  EXPECT_EQ(report.at("order_validity").checked, complete_edge_count(200));
}

}  // namespace
}  // namespace oto
