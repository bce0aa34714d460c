#include <gtest/gtest.h>

#include <cmath>

#include "oto/closure.hpp"
#include "oto/oracle.hpp"
#include "oto/random.hpp"
#include "oto/statistics.hpp"
#include "test_support.hpp"

namespace oto {
namespace {

const std::vector<Rank> kIdentity4{1, 2, 3, 4};

TEST(CheckValidOrder, Examples) {
  EXPECT_TRUE(check_valid_order(Dag(3), std::vector<Rank>{3, 1, 2}));
  Dag chain(3);
  chain.add_edge(0, 1);
  chain.add_edge(1, 2);
  EXPECT_FALSE(check_valid_order(chain, std::vector<Rank>{2, 1, 3}));
  EXPECT_TRUE(check_valid_order(chain, std::vector<Rank>{1, 2, 3}));
}

TEST(IsCover, PendingEdgeOnIdentity) {
  const Dag dag(4);
  const Edge e{2, 1};
  EXPECT_TRUE(is_cover(dag, kIdentity4, e, std::vector<NodeId>{1}));
  EXPECT_TRUE(is_cover(dag, kIdentity4, e, std::vector<NodeId>{2}));
  EXPECT_FALSE(is_cover(dag, kIdentity4, e, std::vector<NodeId>{}));
  EXPECT_FALSE(is_cover(dag, kIdentity4, e, std::vector<NodeId>{0}));
}

TEST(IsCover, ClosureOverloadAgrees) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ReisSequence reis = gen_reis(7, seed);
    Dag dag(7);
    for (std::size_t i = 0; i + 1 < reis.edges.size(); ++i)
      dag.add_edge(reis.edges[i].u, reis.edges[i].v);
    const Edge e = reis.edges.back();
    const std::vector<Rank> order{1, 2, 3, 4, 5, 6, 7};
    Dag after = dag;
    after.add_edge(e.u, e.v);
    if (!testing::respects_edges(dag, order)) continue;
    const Reachability closure = Reachability::of(after);
    for (unsigned mask = 0; mask < (1u << 7); ++mask) {
      std::vector<NodeId> cover;
      for (NodeId x = 0; x < 7; ++x)
        if (mask >> x & 1) cover.push_back(x);
      ASSERT_EQ(is_cover(dag, order, e, cover), is_cover(closure, order, cover));
    }
  }
}

// Cheapest cover over every subset of V, from the definition.
std::uint64_t min_measure_over_all_subsets(const Dag& dag, const std::vector<Rank>& order,
                                           Edge e) {
  Dag after = dag;
  after.add_edge(e.u, e.v);
  const auto reach = testing::reach_matrix(after);
  const std::size_t n = dag.node_count();
  std::uint64_t best = UINT64_MAX;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool covers = true;
    for (NodeId x = 0; x < n && covers; ++x)
      for (NodeId y = 0; y < n && covers; ++y)
        if (reach[x][y] && order[y] < order[x] && !(mask >> x & 1) && !(mask >> y & 1))
          covers = false;
    if (!covers) continue;
    std::uint64_t measure = 0;
    for (NodeId x = 0; x < n; ++x)
      if (mask >> x & 1) measure += 1 + after.out(x).size() + after.in(x).size();
    best = std::min(best, measure);
  }
  return best;
}

TEST(MinCover, SingleMisorderedPair) {
  const MinimalCoverResult r = min_cover_bruteforce(Dag(4), kIdentity4, {2, 1});
  EXPECT_EQ(r.measure, 2u);
  EXPECT_EQ(r.cover, std::vector<NodeId>{1});
}

TEST(MinCover, NonInvalidatingIsEmpty) {
  const MinimalCoverResult r = min_cover_bruteforce(Dag(4), kIdentity4, {0, 3});
  EXPECT_TRUE(r.cover.empty());
  EXPECT_EQ(r.measure, 0u);
}

TEST(MinCover, StarIsDeterministic) {
  Dag dag(4);
  dag.add_edge(1, 2);
  dag.add_edge(0, 2);
  const MinimalCoverResult a = min_cover_bruteforce(dag, kIdentity4, {3, 1});
  const MinimalCoverResult b = min_cover_bruteforce(dag, kIdentity4, {3, 1});
  EXPECT_EQ(a.cover, b.cover);
  EXPECT_EQ(a.measure, b.measure);
  EXPECT_TRUE(is_cover(dag, kIdentity4, {3, 1}, a.cover));
  EXPECT_EQ(a.measure, cover_measure(dag, {3, 1}, a.cover));
  EXPECT_EQ(a.measure, min_measure_over_all_subsets(dag, kIdentity4, {3, 1}));
}

TEST(MinCover, MatchesSearchOverAllNodes) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 6 + seed % 3;
    const ReisSequence reis = gen_reis(n, seed);
    auto online = make_online_order(Algorithm::pk, n);
    for (const Edge& e : reis.edges) {
      const std::vector<Rank> order = online->ranks();
      const Dag& dag = online->dag();
      if (order[e.u] > order[e.v]) {
        const MinimalCoverResult r = min_cover_bruteforce(dag, order, e);
        ASSERT_TRUE(is_cover(dag, order, e, r.cover));
        ASSERT_EQ(r.measure, min_measure_over_all_subsets(dag, order, e));
        ++checked;
      }
      online->insert(e.u, e.v);
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(MinCover, LimitExceeded) {
  const std::size_t n = 20;
  std::vector<Rank> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Rank>(i + 1);
  Dag dag(n);
  for (NodeId x = 1; x + 1 < n; ++x) dag.add_edge(0, x);
  EXPECT_THROW(min_cover_bruteforce(dag, order, {19, 0}, 16), SizeLimitExceeded);
}

TEST(MaxDegree, Examples) {
  EXPECT_EQ(max_degree(Dag(5)), 0u);
  Dag star(4);
  for (NodeId x = 1; x < 4; ++x) star.add_edge(0, x);
  EXPECT_EQ(max_degree(star), 3u);
  const Dag complete = sample_dag_gnm(9, complete_edge_count(9), 3);
  EXPECT_EQ(max_degree(complete), 8u);
  for (NodeId x = 0; x < 9; ++x) EXPECT_EQ(complete.out(x).size() + complete.in(x).size(), 8u);
}

TEST(PredictedPhi, FirstBranchValue) {
  const double ln100 = std::log(100.0);
  const double inner = 1 - 99 * ln100 / (2 * (2500 + 100 * ln100));
  EXPECT_NEAR(predicted_phi(100, 2500), 5000 * inner * inner, 1e-9);
  EXPECT_NEAR(predicted_phi(100, 2500), 4259.657116089343, 1e-6);
}

TEST(PredictedPhi, BoundaryUsesFirstBranch) {
  const double ln100 = std::log(100.0);
  const double k = 4950 - 2 * 100 * ln100;
  const double inner = 1 - 99 * ln100 / (2 * (k + 100 * ln100));
  EXPECT_NEAR(predicted_phi(100, k), 5000 * inner * inner, 1e-9);
}

TEST(PredictedPhi, SecondBranchValue) {
  const double ln100 = std::log(100.0);
  const double inner = 1 - 99 * ln100 / (2 * (4500 + std::sqrt(ln100 * 450)));
  EXPECT_NEAR(predicted_phi(100, 4500), 5000 * inner * inner, 1e-9);
  EXPECT_NEAR(predicted_phi(100, 4500), 4511.0793856233895, 1e-6);
  EXPECT_NO_THROW(predicted_phi(100, 4950 - 2 * ln100));
}

TEST(PredictedPhi, DomainErrors) {
  EXPECT_THROW(predicted_phi(100, 100), DomainError);
  EXPECT_THROW(predicted_phi(100, 100 * std::log(100.0)), DomainError);
  EXPECT_THROW(predicted_phi(100, 4950), DomainError);
}

TEST(Cost, Examples) {
  EXPECT_EQ(cost_pk(std::vector<InsertionStats>(3)), 0.0);
  EXPECT_EQ(cost_ahrsz(std::vector<InsertionStats>(3)), 0.0);
  InsertionStats s;
  s.delta_nodes = 2;
  s.delta_edges = 1;
  EXPECT_DOUBLE_EQ(cost_pk(std::vector{s}), 3.0);
  InsertionStats k;
  k.cover_measure = 4;
  EXPECT_DOUBLE_EQ(cost_ahrsz(std::vector{k}), 8.0);
  EXPECT_EQ(cost_log2(1.0), 0.0);
  EXPECT_EQ(cost_log2(0.5), 0.0);
  EXPECT_DOUBLE_EQ(cost_log2(8.0), 3.0);
}

TEST(CountInvalidating, Examples) {
  std::vector<InsertOutcome> topo(6), mixed(5);
  EXPECT_EQ(count_invalidating(topo), 0u);
  mixed[1].stats.invalidating = true;
  mixed[4].stats.invalidating = true;
  EXPECT_EQ(count_invalidating(mixed), 2u);
}

TEST(PhiTrace, MonotoneToComplete) {
  const ReisSequence reis = gen_reis(25, 17);
  const PhiTrace trace = phi_trace(25, reis.edges);
  ASSERT_EQ(trace.phi.size(), reis.edges.size() + 1);
  EXPECT_EQ(trace.phi.front(), 0u);
  EXPECT_EQ(trace.phi.back(), complete_edge_count(25));
  Dag dag(25);
  for (std::size_t i = 1; i < trace.phi.size(); ++i) {
    EXPECT_GE(trace.phi[i], trace.phi[i - 1]);
    dag.add_edge(reis.edges[i - 1].u, reis.edges[i - 1].v);
    if (i % 50 == 0) EXPECT_EQ(trace.phi[i], comparable_pairs_serial(dag));
  }
}

TEST(PhiTrace, CycleRejected) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_THROW(phi_trace(3, edges), PreconditionViolation);
}

TEST(Statistics, KnownValues) {
  const std::vector<double> xs{2, 4, 4, 4, 5, 5, 7, 9};
  EXPECT_DOUBLE_EQ(mean(xs), 5.0);
  EXPECT_NEAR(sample_sd(xs), std::sqrt(32.0 / 7), 1e-12);
  EXPECT_EQ(sample_sd(std::vector<double>{3}), 0.0);
  EXPECT_NEAR(spearman(std::vector<double>{1, 2, 3, 4, 5}, std::vector<double>{2, 1, 4, 3, 5}),
              0.8, 1e-12);
  EXPECT_NEAR(spearman(std::vector<double>{1, 2, 2, 3}, std::vector<double>{1, 3, 2, 4}),
              0.9486832980505139, 1e-12);
  EXPECT_NEAR(spearman(std::vector<double>{1, 2, 3}, std::vector<double>{9, 5, 1}), -1.0,
              1e-12);
  EXPECT_EQ(spearman(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}), 0.0);
}

}  // namespace
}  // namespace oto
