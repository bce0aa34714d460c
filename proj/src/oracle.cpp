#include "oto/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace oto {

bool check_valid_order(const Dag& dag, std::span<const Rank> rank_of) {
  for (NodeId x = 0; x < dag.node_count(); ++x)
    for (NodeId y : dag.out(x))
      if (rank_of[x] >= rank_of[y]) return false;
  return true;
}

bool is_cover(const Reachability& closure_after, std::span<const Rank> order_before,
              std::span<const NodeId> cover) {
  const std::size_t n = closure_after.node_count();
  std::vector<std::uint8_t> in_cover(n, 0);
  for (NodeId x : cover) in_cover[x] = 1;
  for (NodeId x = 0; x < n; ++x) {
    if (in_cover[x]) continue;
    for (NodeId y = 0; y < n; ++y)
      if (!in_cover[y] && order_before[y] < order_before[x] &&
          closure_after.reaches(x, y))
        return false;
  }
  return true;
}

bool is_cover(const Dag& dag_before, std::span<const Rank> order_before, Edge edge,
              std::span<const NodeId> cover) {
  Reachability closure = Reachability::of(dag_before);
  closure.add_edge(edge.u, edge.v);
  return is_cover(closure, order_before, cover);
}

std::uint64_t cover_measure(const Dag& dag_before, Edge edge,
                            std::span<const NodeId> cover) {
  std::uint64_t measure = cover.size();
  for (NodeId x : cover)
    measure += dag_before.degree(x) + (x == edge.u) + (x == edge.v);
  return measure;
}

MinimalCoverResult min_cover_bruteforce(const Dag& dag_before,
                                        std::span<const Rank> order_before, Edge edge,
                                        std::size_t limit) {
  const AffectedRegion region = affected_region(dag_before, order_before, edge.u, edge.v);
  if (!region.invalidating()) return {};
  if (region.delta_nodes > limit)
    throw SizeLimitExceeded("affected region has " + std::to_string(region.delta_nodes) +
                            " nodes, limit is " + std::to_string(limit));

  std::vector<NodeId> delta(region.forward);
  delta.insert(delta.end(), region.backward.begin(), region.backward.end());
  std::sort(delta.begin(), delta.end());

  Reachability closure = Reachability::of(dag_before);
  closure.add_edge(edge.u, edge.v);

  // Each misordered reachable pair, as a mask over delta positions. Both
  // endpoints always lie in delta.
  std::vector<std::uint32_t> pairs;
  const std::size_t k = delta.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const NodeId x = delta[i], y = delta[j];
      if (x != y && order_before[y] < order_before[x] && closure.reaches(x, y))
        pairs.push_back((1u << i) | (1u << j));
    }

  std::vector<std::uint64_t> weight(k);
  for (std::size_t i = 0; i < k; ++i)
    weight[i] = 1 + dag_before.degree(delta[i]) + (delta[i] == edge.u) +
                (delta[i] == edge.v);

  auto as_nodes = [&](std::uint32_t mask) {
    std::vector<NodeId> nodes;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) nodes.push_back(delta[i]);
    return nodes;
  };

  bool found = false;
  std::uint32_t best = 0;
  std::uint64_t best_measure = 0;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (!std::all_of(pairs.begin(), pairs.end(),
                     [mask](std::uint32_t p) { return (p & mask) != 0; }))
      continue;
    std::uint64_t measure = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) measure += weight[i];
    bool better = !found || measure < best_measure;
    if (found && measure == best_measure) {
      const int size = std::popcount(mask), best_size = std::popcount(best);
      better = size < best_size || (size == best_size && as_nodes(mask) < as_nodes(best));
    }
    if (better) {
      found = true;
      best = mask;
      best_measure = measure;
    }
  }
  return {as_nodes(best), best_measure};
}

std::size_t max_degree(const Dag& dag) {
  std::size_t best = 0;
  for (NodeId x = 0; x < dag.node_count(); ++x) best = std::max(best, dag.degree(x));
  return best;
}

double predicted_phi(std::size_t n, double k) {
  if (n < 2) throw DomainError("predicted_phi needs n >= 2");
  const double nn = static_cast<double>(n);
  const double N = static_cast<double>(complete_edge_count(n));
  const double ln = std::log(nn);
  double offset;
  if (k > nn * ln && k <= N - 2 * nn * ln)
    offset = nn * ln;
  else if (k > N - 2 * nn * ln && k <= N - 2 * ln)
    offset = std::sqrt(ln * (N - k));
  else
    throw DomainError("k = " + std::to_string(k) + " outside (n ln n, N - 2 ln n]");
  const double factor = 1.0 - (nn - 1) * ln / (2 * (k + offset));
  return nn * nn / 2 * factor * factor;
}

double cost_log2(double x) { return x <= 1 ? 0.0 : std::log2(x); }

double cost_pk(std::span<const InsertionStats> stats) {
  double total = 0;
  for (const InsertionStats& s : stats) {
    const auto nodes = static_cast<double>(s.delta_nodes);
    total += static_cast<double>(s.delta_edges) + nodes * cost_log2(nodes);
  }
  return total;
}

double cost_ahrsz(std::span<const InsertionStats> stats) {
  double total = 0;
  for (const InsertionStats& s : stats) {
    const auto measure = static_cast<double>(s.cover_measure);
    total += measure * cost_log2(measure);
  }
  return total;
}

std::uint64_t count_invalidating(std::span<const InsertOutcome> outcomes) {
  return static_cast<std::uint64_t>(
      std::count_if(outcomes.begin(), outcomes.end(),
                    [](const InsertOutcome& o) { return o.stats.invalidating; }));
}

PhiTrace phi_trace(std::size_t n, std::span<const Edge> edges) {
  PhiTrace trace;
  trace.phi.reserve(edges.size() + 1);
  trace.phi.push_back(0);
  Reachability closure(n);
  for (const Edge& e : edges) {
    closure.add_edge(e.u, e.v);
    trace.phi.push_back(closure.comparable_pairs());
  }
  return trace;
}

}  // namespace oto
