#ifndef OTO_TESTS_SUPPORT_HPP
#define OTO_TESTS_SUPPORT_HPP

// Brute-force helpers shared by the unit tests. They do not use the
// library's own closure and region code.

#include <algorithm>
#include <numeric>
#include <vector>

#include "oto/dag.hpp"

namespace oto::testing {

// reach[x][y]: a non-empty path x ~> y, by DFS from every node.
inline std::vector<std::vector<bool>> reach_matrix(const Dag& dag) {
  const std::size_t n = dag.node_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (NodeId s = 0; s < n; ++s) {
    std::vector<NodeId> stack(dag.out(s).begin(), dag.out(s).end());
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      if (reach[s][x]) continue;
      reach[s][x] = true;
      for (NodeId w : dag.out(x)) stack.push_back(w);
    }
  }
  return reach;
}

inline bool respects_edges(const Dag& dag, const std::vector<Rank>& rank) {
  for (const Edge& e : dag.edges())
    if (rank[e.u] >= rank[e.v]) return false;
  return true;
}

// Every topological order of a small DAG, as rank vectors.
inline std::vector<std::vector<Rank>> all_topological_orders(const Dag& dag) {
  const std::size_t n = dag.node_count();
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::vector<std::vector<Rank>> result;
  do {
    std::vector<Rank> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[perm[i]] = static_cast<Rank>(i + 1);
    if (respects_edges(dag, rank)) result.push_back(rank);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

// delta from its definition: v <= x <= u and (v ~> x or x ~> u), reflexive.
inline std::vector<NodeId> region_by_definition(const Dag& dag, const std::vector<Rank>& rank,
                                                NodeId u, NodeId v) {
  std::vector<NodeId> delta;
  if (rank[u] < rank[v]) return delta;
  const auto reach = reach_matrix(dag);
  for (NodeId x = 0; x < dag.node_count(); ++x) {
    if (rank[x] < rank[v] || rank[x] > rank[u]) continue;
    if (x == v || x == u || reach[v][x] || reach[x][u]) delta.push_back(x);
  }
  return delta;
}

}  // namespace oto::testing

#endif  // OTO_TESTS_SUPPORT_HPP
