#include <algorithm>

#include "oto/algorithms.hpp"

namespace oto {

namespace {

// DFS-based offline topological sort. Returns false on a back edge.
// Roots are taken in node-index order, so the result is deterministic.
bool offline_topological_sort(const Dag& dag, std::vector<NodeId>& topo,
                              std::uint64_t& work) {
  const std::size_t n = dag.node_count();
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(n, kWhite);
  std::vector<std::pair<NodeId, std::size_t>> stack;  // node, next out-edge
  std::vector<NodeId> postorder;
  postorder.reserve(n);

  for (NodeId root = 0; root < n; ++root) {
    if (colour[root] != kWhite) continue;
    colour[root] = kGrey;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const auto succ = dag.out(x);
      if (next < succ.size()) {
        const NodeId w = succ[next++];
        ++work;
        if (colour[w] == kGrey) return false;
        if (colour[w] == kWhite) {
          colour[w] = kGrey;
          stack.emplace_back(w, 0);
        }
      } else {
        colour[x] = kBlack;
        postorder.push_back(x);
        stack.pop_back();
      }
    }
  }
  topo.assign(postorder.rbegin(), postorder.rend());
  return true;
}

}  // namespace

NaiveOrder::NaiveOrder(std::size_t n) : OnlineTopoOrder(n), order_(n) {}

std::vector<Rank> NaiveOrder::ranks() const {
  return {order_.ranks().begin(), order_.ranks().end()};
}

InsertOutcome NaiveOrder::insert_checked(NodeId u, NodeId v) {
  InsertOutcome outcome;
  outcome.stats.invalidating = order_.rank(u) > order_.rank(v);
  cover_ = {};

  dag_.add_edge(u, v);
  std::vector<NodeId> topo;
  std::uint64_t work = 0;
  if (!offline_topological_sort(dag_, topo, work)) {
    dag_.remove_edge(u, v);
    outcome.status = InsertStatus::cycle_detected;
    outcome.stats.work_units = work;
    return outcome;
  }
  order_.assign_sequence(topo);
  outcome.stats.work_units = work + dag_.node_count();
  return outcome;
}

}  // namespace oto
