#include "oto/algorithms.hpp"

namespace oto {

MnrOrder::MnrOrder(std::size_t n) : OnlineTopoOrder(n), order_(n), visited_(n, 0) {}

std::vector<Rank> MnrOrder::ranks() const {
  return {order_.ranks().begin(), order_.ranks().end()};
}

InsertOutcome MnrOrder::insert_checked(NodeId u, NodeId v) {
  InsertOutcome outcome;
  const Rank ru = order_.rank(u);
  const Rank rv = order_.rank(v);
  if (ru < rv) {
    dag_.add_edge(u, v);
    return outcome;
  }
  outcome.stats.invalidating = true;
  cover_ = {};

  std::uint64_t work = 0;
  std::vector<NodeId> reached;
  std::vector<NodeId> stack{v};
  visited_[v] = 1;
  bool cycle = false;
  while (!stack.empty() && !cycle) {
    const NodeId x = stack.back();
    stack.pop_back();
    reached.push_back(x);
    for (NodeId w : dag_.out(x)) {
      ++work;
      const Rank r = order_.rank(w);
      if (r == ru) {
        cycle = true;
        break;
      }
      if (r < ru && !visited_[w]) {
        visited_[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (cycle) {
    for (NodeId x : reached) visited_[x] = 0;
    for (NodeId x : stack) visited_[x] = 0;
    outcome.status = InsertStatus::cycle_detected;
    outcome.stats.work_units = work;
    return outcome;
  }

  // Shift the window [rv, ru]: untouched nodes close ranks to the left,
  // the reached set follows in its old relative order.
  std::vector<NodeId> window;
  window.reserve(ru - rv + 1);
  for (Rank r = rv; r <= ru; ++r)
    if (!visited_[order_.node_at(r)]) window.push_back(order_.node_at(r));
  for (Rank r = rv; r <= ru; ++r) {
    const NodeId x = order_.node_at(r);
    if (visited_[x]) {
      window.push_back(x);
      cover_.forward.push_back(x);
    }
  }
  for (std::size_t i = 0; i < window.size(); ++i)
    order_.assign(window[i], static_cast<Rank>(rv + i));
  for (NodeId x : reached) visited_[x] = 0;
  work += 2 * window.size();

  outcome.stats.cover_nodes = reached.size();
  std::uint64_t degree_sum = 1;  // the new edge touches v
  for (NodeId x : reached) degree_sum += dag_.degree(x);
  outcome.stats.cover_edges = degree_sum;
  outcome.stats.cover_measure = outcome.stats.cover_nodes + outcome.stats.cover_edges;
  outcome.stats.work_units = work;
  dag_.add_edge(u, v);
  return outcome;
}

}  // namespace oto
