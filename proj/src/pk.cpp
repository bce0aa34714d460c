#include <algorithm>

#include "oto/algorithms.hpp"

namespace oto {

PkOrder::PkOrder(std::size_t n) : OnlineTopoOrder(n), order_(n), visited_(n, 0) {}

std::vector<Rank> PkOrder::ranks() const {
  return {order_.ranks().begin(), order_.ranks().end()};
}

bool PkOrder::forward_dfs(NodeId v, Rank upper, std::uint64_t& work) {
  stack_.assign(1, v);
  visited_[v] = 1;
  while (!stack_.empty()) {
    const NodeId x = stack_.back();
    stack_.pop_back();
    cover_.forward.push_back(x);
    for (NodeId w : dag_.out(x)) {
      ++work;
      const Rank r = order_.rank(w);
      if (r == upper) return true;
      if (r < upper && !visited_[w]) {
        visited_[w] = 1;
        stack_.push_back(w);
      }
    }
  }
  return false;
}

void PkOrder::backward_dfs(NodeId u, Rank lower, std::uint64_t& work) {
  stack_.assign(1, u);
  visited_[u] = 1;
  while (!stack_.empty()) {
    const NodeId x = stack_.back();
    stack_.pop_back();
    cover_.backward.push_back(x);
    for (NodeId w : dag_.in(x)) {
      ++work;
      if (order_.rank(w) > lower && !visited_[w]) {
        visited_[w] = 1;
        stack_.push_back(w);
      }
    }
  }
}

InsertOutcome PkOrder::insert_checked(NodeId u, NodeId v) {
  InsertOutcome outcome;
  const Rank ru = order_.rank(u);
  const Rank rv = order_.rank(v);
  if (ru < rv) {
    dag_.add_edge(u, v);
    return outcome;
  }

  cover_.forward.clear();
  cover_.backward.clear();
  std::uint64_t work = 0;

  if (forward_dfs(v, ru, work)) {
    for (NodeId x : cover_.forward) visited_[x] = 0;
    for (NodeId x : stack_) visited_[x] = 0;
    cover_.forward.clear();
    outcome.status = InsertStatus::cycle_detected;
    outcome.stats.invalidating = true;
    outcome.stats.work_units = work;
    return outcome;
  }
  backward_dfs(u, rv, work);

  std::uint64_t comparisons = 0;
  auto by_rank = [this, &comparisons](NodeId a, NodeId b) {
    ++comparisons;
    return order_.rank(a) < order_.rank(b);
  };
  std::sort(cover_.forward.begin(), cover_.forward.end(), by_rank);
  std::sort(cover_.backward.begin(), cover_.backward.end(), by_rank);

  // The slots already held by the region, in increasing order.
  std::vector<Rank> slots;
  slots.reserve(cover_.size());
  std::size_t i = 0, j = 0;
  while (i < cover_.backward.size() || j < cover_.forward.size()) {
    if (j == cover_.forward.size() ||
        (i < cover_.backward.size() &&
         order_.rank(cover_.backward[i]) < order_.rank(cover_.forward[j])))
      slots.push_back(order_.rank(cover_.backward[i++]));
    else
      slots.push_back(order_.rank(cover_.forward[j++]));
  }

  std::size_t next = 0;
  std::uint64_t degree_sum = 2;  // the new edge touches u and v
  for (NodeId x : cover_.backward) {
    order_.assign(x, slots[next++]);
    visited_[x] = 0;
    degree_sum += dag_.degree(x);
  }
  for (NodeId x : cover_.forward) {
    order_.assign(x, slots[next++]);
    visited_[x] = 0;
    degree_sum += dag_.degree(x);
  }

  InsertionStats& s = outcome.stats;
  s.invalidating = true;
  s.delta_nodes = cover_.size();
  s.delta_edges = degree_sum;
  s.cover_nodes = s.delta_nodes;
  s.cover_edges = s.delta_edges;
  s.cover_measure = s.cover_nodes + s.cover_edges;
  // Edge scans are charged at ||delta||, the cost model's bound for them.
  s.work_units = std::max(work, degree_sum) + comparisons + slots.size();
  dag_.add_edge(u, v);
  return outcome;
}

}  // namespace oto
