#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "oto/algorithms.hpp"

namespace oto {

LabelOrder::LabelOrder(std::size_t n) : label_of_(n), node_of_cell_() {
  if (n == 0) throw InvalidConfig("order needs at least one node");
  for (std::size_t i = 0; i < n; ++i) {
    label_of_[i] = list_.push_back();
    if (node_of_cell_.size() <= label_of_[i].index)
      node_of_cell_.resize(label_of_[i].index + 1);
    node_of_cell_[label_of_[i].index] = static_cast<NodeId>(i);
  }
}

void LabelOrder::rebind(NodeId x, OrderLabel fresh) {
  list_.erase(label_of_[x]);
  label_of_[x] = fresh;
  if (node_of_cell_.size() <= fresh.index) node_of_cell_.resize(fresh.index + 1);
  node_of_cell_[fresh.index] = x;
}

std::vector<Rank> LabelOrder::ranks() const {
  std::vector<Rank> rank_of(label_of_.size());
  Rank r = 0;
  for (OrderLabel cell : list_.labels()) rank_of[node_of_cell_[cell.index]] = ++r;
  return rank_of;
}

FrontierSearch search_frontiers(const Dag& dag, const LabelOrder& order, NodeId u,
                                NodeId v, FrontierBalance balance,
                                std::vector<std::uint8_t>& marks) {
  constexpr std::uint8_t kForward = 1;
  constexpr std::uint8_t kBackward = 2;
  using Entry = std::pair<std::uint64_t, NodeId>;  // (tag, node)

  const bool total = balance == FrontierBalance::total_degree;
  // A node's weight is its share of |>K<|: itself plus its edges, the
  // pending edge included.
  auto forward_weight = [&](NodeId x) -> std::uint64_t {
    if (!total) return 1 + dag.out_degree(x);
    return 1 + dag.degree(x) + (x == v) + (x == u);
  };
  auto backward_weight = [&](NodeId x) -> std::uint64_t {
    if (!total) return 1 + dag.in_degree(x);
    return 1 + dag.degree(x) + (x == v) + (x == u);
  };

  FrontierSearch result;
  const std::uint64_t tag_u = order.tag(u);
  const std::uint64_t tag_v = order.tag(v);

  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> forward_queue;
  std::priority_queue<Entry> backward_queue;
  std::vector<NodeId> touched{u, v};
  marks[v] |= kForward;

  marks[u] |= kBackward;

  auto expand_forward = [&](NodeId x) {
    ++result.work;
    result.forward.push_back(x);
    for (NodeId w : dag.out(x)) {
      ++result.work;
      if (marks[w] & kBackward) {
        result.cycle = true;
        return;
      }
      if (marks[w] & kForward) continue;
      const std::uint64_t t = order.tag(w);
      if (t < tag_u) {
        marks[w] |= kForward;
        touched.push_back(w);
        forward_queue.emplace(t, w);
        ++result.work;
      }
    }
  };
  auto expand_backward = [&](NodeId x) {
    ++result.work;
    result.backward.push_back(x);
    for (NodeId w : dag.in(x)) {
      ++result.work;
      if (marks[w] & kForward) {
        result.cycle = true;
        return;
      }
      if (marks[w] & kBackward) continue;
      const std::uint64_t t = order.tag(w);
      if (t > tag_v) {
        marks[w] |= kBackward;
        touched.push_back(w);
        backward_queue.emplace(t, w);
        ++result.work;
      }
    }
  };

  forward_queue.emplace(tag_v, v);
  backward_queue.emplace(tag_u, u);
  std::uint64_t forward_seen = 0;
  std::uint64_t backward_seen = 0;

  // The side whose total stays smaller after taking its next candidate
  // moves; ties go forward.
  while (!result.cycle && !forward_queue.empty() && !backward_queue.empty() &&
         forward_queue.top().first < backward_queue.top().first) {
    const NodeId f = forward_queue.top().second;
    const NodeId b = backward_queue.top().second;
    if (forward_seen + forward_weight(f) <= backward_seen + backward_weight(b)) {
      forward_queue.pop();
      forward_seen += forward_weight(f);
      expand_forward(f);
    } else {
      backward_queue.pop();
      backward_seen += backward_weight(b);
      expand_backward(b);
    }
  }

  for (NodeId x : touched) marks[x] = 0;
  if (!forward_queue.empty()) result.forward_min = forward_queue.top().second;
  if (!backward_queue.empty()) result.backward_max = backward_queue.top().second;
  std::reverse(result.backward.begin(), result.backward.end());
  return result;
}

}  // namespace oto
