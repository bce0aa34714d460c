#include <optional>

#include "cover_stats.hpp"
#include "oto/algorithms.hpp"

namespace oto {

KbOrder::KbOrder(std::size_t n) : OnlineTopoOrder(n), order_(n), marks_(n, 0) {}

InsertOutcome KbOrder::insert_checked(NodeId u, NodeId v) {
  InsertOutcome outcome;
  if (order_.precedes(u, v)) {
    dag_.add_edge(u, v);
    return outcome;
  }

  FrontierSearch found =
      search_frontiers(dag_, order_, u, v, FrontierBalance::directional, marks_);
  if (found.cycle) {
    cover_ = {};
    outcome.status = InsertStatus::cycle_detected;
    outcome.stats.invalidating = true;
    outcome.stats.work_units = found.work;
    return outcome;
  }
  detail::fill_cover_stats(dag_, found, u, v, outcome.stats);
  dag_.add_edge(u, v);

  auto later = [this](std::optional<NodeId> a, std::optional<NodeId> b) {
    if (!a) return b;
    if (!b) return a;
    return order_.precedes(*a, *b) ? b : a;
  };
  auto earlier = [this](std::optional<NodeId> a, std::optional<NodeId> b) {
    if (!a) return b;
    if (!b) return a;
    return order_.precedes(*a, *b) ? a : b;
  };

  // Every forward-visited node is before every backward-visited one, the
  // unvisited part of R_B ends at backward_max and the unvisited part of
  // R_F starts at forward_min. The visited nodes are reinserted as one
  // block (backward side first) right after the last of
  // {forward-visited, unvisited R_B}.
  std::optional<NodeId> last_forward;
  if (!found.forward.empty()) last_forward = found.forward.back();
  std::optional<NodeId> first_backward;
  if (!found.backward.empty()) first_backward = found.backward.front();
  const std::optional<NodeId> pivot = later(last_forward, found.backward_max);

  std::vector<NodeId> moved(found.backward);
  moved.insert(moved.end(), found.forward.begin(), found.forward.end());
  std::vector<OrderLabel> fresh;
  fresh.reserve(moved.size());

  if (pivot) {
    OrderLabel anchor = order_.label(*pivot);
    for (std::size_t i = 0; i < moved.size(); ++i) {
      anchor = order_.place_after(anchor);
      fresh.push_back(anchor);
    }
  } else {
    const NodeId bound = *earlier(first_backward, found.forward_min);
    const OrderLabel anchor = order_.label(bound);
    for (std::size_t i = 0; i < moved.size(); ++i)
      fresh.push_back(order_.place_before(anchor));
  }
  for (std::size_t i = 0; i < moved.size(); ++i) order_.rebind(moved[i], fresh[i]);

  outcome.stats.work_units = found.work + 2 * moved.size();
  cover_.forward = std::move(found.forward);
  cover_.backward = std::move(found.backward);
  return outcome;
}

}  // namespace oto
