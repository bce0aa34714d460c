#include <algorithm>
#include <optional>
#include <tuple>

#include "cover_stats.hpp"
#include "oto/algorithms.hpp"

namespace oto {

AhrszOrder::AhrszOrder(std::size_t n)
    : OnlineTopoOrder(n), order_(n), marks_(n, 0), in_cover_(n, 0), position_(n, 0) {}

// Relabelling runs in four steps over the marked set K, visited in a
// topological order of the new graph (backward side, then forward side):
//  1. reverse pass: ceiling(x) = earliest unmarked node x must precede,
//     directly or through marked successors;
//  2. forward pass: floor(x) = latest cell x must follow, i.e. unmarked
//     predecessors and the already placed marked predecessors;
//  3. a node whose current cell already lies strictly inside
//     (floor, ceiling) keeps it; others get a fresh cell right after
//     max(floor, pivot), the pivot being the last forward-visited node or
//     the last unvisited backward candidate, whichever is later. If that
//     anchor lies before v, the cell goes right before min(ceiling, first
//     marked node) instead, so nothing moves outside the v..u window;
//  4. nodes sharing the same floor/pivot anchor are inserted after that
//     single anchor, so the number of distinct new positions equals the
//     number of distinct anchors.
InsertOutcome AhrszOrder::insert_checked(NodeId u, NodeId v) {
  InsertOutcome outcome;
  if (order_.precedes(u, v)) {
    dag_.add_edge(u, v);
    return outcome;
  }

  FrontierSearch found =
      search_frontiers(dag_, order_, u, v, FrontierBalance::total_degree, marks_);
  if (found.cycle) {
    cover_ = {};
    outcome.status = InsertStatus::cycle_detected;
    outcome.stats.invalidating = true;
    outcome.stats.work_units = found.work;
    return outcome;
  }
  detail::fill_cover_stats(dag_, found, u, v, outcome.stats);
  dag_.add_edge(u, v);

  const OrderedList& list = order_.list();
  auto later = [&list](std::optional<OrderLabel> a, std::optional<OrderLabel> b) {
    if (!a) return b;
    if (!b) return a;
    return list.precedes(*a, *b) ? b : a;
  };
  auto earlier = [&list](std::optional<OrderLabel> a, std::optional<OrderLabel> b) {
    if (!a) return b;
    if (!b) return a;
    return list.precedes(*a, *b) ? a : b;
  };
  auto label_of = [this](std::optional<NodeId> x) -> std::optional<OrderLabel> {
    if (!x) return std::nullopt;
    return order_.label(*x);
  };

  std::vector<NodeId> marked(found.backward);
  marked.insert(marked.end(), found.forward.begin(), found.forward.end());
  for (std::uint32_t i = 0; i < marked.size(); ++i) {
    in_cover_[marked[i]] = 1;
    position_[marked[i]] = i;
  }
  std::uint64_t work = found.work;

  std::vector<std::optional<NodeId>> ceiling(marked.size());
  for (std::size_t i = marked.size(); i-- > 0;) {
    std::optional<NodeId> best;
    for (NodeId w : dag_.out(marked[i])) {
      ++work;
      const std::optional<NodeId> c = in_cover_[w] ? ceiling[position_[w]] : w;
      if (c && (!best || order_.precedes(*c, *best))) best = c;
    }
    ceiling[i] = best;
  }

  std::optional<OrderLabel> pivot;
  if (!found.forward.empty()) pivot = order_.label(found.forward.back());
  pivot = later(pivot, label_of(found.backward_max));
  std::optional<OrderLabel> lower_bound;
  if (!found.backward.empty()) lower_bound = order_.label(found.backward.front());
  lower_bound = earlier(lower_bound, label_of(found.forward_min));

  const OrderLabel window_start = order_.label(v);
  std::vector<OrderLabel> placed(marked.size());
  std::vector<std::uint8_t> moved(marked.size(), 0);
  std::vector<std::tuple<std::uint32_t, std::uint32_t, bool>> anchors;
  for (std::size_t i = 0; i < marked.size(); ++i) {
    const NodeId x = marked[i];
    std::optional<OrderLabel> floor;
    for (NodeId w : dag_.in(x)) {
      ++work;
      const OrderLabel c = in_cover_[w] ? placed[position_[w]] : order_.label(w);
      floor = later(floor, c);
    }
    const std::optional<OrderLabel> ceil = label_of(ceiling[i]);
    const OrderLabel current = order_.label(x);

    if ((!floor || list.precedes(*floor, current)) &&
        (!ceil || list.precedes(current, *ceil))) {
      placed[i] = current;
      continue;
    }
    const std::optional<OrderLabel> anchor = later(floor, pivot);
    if (anchor && !list.precedes(*anchor, window_start)) {
      placed[i] = order_.place_after(*anchor);
      anchors.emplace_back(anchor->index, anchor->generation, false);
    } else {
      const OrderLabel bound = *earlier(ceil, lower_bound);
      placed[i] = order_.place_before(bound);
      anchors.emplace_back(bound.index, bound.generation, true);
    }
    moved[i] = 1;
    ++work;
  }

  last_relabelled_ = 0;
  for (std::size_t i = 0; i < marked.size(); ++i) {
    in_cover_[marked[i]] = 0;
    if (moved[i]) {
      order_.rebind(marked[i], placed[i]);
      ++last_relabelled_;
    }
  }
  std::sort(anchors.begin(), anchors.end());
  last_anchors_ = static_cast<std::size_t>(
      std::unique(anchors.begin(), anchors.end()) - anchors.begin());

  outcome.stats.work_units = work + last_relabelled_;
  cover_.forward = std::move(found.forward);
  cover_.backward = std::move(found.backward);
  return outcome;
}

}  // namespace oto
