#ifndef OTO_SRC_COVER_STATS_HPP
#define OTO_SRC_COVER_STATS_HPP

#include "oto/algorithms.hpp"

namespace oto::detail {

// |K|, ||K|| and |>K<| for a discovered cover, counting the pending edge
// (u, v) as incident to whichever endpoints are in K.
inline void fill_cover_stats(const Dag& dag, const FrontierSearch& found, NodeId u,
                             NodeId v, InsertionStats& stats) {
  std::uint64_t degree_sum = 0;
  bool has_u = false, has_v = false;
  for (const auto* side : {&found.forward, &found.backward})
    for (NodeId x : *side) {
      degree_sum += dag.degree(x);
      has_u |= x == u;
      has_v |= x == v;
    }
  stats.invalidating = true;
  stats.cover_nodes = found.forward.size() + found.backward.size();
  stats.cover_edges = degree_sum + has_u + has_v;
  stats.cover_measure = stats.cover_nodes + stats.cover_edges;
}

}  // namespace oto::detail

#endif  // OTO_SRC_COVER_STATS_HPP
