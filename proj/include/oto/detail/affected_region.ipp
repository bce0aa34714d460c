#ifndef OTO_DETAIL_AFFECTED_REGION_IPP
#define OTO_DETAIL_AFFECTED_REGION_IPP

// Included from oto/dag.hpp.

#include <cstdint>
#include <vector>

namespace oto {

template <class Precedes>
AffectedRegion affected_region_by(const Dag& dag, Precedes&& precedes, NodeId u,
                                  NodeId v) {
  AffectedRegion region;
  if (!precedes(v, u)) return region;  // u < v: nothing to do

  const std::size_t n = dag.node_count();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<NodeId> stack;

  // Forward: everything reachable from v that is not after u.
  stack.push_back(v);
  seen[v] = 1;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    region.forward.push_back(x);
    for (NodeId w : dag.out(x)) {
      ++region.edges_traversed;
      if (!seen[w] && !precedes(u, w)) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }

  // Backward: everything reaching u that is not before v.
  stack.push_back(u);
  seen[u] |= 2;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    region.backward.push_back(x);
    for (NodeId w : dag.in(x)) {
      ++region.edges_traversed;
      if (!(seen[w] & 2) && !precedes(w, v)) {
        seen[w] |= 2;
        stack.push_back(w);
      }
    }
  }

  region.delta_nodes = region.forward.size() + region.backward.size();
  // The pending edge touches u and v, both of which are in the region.
  std::size_t degree_sum = 2;
  for (NodeId x : region.forward) degree_sum += dag.degree(x);
  for (NodeId x : region.backward) degree_sum += dag.degree(x);
  region.delta_edges = degree_sum;
  return region;
}

}  // namespace oto

#endif  // OTO_DETAIL_AFFECTED_REGION_IPP
