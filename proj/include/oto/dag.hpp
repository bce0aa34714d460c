#ifndef OTO_DAG_HPP
#define OTO_DAG_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "oto/types.hpp"

namespace oto {

/// Directed graph over nodes [0, n) with adjacency kept in both directions.
/// Self-loops and parallel edges are rejected. Acyclicity is not enforced
/// here; that is the job of the ordering algorithms.
class Dag {
 public:
  explicit Dag(std::size_t n);

  std::size_t node_count() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept { return m_; }

  std::span<const NodeId> out(NodeId x) const { return out_[x]; }
  std::span<const NodeId> in(NodeId x) const { return in_[x]; }

  std::size_t out_degree(NodeId x) const { return out_[x].size(); }
  std::size_t in_degree(NodeId x) const { return in_[x].size(); }
  std::size_t degree(NodeId x) const { return out_[x].size() + in_[x].size(); }

  bool contains(NodeId x) const noexcept { return x < out_.size(); }
  bool has_edge(NodeId u, NodeId v) const;

  /// Throws RejectedInput on self-loop, duplicate or out-of-range endpoint.
  void add_edge(NodeId u, NodeId v);

  /// Same checks as add_edge but without mutating.
  void check_insertable(NodeId u, NodeId v) const;

  /// Removes an existing edge. Used to roll back tentative insertions.
  void remove_edge(NodeId u, NodeId v);

  std::vector<Edge> edges() const;

  friend bool operator==(const Dag&, const Dag&) = default;

 private:
  bool use_matrix() const noexcept { return !matrix_.empty(); }
  void set_bit(NodeId u, NodeId v, bool on);

  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::size_t m_ = 0;
  // n*n membership bits for O(1) duplicate checks; left empty above
  // kMatrixLimit nodes, where has_edge falls back to scanning.
  std::vector<std::uint64_t> matrix_;

  static constexpr std::size_t kMatrixLimit = 1u << 15;
};

/// Array-backed topological order: a bijection between nodes and ranks
/// 1..n, with the inverse kept in sync.
class RankOrder {
 public:
  /// Identity order: node i has rank i+1.
  explicit RankOrder(std::size_t n);

  std::size_t size() const noexcept { return rank_of_.size(); }
  Rank rank(NodeId x) const { return rank_of_[x]; }
  NodeId node_at(Rank r) const { return node_at_[r - 1]; }
  bool precedes(NodeId a, NodeId b) const { return rank_of_[a] < rank_of_[b]; }

  void assign(NodeId x, Rank r) {
    rank_of_[x] = r;
    node_at_[r - 1] = x;
  }

  /// Replaces the whole order. `topo` lists nodes in increasing rank.
  void assign_sequence(std::span<const NodeId> topo);

  std::span<const Rank> ranks() const noexcept { return rank_of_; }

  friend bool operator==(const RankOrder&, const RankOrder&) = default;

 private:
  std::vector<Rank> rank_of_;
  std::vector<NodeId> node_at_;
};

/// R_F, R_B and the size measures of the affected region of a pending edge
/// (u, v). Both sets are reported in discovery order.
struct AffectedRegion {
  std::vector<NodeId> forward;   // y <= u reachable from v
  std::vector<NodeId> backward;  // x >= v reaching u
  std::size_t delta_nodes = 0;   // |R_F| + |R_B|
  std::size_t delta_edges = 0;   // sum of degrees over the region, new edge included
  std::size_t edges_traversed = 0;

  bool invalidating() const noexcept { return delta_nodes != 0; }
  /// R_F and R_B intersect exactly when (u, v) closes a cycle.
  bool overlaps() const;
};

/// Computes the affected region by two bounded depth-first searches.
/// `precedes(a, b)` must answer "a is before b" in the current order.
/// Empty region when the edge is not invalidating.
template <class Precedes>
AffectedRegion affected_region_by(const Dag& dag, Precedes&& precedes, NodeId u,
                                  NodeId v);

AffectedRegion affected_region(const Dag& dag, std::span<const Rank> rank_of,
                               NodeId u, NodeId v);

/// Number of combinations n(n-1)/2 of a complete DAG on n nodes.
constexpr std::uint64_t complete_edge_count(std::uint64_t n) {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

}  // namespace oto

#include "oto/detail/affected_region.ipp"

#endif  // OTO_DAG_HPP
