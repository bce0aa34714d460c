#ifndef OTO_CLOSURE_HPP
#define OTO_CLOSURE_HPP

#include <cstdint>
#include <vector>

#include "oto/dag.hpp"

namespace oto {

/// Transitive closure of a DAG as one descendant bitset per node. Supports
/// edge insertion, which keeps the comparable-pair count up to date.
class Reachability {
 public:
  explicit Reachability(std::size_t n);

  /// Throws PreconditionViolation if `dag` has a cycle.
  static Reachability of(const Dag& dag);

  std::size_t node_count() const noexcept { return n_; }

  /// x reaches y by a non-empty path.
  bool reaches(NodeId x, NodeId y) const {
    return (rows_[x * words_ + y / 64] >> (y % 64)) & 1u;
  }

  /// Adds the edge to the closure and returns how many pairs became
  /// comparable. Throws PreconditionViolation if the edge closes a cycle.
  std::uint64_t add_edge(NodeId u, NodeId v);

  std::uint64_t comparable_pairs() const noexcept { return pairs_; }

 private:
  std::uint64_t* row(NodeId x) { return rows_.data() + x * words_; }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::uint64_t pairs_ = 0;
};

/// Number of comparable pairs. Sweeps nodes in reverse topological order;
/// kept as the reference for comparable_pairs.
std::uint64_t comparable_pairs_serial(const Dag& dag);

/// Same count, with the nodes of each height level processed in parallel
/// (OpenMP). Height 0 holds the sinks; a node's descendants all sit on
/// lower levels, so one level has no internal dependencies.
std::uint64_t comparable_pairs(const Dag& dag);

/// Kahn order of `dag`, or an empty vector if it has a cycle.
std::vector<NodeId> topological_sort(const Dag& dag);

}  // namespace oto

#endif  // OTO_CLOSURE_HPP
