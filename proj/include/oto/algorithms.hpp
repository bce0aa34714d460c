#ifndef OTO_ALGORITHMS_HPP
#define OTO_ALGORITHMS_HPP

#include <optional>
#include <vector>

#include "oto/dag.hpp"
#include "oto/online_order.hpp"
#include "oto/ordered_list.hpp"

namespace oto {

/// Recomputes an offline topological order after every insertion.
class NaiveOrder final : public OnlineTopoOrder {
 public:
  explicit NaiveOrder(std::size_t n);

  Algorithm algorithm() const noexcept override { return Algorithm::naive; }
  bool precedes(NodeId a, NodeId b) const override { return order_.precedes(a, b); }
  std::vector<Rank> ranks() const override;

 protected:
  InsertOutcome insert_checked(NodeId u, NodeId v) override;

 private:
  RankOrder order_;
};

/// Shift-based reordering: the nodes reachable from v inside the
/// invalidated window move, in their old relative order, to just after u.
class MnrOrder final : public OnlineTopoOrder {
 public:
  explicit MnrOrder(std::size_t n);

  Algorithm algorithm() const noexcept override { return Algorithm::mnr; }
  bool precedes(NodeId a, NodeId b) const override { return order_.precedes(a, b); }
  std::vector<Rank> ranks() const override;

 protected:
  InsertOutcome insert_checked(NodeId u, NodeId v) override;

 private:
  RankOrder order_;
  std::vector<std::uint8_t> visited_;
};

// Pearce-Kelly. Discovers R_F and R_B with bounded DFS, then reuses the
// ranks the region already holds: R_B nodes take the smallest slots, R_F
// nodes the rest, each side keeping its relative order.
class PkOrder final : public OnlineTopoOrder {
 public:
  explicit PkOrder(std::size_t n);

  Algorithm algorithm() const noexcept override { return Algorithm::pk; }
  bool precedes(NodeId a, NodeId b) const override { return order_.precedes(a, b); }
  std::vector<Rank> ranks() const override;

 protected:
  InsertOutcome insert_checked(NodeId u, NodeId v) override;

 private:
  bool forward_dfs(NodeId v, Rank upper, std::uint64_t& work);
  void backward_dfs(NodeId u, Rank lower, std::uint64_t& work);

  RankOrder order_;
  std::vector<std::uint8_t> visited_;
  std::vector<NodeId> stack_;
};

/// Nodes kept in an order-maintenance list. Shared by AHRSZ and KB.
class LabelOrder {
 public:
  explicit LabelOrder(std::size_t n);

  OrderLabel label(NodeId x) const { return label_of_[x]; }
  bool precedes(NodeId a, NodeId b) const {
    return list_.precedes(label_of_[a], label_of_[b]);
  }
  std::uint64_t tag(NodeId x) const { return list_.tag(label_of_[x]); }

  /// Moves x to a fresh cell right after `anchor` (which may be x's own
  /// current cell). Returns the new label without retiring the old one.
  OrderLabel place_after(OrderLabel anchor) { return list_.insert_after(anchor); }
  OrderLabel place_before(OrderLabel anchor) { return list_.insert_before(anchor); }
  /// Retires x's current cell and installs `fresh`.
  void rebind(NodeId x, OrderLabel fresh);

  std::vector<Rank> ranks() const;
  const OrderedList& list() const noexcept { return list_; }

  friend bool operator==(const LabelOrder& a, const LabelOrder& b) {
    return a.ranks() == b.ranks();
  }

 private:
  OrderedList list_;
  std::vector<OrderLabel> label_of_;
  std::vector<NodeId> node_of_cell_;
};

/// How the two discovery frontiers weigh the nodes they visit.
enum class FrontierBalance {
  total_degree,  // AHRSZ: in + out degree on both sides
  directional,   // KB: out-degree forward, in-degree backward
};

/// Result of the two-frontier discovery phase.
struct FrontierSearch {
  bool cycle = false;
  std::vector<NodeId> forward;   // popped from the forward queue, increasing
  std::vector<NodeId> backward;  // popped from the backward queue, increasing
  std::optional<NodeId> forward_min;   // smallest queued, unvisited forward node
  std::optional<NodeId> backward_max;  // largest queued, unvisited backward node
  std::uint64_t work = 0;
};

// Two prioritized frontiers, forward from v (min-queue over out-neighbours)
// and backward from u (max-queue over in-neighbours), confined to the
// window between v and u. Each side keeps a running weight total; the
// side that stays lighter after taking its next candidate moves. Stops once the forward minimum is past the backward maximum or a
// queue runs dry. A node seen from both sides means u is reachable from v.
// `marks` is per-node scratch space; it must be all zero on entry and is
// left all zero on return.
FrontierSearch search_frontiers(const Dag& dag, const LabelOrder& order, NodeId u,
                                NodeId v, FrontierBalance balance,
                                std::vector<std::uint8_t>& marks);

class AhrszOrder final : public OnlineTopoOrder {
 public:
  explicit AhrszOrder(std::size_t n);

  Algorithm algorithm() const noexcept override { return Algorithm::ahrsz; }
  bool precedes(NodeId a, NodeId b) const override { return order_.precedes(a, b); }
  std::vector<Rank> ranks() const override { return order_.ranks(); }

  /// Number of K nodes that got a new cell in the last relabelling, and
  /// the number of distinct anchors those cells were inserted after.
  std::size_t last_relabelled() const noexcept { return last_relabelled_; }
  std::size_t last_anchor_count() const noexcept { return last_anchors_; }

 protected:
  InsertOutcome insert_checked(NodeId u, NodeId v) override;

 private:
  LabelOrder order_;
  std::vector<std::uint8_t> marks_;
  std::vector<std::uint8_t> in_cover_;
  std::vector<std::uint32_t> position_;
  std::size_t last_relabelled_ = 0;
  std::size_t last_anchors_ = 0;
};

class KbOrder final : public OnlineTopoOrder {
 public:
  explicit KbOrder(std::size_t n);

  Algorithm algorithm() const noexcept override { return Algorithm::kb; }
  bool precedes(NodeId a, NodeId b) const override { return order_.precedes(a, b); }
  std::vector<Rank> ranks() const override { return order_.ranks(); }

 protected:
  InsertOutcome insert_checked(NodeId u, NodeId v) override;

 private:
  LabelOrder order_;
  std::vector<std::uint8_t> marks_;
};

}  // namespace oto

#endif  // OTO_ALGORITHMS_HPP
