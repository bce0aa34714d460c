#ifndef OTO_ONLINE_ORDER_HPP
#define OTO_ONLINE_ORDER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "oto/dag.hpp"
#include "oto/types.hpp"

namespace oto {

enum class Algorithm { naive, mnr, pk, ahrsz, kb };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::naive, Algorithm::mnr,
                                               Algorithm::pk, Algorithm::ahrsz,
                                               Algorithm::kb};

/// Stable identifier used on the command line and in CSV output.
std::string_view to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Per-insertion measurements. All counts are zero for an accepted
/// non-invalidating edge.
struct InsertionStats {
  bool invalidating = false;
  std::uint64_t delta_nodes = 0;    // |delta|
  std::uint64_t delta_edges = 0;    // ||delta||
  std::uint64_t cover_nodes = 0;    // |K|
  std::uint64_t cover_edges = 0;    // ||K||
  std::uint64_t cover_measure = 0;  // |K| + ||K||
  /// Edges traversed + order-structure operations + sort comparisons.
  std::uint64_t work_units = 0;
  std::uint64_t elapsed_ns = 0;
};

enum class InsertStatus { accepted, cycle_detected };

struct InsertOutcome {
  InsertStatus status = InsertStatus::accepted;
  InsertionStats stats;
  Edge witness;  // the offending edge when a cycle was detected

  bool accepted() const noexcept { return status == InsertStatus::accepted; }
};

/// The node set an algorithm marked while handling the last invalidating
/// edge: K for AHRSZ/KB, the whole affected region for PK and MNR's moved
/// set for MNR. Both lists are in increasing order of the pre-insertion
/// topological order.
struct CoverReport {
  std::vector<NodeId> forward;
  std::vector<NodeId> backward;

  std::size_t size() const noexcept { return forward.size() + backward.size(); }
  std::vector<NodeId> nodes() const;
};

/// Deliberate bugs used to check that the verification harness notices.
enum class Fault { none, skip_relabel };

// Online topological order under edge insertions. Each implementation owns
// its graph and its order; insert() either accepts the edge and restores a
// valid order, or reports the cycle and leaves both untouched.
class OnlineTopoOrder {
 public:
  explicit OnlineTopoOrder(std::size_t n);
  virtual ~OnlineTopoOrder() = default;

  OnlineTopoOrder(const OnlineTopoOrder&) = delete;
  OnlineTopoOrder& operator=(const OnlineTopoOrder&) = delete;

  /// Throws RejectedInput for self-loops, duplicates and unknown nodes.
  InsertOutcome insert(NodeId u, NodeId v);

  virtual Algorithm algorithm() const noexcept = 0;
  /// a before b in the current order.
  virtual bool precedes(NodeId a, NodeId b) const = 0;
  /// priority_of as ranks 1..n.
  virtual std::vector<Rank> ranks() const = 0;
  /// Nodes in increasing order.
  std::vector<NodeId> sequence() const;

  const Dag& dag() const noexcept { return dag_; }
  std::size_t node_count() const noexcept { return dag_.node_count(); }
  const CoverReport& last_cover() const noexcept { return cover_; }

  void inject_fault(Fault fault) noexcept { fault_ = fault; }

 protected:
  /// Called with a validated edge. Must add it to dag_ on acceptance.
  virtual InsertOutcome insert_checked(NodeId u, NodeId v) = 0;

  Dag dag_;
  CoverReport cover_;

 private:
  Fault fault_ = Fault::none;
};

std::unique_ptr<OnlineTopoOrder> make_online_order(Algorithm algo, std::size_t n);

struct SequenceOptions {
  /// Fill delta_nodes / delta_edges from the reference affected-region
  /// computation for algorithms that do not discover delta themselves.
  bool measure_delta = true;
  /// Record wall-clock time per insertion.
  bool timing = true;
};

/// Inserts `edges` in order. Edges closing a cycle are reported and
/// skipped; processing always continues.
std::vector<InsertOutcome> insert_sequence(OnlineTopoOrder& order,
                                           std::span<const Edge> edges,
                                           const SequenceOptions& options = {});

}  // namespace oto

#endif  // OTO_ONLINE_ORDER_HPP
