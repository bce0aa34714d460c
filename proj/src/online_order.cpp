#include <algorithm>
#include <chrono>

#include "oto/algorithms.hpp"
#include "oto/online_order.hpp"

namespace oto {

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::naive: return "naive";
    case Algorithm::mnr: return "mnr";
    case Algorithm::pk: return "pk";
    case Algorithm::ahrsz: return "ahrsz";
    case Algorithm::kb: return "kb";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms)
    if (to_string(a) == name) return a;
  return std::nullopt;
}

std::vector<NodeId> CoverReport::nodes() const {
  std::vector<NodeId> all(backward);
  all.insert(all.end(), forward.begin(), forward.end());
  return all;
}

OnlineTopoOrder::OnlineTopoOrder(std::size_t n) : dag_(n) {}

InsertOutcome OnlineTopoOrder::insert(NodeId u, NodeId v) {
  dag_.check_insertable(u, v);
  const auto start = std::chrono::steady_clock::now();

  InsertOutcome outcome;
  if (fault_ == Fault::skip_relabel) {
    cover_ = {};
    outcome.stats.invalidating = precedes(v, u);
    dag_.add_edge(u, v);
  } else {
    outcome = insert_checked(u, v);
  }
  if (!outcome.accepted()) outcome.witness = {u, v};

  outcome.stats.elapsed_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return outcome;
}

std::vector<NodeId> OnlineTopoOrder::sequence() const {
  const std::vector<Rank> r = ranks();
  std::vector<NodeId> seq(r.size());
  for (NodeId x = 0; x < r.size(); ++x) seq[r[x] - 1] = x;
  return seq;
}

std::unique_ptr<OnlineTopoOrder> make_online_order(Algorithm algo, std::size_t n) {
  switch (algo) {
    case Algorithm::naive: return std::make_unique<NaiveOrder>(n);
    case Algorithm::mnr: return std::make_unique<MnrOrder>(n);
    case Algorithm::pk: return std::make_unique<PkOrder>(n);
    case Algorithm::ahrsz: return std::make_unique<AhrszOrder>(n);
    case Algorithm::kb: return std::make_unique<KbOrder>(n);
  }
  throw InvalidConfig("unknown algorithm");
}

std::vector<InsertOutcome> insert_sequence(OnlineTopoOrder& order,
                                           std::span<const Edge> edges,
                                           const SequenceOptions& options) {
  std::vector<InsertOutcome> outcomes;
  outcomes.reserve(edges.size());
  // PK discovers delta itself; everyone else gets the reference computation.
  const bool fill_delta = options.measure_delta && order.algorithm() != Algorithm::pk;

  for (const Edge& e : edges) {
    AffectedRegion region;
    if (fill_delta && order.dag().contains(e.u) && order.dag().contains(e.v))
      region = affected_region_by(
          order.dag(), [&order](NodeId a, NodeId b) { return order.precedes(a, b); },
          e.u, e.v);

    InsertOutcome outcome = order.insert(e.u, e.v);
    if (fill_delta && outcome.accepted()) {
      outcome.stats.delta_nodes = region.delta_nodes;
      outcome.stats.delta_edges = region.delta_edges;
    }
    if (!options.timing) outcome.stats.elapsed_ns = 0;
    outcomes.push_back(outcome);
  }
  return outcomes;
}

}  // namespace oto
