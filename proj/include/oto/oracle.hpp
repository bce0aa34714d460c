#ifndef OTO_ORACLE_HPP
#define OTO_ORACLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "oto/closure.hpp"
#include "oto/dag.hpp"
#include "oto/online_order.hpp"

namespace oto {

/// Every edge goes from a lower to a higher rank.
bool check_valid_order(const Dag& dag, std::span<const Rank> rank_of);

/// K covers the pending edge (u, v) if every pair x ~> y of the graph with
/// the edge added, with y ranked before x, has an endpoint in K.
bool is_cover(const Dag& dag_before, std::span<const Rank> order_before, Edge edge,
              std::span<const NodeId> cover);

/// Same test against a precomputed closure of the graph *after* insertion.
bool is_cover(const Reachability& closure_after, std::span<const Rank> order_before,
              std::span<const NodeId> cover);

struct MinimalCoverResult {
  std::vector<NodeId> cover;  // ascending
  std::uint64_t measure = 0;  // |K| + ||K||, degrees taken with the edge added
};

inline constexpr std::size_t kDefaultCoverSearchLimit = 16;

/// Exhaustive search over subsets of the affected region. Ties prefer the
/// smaller set, then the lexicographically smaller one. Throws
/// SizeLimitExceeded when |delta| > limit.
MinimalCoverResult min_cover_bruteforce(const Dag& dag_before,
                                        std::span<const Rank> order_before, Edge edge,
                                        std::size_t limit = kDefaultCoverSearchLimit);

/// |K| + ||K|| for an arbitrary node set, with degrees taken after adding
/// `edge` to `dag_before`.
std::uint64_t cover_measure(const Dag& dag_before, Edge edge,
                            std::span<const NodeId> cover);

std::size_t max_degree(const Dag& dag);

/// Expected number of comparable pairs after k random insertions on n
/// nodes, without the (1 + o(1)) factor. Natural logarithm throughout.
/// Valid for n ln n < k <= N - 2 ln n; throws DomainError otherwise.
double predicted_phi(std::size_t n, double k);

/// log2(x), or 0 when x <= 1.
double cost_log2(double x);

/// sum(||delta|| + |delta| log2 |delta|)
double cost_pk(std::span<const InsertionStats> stats);
/// sum(|>K<| log2 |>K<|)
double cost_ahrsz(std::span<const InsertionStats> stats);

std::uint64_t count_invalidating(std::span<const InsertOutcome> outcomes);

/// phi[i] = comparable pairs after the first i edges; phi[0] = 0.
struct PhiTrace {
  std::vector<std::uint64_t> phi;

  std::uint64_t delta(std::size_t i) const { return phi[i] - phi[i - 1]; }
};

/// Throws PreconditionViolation if the sequence closes a cycle.
PhiTrace phi_trace(std::size_t n, std::span<const Edge> edges);

}  // namespace oto

#endif  // OTO_ORACLE_HPP
