#ifndef OTO_RANDOM_HPP
#define OTO_RANDOM_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "oto/dag.hpp"
#include "oto/types.hpp"

namespace oto {

/// SplitMix64: the state advances by a fixed odd constant and each output is
/// a bijective mix of the state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform integer in [0, bound) without modulo bias (Lemire's
  /// multiply-and-reject). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() noexcept;

 private:
  std::uint64_t state_;
};

/// The SplitMix64 output function on its own; used to derive per-run seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Random edge insertion sequence: a uniform permutation of the edges of a
/// complete DAG whose own topological order is a uniform permutation of the
/// nodes. The online orders start from the identity, so an edge (u, v) with
/// u > v by index is invalidating when it arrives first.
struct ReisSequence {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<Edge> edges;
  /// Nodes of the complete DAG in its topological order. Empty after
  /// read_reis.
  std::vector<NodeId> hidden_order;
};

/// n >= 2. Two backward Fisher-Yates shuffles from one generator: first the
/// hidden node order, then the lexicographic list of position pairs.
ReisSequence gen_reis(std::size_t n, std::uint64_t seed);

/// DAG(n, M): the first M edges of gen_reis(n, seed). Acyclic, with the
/// REIS hidden order as a topological order.
Dag sample_dag_gnm(std::size_t n, std::uint64_t edges, std::uint64_t seed);

/// DAG(n, p): every pair u < v independently with probability p in (0,1),
/// directed from the lower to the higher index.
Dag sample_dag_gnp(std::size_t n, double p, std::uint64_t seed);

/// Text dump: header "# reis n=<n> seed=<seed>", then one "u v" per line.
void write_reis(std::ostream& out, const ReisSequence& reis);
ReisSequence read_reis(std::istream& in);

}  // namespace oto

#endif  // OTO_RANDOM_HPP
