#include "oto/closure.hpp"

#include <algorithm>
#include <bit>

namespace oto {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

std::uint64_t popcount(const std::uint64_t* row, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(row[i]);
  return total;
}

std::vector<NodeId> checked_topological_sort(const Dag& dag) {
  std::vector<NodeId> topo = topological_sort(dag);
  if (topo.size() != dag.node_count())
    throw PreconditionViolation("comparable pairs requested for a cyclic graph");
  return topo;
}

// Fills the descendant row of x from its (already complete) successors.
void close_row(const Dag& dag, NodeId x, std::vector<std::uint64_t>& rows,
               std::size_t words) {
  std::uint64_t* dst = rows.data() + x * words;
  for (NodeId w : dag.out(x)) {
    dst[w / 64] |= std::uint64_t{1} << (w % 64);
    or_into(dst, rows.data() + w * words, words);
  }
}

}  // namespace

std::vector<NodeId> topological_sort(const Dag& dag) {
  const std::size_t n = dag.node_count();
  std::vector<std::size_t> pending(n);
  std::vector<NodeId> topo;
  topo.reserve(n);
  for (NodeId x = 0; x < n; ++x) {
    pending[x] = dag.in_degree(x);
    if (pending[x] == 0) topo.push_back(x);
  }
  for (std::size_t head = 0; head < topo.size(); ++head)
    for (NodeId w : dag.out(topo[head]))
      if (--pending[w] == 0) topo.push_back(w);
  if (topo.size() != n) topo.clear();
  return topo;
}

Reachability::Reachability(std::size_t n)
    : n_(n), words_(word_count(n)), rows_(n * words_, 0) {}

Reachability Reachability::of(const Dag& dag) {
  const std::vector<NodeId> topo = checked_topological_sort(dag);
  Reachability closure(dag.node_count());
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    close_row(dag, *it, closure.rows_, closure.words_);
    closure.pairs_ += popcount(closure.row(*it), closure.words_);
  }
  return closure;
}

std::uint64_t Reachability::add_edge(NodeId u, NodeId v) {
  if (u == v || reaches(v, u))
    throw PreconditionViolation("edge closes a cycle in the closure");
  if (reaches(u, v)) return 0;

  std::vector<std::uint64_t> gained(row(v), row(v) + words_);
  gained[v / 64] |= std::uint64_t{1} << (v % 64);
  std::uint64_t added = 0;
  for (NodeId x = 0; x < n_; ++x) {
    if (x != u && !reaches(x, u)) continue;
    std::uint64_t* dst = row(x);
    for (std::size_t i = 0; i < words_; ++i) {
      added += std::popcount(gained[i] & ~dst[i]);
      dst[i] |= gained[i];
    }
  }
  pairs_ += added;
  return added;
}

std::uint64_t comparable_pairs_serial(const Dag& dag) {
  return Reachability::of(dag).comparable_pairs();
}

std::uint64_t comparable_pairs(const Dag& dag) {
  const std::vector<NodeId> topo = checked_topological_sort(dag);
  const std::size_t n = dag.node_count();
  const std::size_t words = word_count(n);

  std::vector<std::uint32_t> height(n, 0);
  std::uint32_t levels = 0;
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    for (NodeId w : dag.out(*it)) height[*it] = std::max(height[*it], height[w] + 1);
    levels = std::max(levels, height[*it] + 1);
  }
  // Bucket nodes by height (counting sort keeps node order stable).
  std::vector<std::size_t> start(levels + 1, 0);
  for (NodeId x = 0; x < n; ++x) ++start[height[x] + 1];
  for (std::uint32_t h = 0; h < levels; ++h) start[h + 1] += start[h];
  std::vector<NodeId> by_level(n);
  std::vector<std::size_t> fill(start.begin(), start.end() - 1);
  for (NodeId x = 0; x < n; ++x) by_level[fill[height[x]]++] = x;

  std::vector<std::uint64_t> rows(n * words, 0);
  std::uint64_t total = 0;
  for (std::uint32_t h = 0; h < levels; ++h) {
    const auto first = static_cast<std::ptrdiff_t>(start[h]);
    const auto last = static_cast<std::ptrdiff_t>(start[h + 1]);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
    for (std::ptrdiff_t i = first; i < last; ++i) {
      const NodeId x = by_level[i];
      close_row(dag, x, rows, words);
      total += popcount(rows.data() + x * words, words);
    }
  }
  return total;
}

}  // namespace oto
