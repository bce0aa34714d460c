#include "oto/dag.hpp"

#include <algorithm>
#include <string>

namespace oto {

Dag::Dag(std::size_t n) : out_(n), in_(n) {
  if (n == 0) throw InvalidConfig("graph needs at least one node");
  if (n <= kMatrixLimit) matrix_.assign((n * n + 63) / 64, 0);
}

void Dag::set_bit(NodeId u, NodeId v, bool on) {
  const std::size_t bit = std::size_t{u} * node_count() + v;
  const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
  if (on)
    matrix_[bit / 64] |= mask;
  else
    matrix_[bit / 64] &= ~mask;
}

bool Dag::has_edge(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v)) return false;
  if (use_matrix()) {
    const std::size_t bit = std::size_t{u} * node_count() + v;
    return (matrix_[bit / 64] >> (bit % 64)) & 1u;
  }
  const auto& a = out_[u].size() <= in_[v].size() ? out_[u] : in_[v];
  const NodeId key = out_[u].size() <= in_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), key) != a.end();
}

void Dag::check_insertable(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v))
    throw RejectedInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has an endpoint outside [0," +
                        std::to_string(node_count()) + ")");
  if (u == v) throw RejectedInput("self-loop on node " + std::to_string(u));
  if (has_edge(u, v))
    throw RejectedInput("duplicate edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
}

void Dag::add_edge(NodeId u, NodeId v) {
  check_insertable(u, v);
  out_[u].push_back(v);
  in_[v].push_back(u);
  if (use_matrix()) set_bit(u, v, true);
  ++m_;
}

void Dag::remove_edge(NodeId u, NodeId v) {
  if (!has_edge(u, v))
    throw RejectedInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") is not present");
  auto erase_one = [](std::vector<NodeId>& list, NodeId x) {
    // Tentative edges are usually the most recent, so search from the back.
    auto it = std::find(list.rbegin(), list.rend(), x);
    list.erase(std::next(it).base());
  };
  erase_one(out_[u], v);
  erase_one(in_[v], u);
  if (use_matrix()) set_bit(u, v, false);
  --m_;
}

std::vector<Edge> Dag::edges() const {
  std::vector<Edge> result;
  result.reserve(m_);
  for (NodeId u = 0; u < out_.size(); ++u)
    for (NodeId v : out_[u]) result.push_back({u, v});
  return result;
}

RankOrder::RankOrder(std::size_t n) : rank_of_(n), node_at_(n) {
  if (n == 0) throw InvalidConfig("order needs at least one node");
  for (std::size_t i = 0; i < n; ++i) {
    rank_of_[i] = static_cast<Rank>(i + 1);
    node_at_[i] = static_cast<NodeId>(i);
  }
}

void RankOrder::assign_sequence(std::span<const NodeId> topo) {
  for (std::size_t i = 0; i < topo.size(); ++i)
    assign(topo[i], static_cast<Rank>(i + 1));
}

bool AffectedRegion::overlaps() const {
  if (forward.empty() || backward.empty()) return false;
  std::vector<NodeId> f(forward), b(backward);
  std::sort(f.begin(), f.end());
  std::sort(b.begin(), b.end());
  std::vector<NodeId> common;
  std::set_intersection(f.begin(), f.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return !common.empty();
}

AffectedRegion affected_region(const Dag& dag, std::span<const Rank> rank_of,
                               NodeId u, NodeId v) {
  return affected_region_by(
      dag, [rank_of](NodeId a, NodeId b) { return rank_of[a] < rank_of[b]; }, u, v);
}

}  // namespace oto
