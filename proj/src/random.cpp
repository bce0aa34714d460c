#include "oto/random.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace oto {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  using u128 = unsigned __int128;
  u128 product = u128{next()} * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = u128{next()} * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double SplitMix64::unit() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

template <class T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

}  // namespace

ReisSequence gen_reis(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw InvalidConfig("REIS needs at least two nodes");
  SplitMix64 rng(seed);
  ReisSequence reis{n, seed, {}, std::vector<NodeId>(n)};
  std::iota(reis.hidden_order.begin(), reis.hidden_order.end(), NodeId{0});
  shuffle(reis.hidden_order, rng);

  reis.edges.reserve(complete_edge_count(n));
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) reis.edges.push_back({a, b});
  shuffle(reis.edges, rng);
  for (Edge& e : reis.edges) e = {reis.hidden_order[e.u], reis.hidden_order[e.v]};
  return reis;
}

Dag sample_dag_gnm(std::size_t n, std::uint64_t edges, std::uint64_t seed) {
  if (n < 2) throw InvalidConfig("DAG(n,M) needs at least two nodes");
  if (edges > complete_edge_count(n))
    throw InvalidConfig("M = " + std::to_string(edges) + " exceeds N = " +
                        std::to_string(complete_edge_count(n)));
  const ReisSequence reis = gen_reis(n, seed);
  Dag dag(n);
  for (std::uint64_t i = 0; i < edges; ++i) dag.add_edge(reis.edges[i].u, reis.edges[i].v);
  return dag;
}

Dag sample_dag_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidConfig("p must lie in (0,1)");
  Dag dag(n);
  SplitMix64 rng(seed);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.unit() < p) dag.add_edge(u, v);
  return dag;
}

void write_reis(std::ostream& out, const ReisSequence& reis) {
  out << "# reis n=" << reis.n << " seed=" << reis.seed << '\n';
  for (const Edge& e : reis.edges) out << e.u << ' ' << e.v << '\n';
}

ReisSequence read_reis(std::istream& in) {
  ReisSequence reis;
  std::string line;
  std::string hash, kind, n_field, seed_field;
  std::getline(in, line);
  std::istringstream header(line);
  header >> hash >> kind >> n_field >> seed_field;
  if (hash != "#" || kind != "reis" || !n_field.starts_with("n=") ||
      !seed_field.starts_with("seed="))
    throw InvalidConfig("missing '# reis n=<n> seed=<seed>' header");
  try {
    reis.n = std::stoull(n_field.substr(2));
    reis.seed = std::stoull(seed_field.substr(5));
  } catch (const std::exception&) {
    throw InvalidConfig("malformed reis header: " + line);
  }
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    Edge e;
    if (!(fields >> e.u >> e.v)) throw InvalidConfig("malformed edge line: " + line);
    reis.edges.push_back(e);
  }
  return reis;
}

}  // namespace oto
