#include <algorithm>
#include <numeric>
#include <ostream>

#include "oto/bench.hpp"
#include "oto/closure.hpp"
#include "oto/oracle.hpp"

namespace oto {

namespace {

// Report row names, in report order.
constexpr std::string_view kOrderValidity = "order_validity";
constexpr std::string_view kVerdictEquivalence = "verdict_equivalence";
constexpr std::string_view kRejectedUnchanged = "rejected_state_unchanged";
constexpr std::string_view kDeltaSum = "delta_sum_bound";
constexpr std::string_view kDeltaPhi = "delta_phi_bound";
constexpr std::string_view kDeltaCover = "delta_is_cover";
constexpr std::string_view kContainment = "cover_containment";
constexpr std::string_view kCoverValid = "cover_is_cover";
constexpr std::string_view kApprox = "cover_3_approx";

constexpr std::size_t kApproxDeltaLimit = 12;

class Recorder {
 public:
  Recorder(VerifyReport& report, OracleLevel level) : report_(report) {
    const bool full = level == OracleLevel::full;
    for (auto [name, on] : {std::pair{kOrderValidity, true},
                            {kVerdictEquivalence, true},
                            {kRejectedUnchanged, true},
                            {kDeltaSum, true},
                            {kDeltaPhi, full},
                            {kDeltaCover, full},
                            {kContainment, true},
                            {kCoverValid, full},
                            {kApprox, full}})
      report_.invariants.push_back({std::string(name), on, 0, 0, {}});
  }

  bool enabled(std::string_view name) { return get(name).enabled; }

  void check(std::string_view name, bool ok, Algorithm algo, const VerifyCase& c,
             std::size_t edge_index) {
    InvariantResult& row = get(name);
    ++row.checked;
    if (ok) return;
    if (row.failures++ == 0)
      row.first_counterexample = "algo=" + std::string(to_string(algo)) +
                                 " n=" + std::to_string(c.n) +
                                 " seed=" + std::to_string(c.seed) +
                                 " edge=" + std::to_string(edge_index);
  }

 private:
  InvariantResult& get(std::string_view name) {
    for (InvariantResult& row : report_.invariants)
      if (row.name == name) return row;
    throw std::logic_error("unknown invariant");
  }

  VerifyReport& report_;
};

struct Lane {
  std::unique_ptr<OnlineTopoOrder> order;
  std::uint64_t delta_sum = 0;
};

bool is_subset(std::vector<NodeId> inner, std::vector<NodeId> outer) {
  std::sort(inner.begin(), inner.end());
  std::sort(outer.begin(), outer.end());
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

// Validity after an accepted insertion. Full check on small graphs; on
// larger ones only edges touching the nodes the algorithm moved, plus the
// new edge, can have been broken.
bool order_still_valid(const OnlineTopoOrder& order, Edge edge) {
  const Dag& dag = order.dag();
  if (dag.node_count() <= 256) return check_valid_order(dag, order.ranks());
  if (!order.precedes(edge.u, edge.v)) return false;
  for (NodeId x : order.last_cover().nodes()) {
    for (NodeId w : dag.out(x))
      if (!order.precedes(x, w)) return false;
    for (NodeId w : dag.in(x))
      if (!order.precedes(w, x)) return false;
  }
  return true;
}

void verify_case(const VerifyCase& c, const std::vector<Algorithm>& algorithms,
                 Fault fault, Recorder& rec, VerifyReport& report) {
  std::vector<Lane> lanes;
  for (Algorithm algo : algorithms) {
    lanes.push_back({make_online_order(algo, c.n), 0});
    lanes.back().order->inject_fault(fault);
  }
  auto reference = make_online_order(Algorithm::naive, c.n);
  const bool need_closure = rec.enabled(kDeltaPhi) || rec.enabled(kDeltaCover) ||
                            rec.enabled(kCoverValid);
  Reachability closure(need_closure ? c.n : 0);

  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge e = c.edges[i];
    const bool expect_accept = reference->insert(e.u, e.v).accepted();
    std::uint64_t delta_phi = 0;
    if (need_closure && expect_accept) delta_phi = closure.add_edge(e.u, e.v);
    ++report.insertions;

    for (std::size_t a = 0; a < lanes.size(); ++a) {
      OnlineTopoOrder& order = *lanes[a].order;
      const Algorithm algo = algorithms[a];
      const std::vector<Rank> ranks_before = order.ranks();
      const Dag dag_before = order.dag();
      const AffectedRegion region = affected_region(dag_before, ranks_before, e.u, e.v);

      const InsertOutcome outcome = order.insert(e.u, e.v);
      rec.check(kVerdictEquivalence, outcome.accepted() == expect_accept, algo, c, i);
      if (!outcome.accepted()) {
        rec.check(kRejectedUnchanged,
                  order.ranks() == ranks_before && order.dag() == dag_before, algo, c, i);
        continue;
      }
      rec.check(kOrderValidity, order_still_valid(order, e), algo, c, i);
      lanes[a].delta_sum += region.delta_nodes;
      if (!region.invalidating() || !expect_accept) continue;

      if (rec.enabled(kDeltaPhi)) {
        const std::uint64_t d = region.delta_nodes;
        rec.check(kDeltaPhi, d <= delta_phi + 1 && d <= 2 * delta_phi, algo, c, i);
      }
      std::vector<NodeId> delta(region.forward);
      delta.insert(delta.end(), region.backward.begin(), region.backward.end());
      if (rec.enabled(kDeltaCover))
        rec.check(kDeltaCover, is_cover(closure, ranks_before, delta), algo, c, i);

      if (algo != Algorithm::pk && algo != Algorithm::ahrsz && algo != Algorithm::kb)
        continue;
      const std::vector<NodeId> cover = order.last_cover().nodes();
      const bool contained = algo == Algorithm::pk
                                 ? is_subset(cover, delta) && cover.size() == delta.size()
                                 : is_subset(cover, delta);
      rec.check(kContainment, contained, algo, c, i);
      if (algo == Algorithm::pk) continue;
      if (rec.enabled(kCoverValid))
        rec.check(kCoverValid, is_cover(closure, ranks_before, cover), algo, c, i);
      if (algo == Algorithm::ahrsz && rec.enabled(kApprox) &&
          region.delta_nodes <= kApproxDeltaLimit) {
        const MinimalCoverResult best = min_cover_bruteforce(dag_before, ranks_before, e);
        rec.check(kApprox, outcome.stats.cover_measure <= 3 * best.measure, algo, c, i);
      }
    }
  }

  const std::uint64_t bound = static_cast<std::uint64_t>(c.n) * (c.n - 1);
  for (std::size_t a = 0; a < lanes.size(); ++a)
    rec.check(kDeltaSum, lanes[a].delta_sum <= bound, algorithms[a], c, c.edges.size());
  ++report.sequences;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(invariants.begin(), invariants.end(),
                     [](const InvariantResult& r) { return r.passed(); });
}

const InvariantResult& VerifyReport::at(std::string_view name) const {
  for (const InvariantResult& row : invariants)
    if (row.name == name) return row;
  throw std::out_of_range("no invariant named " + std::string(name));
}

VerifyReport verify_cases(const std::vector<VerifyCase>& cases,
                          const std::vector<Algorithm>& algorithms, OracleLevel level,
                          Fault fault) {
  if (level == OracleLevel::off) throw InvalidConfig("verify needs oracle light or full");
  VerifyReport report;
  Recorder rec(report, level);
  for (const VerifyCase& c : cases) verify_case(c, algorithms, fault, rec, report);
  return report;
}

std::vector<VerifyCase> verify_cases_for(const ExperimentConfig& config) {
  std::vector<VerifyCase> cases;
  if (!config.exhaustive) {
    for (std::size_t n : config.ns)
      for (std::size_t run = 0; run < config.runs; ++run) {
        ReisSequence reis = gen_reis(n, run_seed(config.base_seed, n, run));
        cases.push_back({n, reis.seed, std::move(reis.edges)});
      }
    return cases;
  }

  constexpr std::size_t n = 4;
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  std::uint64_t label = 0;
  do {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) edges.push_back({nodes[a], nodes[b]});
    std::sort(edges.begin(), edges.end());
    do cases.push_back({n, label++, edges});
    while (std::next_permutation(edges.begin(), edges.end()));
  } while (std::next_permutation(nodes.begin(), nodes.end()));

  // Chains through every node order, closed back to their first node.
  do {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a + 1 < n; ++a) edges.push_back({nodes[a], nodes[a + 1]});
    edges.push_back({nodes[n - 1], nodes[0]});
    edges.push_back({nodes[n - 1], nodes[1]});
    cases.push_back({n, label++, edges});
  } while (std::next_permutation(nodes.begin(), nodes.end()));
  return cases;
}

VerifyReport run_verify(const ExperimentConfig& config) {
  config.validate();
  return verify_cases(verify_cases_for(config), config.algorithms, config.oracle,
                      config.fault);
}

void write_verify_report(std::ostream& out, const ExperimentConfig& config,
                         const VerifyReport& report) {
  out << "# verify oracle=" << to_string(config.oracle)
      << " mode=" << (config.exhaustive ? "exhaustive" : "reis")
      << " sequences=" << report.sequences << " insertions=" << report.insertions << '\n';
  out << "# algorithms=";
  for (std::size_t i = 0; i < config.algorithms.size(); ++i)
    out << (i ? "," : "") << to_string(config.algorithms[i]);
  out << '\n';
  for (const InvariantResult& row : report.invariants) {
    out << row.name << ' ';
    if (!row.enabled)
      out << "SKIP";
    else
      out << (row.passed() ? "PASS" : "FAIL") << " checked=" << row.checked
          << " failures=" << row.failures;
    if (!row.passed()) out << " first=" << row.first_counterexample;
    out << '\n';
  }
  out << "result " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace oto
