#include <fstream>
#include <json.hpp>
#include <ostream>

#include "csv.hpp"
#include "oto/bench.hpp"
#include "oto/oracle.hpp"

namespace oto {

void write_trace(std::ostream& out, Algorithm algo, std::size_t n, std::uint64_t seed,
                 OracleLevel oracle) {
  const ReisSequence reis = gen_reis(n, seed);
  std::unique_ptr<OnlineTopoOrder> order = make_online_order(algo, n);
  const std::vector<InsertOutcome> outcomes =
      insert_sequence(*order, reis.edges, {.measure_delta = true, .timing = false});

  std::optional<PhiTrace> phi;
  if (oracle != OracleLevel::off) phi = phi_trace(n, reis.edges);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const InsertionStats& s = outcomes[i].stats;
    nlohmann::ordered_json record;
    record["i"] = i + 1;
    record["u"] = reis.edges[i].u;
    record["v"] = reis.edges[i].v;
    record["inval"] = s.invalidating;
    record["delta_nodes"] = s.delta_nodes;
    record["delta_edges"] = s.delta_edges;
    record["cover_measure"] = s.cover_measure;
    record["work_units"] = s.work_units;
    if (phi) record["phi"] = phi->phi[i + 1];
    out << record.dump() << '\n';
  }
}

std::filesystem::path trace_path(const std::filesystem::path& dir, std::size_t n,
                                 std::uint64_t seed, Algorithm algo) {
  return dir / ("trace-" + std::to_string(n) + "-" + std::to_string(seed) + "-" +
                std::string(to_string(algo)) + ".ndjson");
}

std::vector<std::filesystem::path> run_trace(const ExperimentConfig& config) {
  config.validate();
  std::filesystem::create_directories(config.out_dir);
  std::vector<std::filesystem::path> written;
  for (std::size_t n : config.ns)
    for (Algorithm algo : config.algorithms) {
      const auto path = trace_path(config.out_dir, n, config.base_seed, algo);
      detail::write_file(path, [&](std::ostream& out) {
        write_trace(out, algo, n, config.base_seed, config.oracle);
      });
      written.push_back(path);
    }
  return written;
}

}  // namespace oto
