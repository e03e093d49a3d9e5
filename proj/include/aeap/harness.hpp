#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aeap/network.hpp"
#include "aeap/vulnerability.hpp"

namespace aeap {

/// Parameters of the synthetic network generator. Defaults give instances
/// where an attack on 8 entities brings down roughly 23 to 28 of them.
struct GeneratorConfig {
  int n_a = 14;
  int n_b = 14;
  int max_minterms = 2;
  int max_minterm_size = 2;
  double idr_probability = 0.7;
  std::uint64_t seed = 1;

  friend bool operator==(const GeneratorConfig&, const GeneratorConfig&) = default;
};

/// Random inter-network IDRs: each entity gets a rule with probability
/// idr_probability, holding 1..max_minterms minterms of 1..max_minterm_size
/// distinct literals from the opposite network. Deterministic per config.
/// Throws ValidationError on out-of-range parameters.
Network gen_network(const GeneratorConfig& config);

/// A sweep file is flat `key = value` text ('#' comments). Keys: n_a, n_b,
/// max_minterms, max_minterm_size, idr_probability, seed, instances, k,
/// s_list (comma separated), cap, timings (0/1).
struct SweepConfig {
  GeneratorConfig generator;
  int instances = 4;
  int k = 8;
  std::vector<int> budgets{1, 3, 5, 7};
  std::uint64_t cap = kDefaultEvaluationCap;
  bool record_timings = true;
};

SweepConfig parse_sweep_config(std::string_view text);
/// Same format; only generator keys are accepted.
GeneratorConfig parse_generator_config(std::string_view text);

struct ExperimentInstance {
  std::string id;
  Network network;
  int k = 8;
  std::vector<int> budgets{1, 3, 5, 7};
};

/// One instance per seed: seed, seed+1, ..., ids "1".."instances".
std::vector<ExperimentInstance> instances_from_sweep(const SweepConfig& sweep);

struct ExperimentRecord {
  std::string instance;
  int na = 0;
  int nb = 0;
  int k = 0;
  int s = 0;
  int induced_before = 0;
  int protected_heuristic = 0;
  std::optional<int> protected_exact;  // empty when the exact search hit its cap
  double gap_percent = 0.0;
  double ms_heuristic = 0.0;
  double ms_exact = 0.0;
  std::string attack_method;  // "exact" or "greedy" (fallback past the cap)
};

struct ExperimentOptions {
  std::uint64_t cap = kDefaultEvaluationCap;
  bool record_timings = true;
};

/// For each instance: picks the k most vulnerable entities (exhaustive, or
/// greedy past the cap), then runs solve_heuristic and solve_exact for every
/// budget. Throws std::logic_error if a record has the heuristic beating the
/// optimum.
std::vector<ExperimentRecord> run_experiment(const std::vector<ExperimentInstance>& instances,
                                             const ExperimentOptions& options = {});

/// Header: instance,na,nb,k,s,induced_before,prot_heur,prot_exact,gap_pct,ms_heur,ms_exact
std::string records_to_csv(const std::vector<ExperimentRecord>& records);

/// Grouped bar chart (heuristic vs exact per budget) for the records of one instance.
std::string render_svg(const std::vector<ExperimentRecord>& records);

}  // namespace aeap
