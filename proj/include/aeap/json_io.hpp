#pragma once

#include <nlohmann/json.hpp>

#include "aeap/cascade.hpp"
#include "aeap/solvers.hpp"
#include "aeap/vulnerability.hpp"

namespace aeap {

using Json = nlohmann::ordered_json;

/// {horizon, initial[], failed[], induced[], fail_times{entity: t|null}}
Json to_json(const CascadeTrace& trace);

/// {k, attacked[], total_failed, failed_set[]}
Json to_json(const VulnerabilityResult& result);

/// {method, s, modifications:[{idr_target, auxiliary}], protected[], protected_count,
///  induced_before, induced_after}. Counts are set sizes; the auxiliary is
/// "ALWAYS-ALIVE" for the synthetic literal.
Json to_json(const AllocationSolution& solution, const Network& net);

}  // namespace aeap
