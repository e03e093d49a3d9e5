#include "aeap/json_io.hpp"

namespace aeap {

Json to_json(const CascadeTrace& trace) {
  Json doc;
  doc["horizon"] = trace.horizon;
  doc["initial"] = to_strings(trace.initial);
  doc["failed"] = to_strings(trace.failed_set());
  doc["induced"] = to_strings(induced_failure_set(trace));
  auto& times = doc["fail_times"] = Json::object();
  for (std::size_t i = 0; i < trace.entities.size(); ++i) {
    const int t = trace.fail_times[i];
    times[to_string(trace.entities[i])] = t == kNever ? Json(nullptr) : Json(t);
  }
  return doc;
}

Json to_json(const VulnerabilityResult& result) {
  Json doc;
  doc["k"] = result.k;
  doc["attacked"] = to_strings(result.attacked);
  doc["total_failed"] = result.total_failed;
  doc["failed_set"] = to_strings(result.failed_set);
  return doc;
}

Json to_json(const AllocationSolution& solution, const Network& net) {
  Json doc;
  doc["method"] = to_string(solution.method);
  doc["s"] = solution.s;
  auto& mods = doc["modifications"] = Json::array();
  for (const auto& m : solution.modifications) {
    mods.push_back({{"idr_target", to_string(net.idr(m.idr_label).target)},
                    {"auxiliary", m.auxiliary.is_always_alive() ? std::string("ALWAYS-ALIVE") : to_string(m.auxiliary)}});
  }
  doc["protected"] = to_strings(solution.protected_total);
  doc["protected_count"] = solution.protected_total.size();
  doc["induced_before"] = solution.induced_before.size();
  doc["induced_after"] = solution.induced_after.size();
  return doc;
}

}  // namespace aeap
