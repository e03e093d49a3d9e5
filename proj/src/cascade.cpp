#include "aeap/cascade.hpp"

#include <algorithm>

#include "aeap/errors.hpp"

namespace aeap {

std::optional<int> CascadeTrace::fail_time(EntityId e) const {
  const auto it = std::lower_bound(entities.begin(), entities.end(), e);
  if (it == entities.end() || *it != e) throw ValidationError("unknown entity " + to_string(e));
  const int t = fail_times[static_cast<std::size_t>(it - entities.begin())];
  if (t == kNever) return std::nullopt;
  return t;
}

EntitySet CascadeTrace::failed_set() const {
  EntitySet out;
  for (std::size_t i = 0; i < entities.size(); ++i) {
    if (fail_times[i] != kNever) out.insert(entities[i]);
  }
  return out;
}

bool CascadeTrace::failed_at(std::size_t entity_pos, int t) const {
  if (states.empty()) return false;
  const auto step = std::min(static_cast<std::size_t>(std::max(t, 0)), states.size() - 1);
  return states[step][entity_pos];
}

CascadeKernel::CascadeKernel(const Network& net) : entities_(net.entities()) {
  const auto n = entities_.size();
  labels_.resize(n);
  has_rule_.resize(n);
  rule_begin_.resize(n);
  rule_end_.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const Idr& idr = net.idr_for(entities_[pos]);
    labels_[pos] = idr.label;
    has_rule_[pos] = idr.empty() ? 0 : 1;
    rule_begin_[pos] = static_cast<std::uint32_t>(minterm_begin_.size());
    for (const auto& m : idr.minterms) {
      minterm_begin_.push_back(static_cast<std::uint32_t>(literals_.size()));
      for (const auto& e : m.literals()) {
        if (!e.is_always_alive()) literals_.push_back(static_cast<std::uint32_t>(index_of(e)));
      }
      minterm_end_.push_back(static_cast<std::uint32_t>(literals_.size()));
    }
    rule_end_[pos] = static_cast<std::uint32_t>(minterm_begin_.size());
  }
}

std::size_t CascadeKernel::index_of(EntityId e) const {
  const auto it = std::lower_bound(entities_.begin(), entities_.end(), e);
  if (it == entities_.end() || *it != e) throw ValidationError("unknown entity " + to_string(e));
  return static_cast<std::size_t>(it - entities_.begin());
}

CascadeKernel::Mask CascadeKernel::mask_of(const EntitySet& set) const {
  Mask mask(size(), 0);
  for (const auto& e : set) mask[index_of(e)] = 1;
  return mask;
}

EntitySet CascadeKernel::set_of(const Mask& mask) const {
  EntitySet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.insert(entities_[i]);
  }
  return out;
}

bool CascadeKernel::rule_fires(std::size_t pos, const Mask& failed) const {
  for (auto m = rule_begin_[pos]; m < rule_end_[pos]; ++m) {
    bool hit = false;
    for (auto l = minterm_begin_[m]; l < minterm_end_[m]; ++l) {
      if (failed[literals_[l]]) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<CascadeKernel::Mask> CascadeKernel::run(const Mask& initial, const Mask& immune, int max_steps,
                                                    bool stop_at_fixed_point) const {
  std::vector<Mask> states{initial};
  for (int t = 1; t <= max_steps; ++t) {
    const Mask& prev = states.back();
    Mask next = prev;
    bool changed = false;
    for (std::size_t pos = 0; pos < size(); ++pos) {
      if (prev[pos] || !has_rule_[pos] || (!immune.empty() && immune[pos])) continue;
      if (rule_fires(pos, prev)) {
        next[pos] = 1;
        changed = true;
      }
    }
    if (!changed && stop_at_fixed_point) break;
    states.push_back(std::move(next));
  }
  return states;
}

CascadeKernel::Mask CascadeKernel::final_failures(const Mask& initial, const Mask& immune) const {
  Mask cur = initial;
  Mask next;
  for (;;) {
    next = cur;
    bool changed = false;
    for (std::size_t pos = 0; pos < size(); ++pos) {
      if (cur[pos] || !has_rule_[pos] || (!immune.empty() && immune[pos])) continue;
      if (rule_fires(pos, cur)) {
        next[pos] = 1;
        changed = true;
      }
    }
    if (!changed) return cur;
    cur.swap(next);
  }
}

std::size_t CascadeKernel::induced_count(const Mask& initial, const Mask& immune) const {
  const Mask failed = final_failures(initial, immune);
  std::size_t count = 0;
  for (std::size_t i = 0; i < failed.size(); ++i) {
    if (failed[i] && !initial[i]) ++count;
  }
  return count;
}

CascadeTrace simulate_cascade(const Network& net, const EntitySet& initial, const CascadeOptions& options) {
  const CascadeKernel kernel(net);
  const auto initial_mask = kernel.mask_of(initial);
  const int steps = options.steps.value_or(net.horizon());
  const auto masks = kernel.run(initial_mask, {}, steps, options.stop_at_fixed_point);

  CascadeTrace trace;
  trace.horizon = net.horizon();
  trace.entities = kernel.entities();
  trace.initial = initial;
  trace.fail_times.assign(kernel.size(), kNever);
  trace.states.reserve(masks.size());
  for (std::size_t t = 0; t < masks.size(); ++t) {
    trace.states.emplace_back(masks[t].begin(), masks[t].end());
    for (std::size_t pos = 0; pos < kernel.size(); ++pos) {
      if (masks[t][pos] && trace.fail_times[pos] == kNever) trace.fail_times[pos] = static_cast<int>(t);
    }
  }
  return trace;
}

EntitySet induced_failure_set(const CascadeTrace& trace) {
  EntitySet out;
  for (std::size_t i = 0; i < trace.entities.size(); ++i) {
    const int t = trace.fail_times[i];
    if (t > 0 && t <= trace.horizon) out.insert(trace.entities[i]);
  }
  return out;
}

std::string trace_to_csv(const CascadeTrace& trace) {
  std::string out = "entity";
  for (int t = 0; t <= trace.horizon; ++t) out += "," + std::to_string(t);
  out += '\n';
  for (std::size_t i = 0; i < trace.entities.size(); ++i) {
    out += to_string(trace.entities[i]);
    for (int t = 0; t <= trace.horizon; ++t) out += trace.failed_at(i, t) ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

}  // namespace aeap
