#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aeap/entity.hpp"
#include "aeap/network.hpp"

namespace aeap {

inline constexpr int kNever = -1;

/// Outcome of one cascade. `states[t][i]` is true when entities()[i] is
/// non-operational at step t; states are recorded until the fixed point (or
/// the step limit), after which they no longer change.
struct CascadeTrace {
  int horizon = 0;
  std::vector<EntityId> entities;  // canonical order
  std::vector<int> fail_times;     // parallel to entities; kNever if never failed
  EntitySet initial;
  std::vector<std::vector<bool>> states;

  std::optional<int> fail_time(EntityId e) const;
  /// A' ∪ B': every entity that is non-operational at the end.
  EntitySet failed_set() const;
  /// Non-operational flag at any t >= 0; steps past the recorded ones repeat
  /// the last state.
  bool failed_at(std::size_t entity_pos, int t) const;
};

struct CascadeOptions {
  /// Number of steps to run; defaults to the network's horizon.
  std::optional<int> steps;
  /// Stop as soon as one step changes nothing.
  bool stop_at_fixed_point = true;
};

/// Synchronous failure propagation: at step t a non-initial entity with a
/// non-empty IDR fails iff every minterm holds a literal that was failed at
/// t-1. Entities with empty IDRs fail only when attacked. Throws
/// ValidationError if `initial` names an entity outside the network.
CascadeTrace simulate_cascade(const Network& net, const EntitySet& initial, const CascadeOptions& options = {});

/// Entities failed at some 0 < t <= horizon.
EntitySet induced_failure_set(const CascadeTrace& trace);

/// Rows are entities in canonical order, columns t = 0..horizon, 1 = failed.
std::string trace_to_csv(const CascadeTrace& trace);

/// Index-based cascade evaluator for repeated simulation of one network
/// under different attacks and protections. Solvers call this in their inner
/// loops; simulate_cascade is built on it.
class CascadeKernel {
 public:
  using Mask = std::vector<std::uint8_t>;

  explicit CascadeKernel(const Network& net);

  std::size_t size() const { return entities_.size(); }
  const std::vector<EntityId>& entities() const { return entities_; }
  std::size_t index_of(EntityId e) const;
  int label_at(std::size_t pos) const { return labels_[pos]; }

  Mask mask_of(const EntitySet& set) const;
  EntitySet set_of(const Mask& mask) const;

  /// Runs to the fixed point. `immune` marks entities that can never suffer an
  /// induced failure (an always-alive disjunct was added to their IDR); attacked
  /// entities stay failed regardless. Returns the final failure mask.
  Mask final_failures(const Mask& initial, const Mask& immune) const;

  /// Number of entities failed after t = 0 at the fixed point.
  std::size_t induced_count(const Mask& initial, const Mask& immune) const;

  /// Full per-step record, used by simulate_cascade.
  std::vector<Mask> run(const Mask& initial, const Mask& immune, int max_steps, bool stop_at_fixed_point) const;

 private:
  bool rule_fires(std::size_t pos, const Mask& failed) const;

  std::vector<EntityId> entities_;
  std::vector<int> labels_;
  // Per entity: offsets into minterms_ (has_rule_ false for empty IDRs).
  std::vector<std::uint8_t> has_rule_;
  std::vector<std::uint32_t> rule_begin_;
  std::vector<std::uint32_t> rule_end_;
  // Per minterm: offsets into literals_. An always-alive minterm has no literals.
  std::vector<std::uint32_t> minterm_begin_;
  std::vector<std::uint32_t> minterm_end_;
  std::vector<std::uint32_t> literals_;
};

}  // namespace aeap
