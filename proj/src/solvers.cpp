#include "aeap/solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "aeap/cascade.hpp"
#include "aeap/errors.hpp"

namespace aeap {

std::string to_string(SolverMethod method) {
  switch (method) {
    case SolverMethod::Alg1:
      return "alg1";
    case SolverMethod::Heuristic:
      return "heuristic";
    case SolverMethod::Exact:
      break;
  }
  return "exact";
}

SolverMethod parse_solver_method(std::string_view text) {
  if (text == "alg1") return SolverMethod::Alg1;
  if (text == "heuristic") return SolverMethod::Heuristic;
  if (text == "exact") return SolverMethod::Exact;
  throw ValidationError("unknown method '" + std::string(text) + "'");
}

namespace {

bool has_always_alive(const Idr& idr) {
  return std::any_of(idr.minterms.begin(), idr.minterms.end(), [](const Minterm& m) { return m.is_always_alive(); });
}

void check_attack(const Network& net, const EntitySet& attacked) {
  for (const auto& e : attacked) {
    if (!net.contains(e)) throw ValidationError("attacked entity " + to_string(e) + " is not in the network");
  }
}

void check_budget(const Network& net, int s) {
  if (s < 1) throw ValidationError("budget s must be at least 1");
  if (static_cast<std::size_t>(s) > net.idr_count()) {
    throw ValidationError("budget s=" + std::to_string(s) + " exceeds the number of IDRs (" +
                          std::to_string(net.idr_count()) + ")");
  }
}

EntitySet set_difference(const EntitySet& lhs, const EntitySet& rhs) {
  EntitySet out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::inserter(out, out.end()));
  return out;
}

// Hit value of `target` on the network with `pruned` entities removed: their
// IDRs are dropped and they no longer count towards minterm sizes.
HitValue hit_value(const Network& net, EntityId target, const EntitySet& pruned) {
  HitValue sum{0};
  for (const auto& idr : net.idrs()) {
    if (pruned.contains(idr.target)) continue;
    for (const auto& m : idr.minterms) {
      if (!m.contains(target)) continue;
      const auto live = std::count_if(m.literals().begin(), m.literals().end(),
                                      [&](EntityId e) { return !pruned.contains(e); });
      sum += HitValue(1, static_cast<std::int64_t>(live));
    }
  }
  return sum;
}

HitValue cumulative_hit_value(const Network& net, const EntitySet& protected_entities, const EntitySet& pruned) {
  HitValue sum{0};
  for (const auto& e : protected_entities) sum += hit_value(net, e, pruned);
  return sum;
}

void finish(const Network& net, const EntitySet& attacked, AllocationSolution& sol) {
  sol.induced_before = induced_failure_set(simulate_cascade(net, attacked));
  sol.induced_after = induced_failure_set(simulate_cascade(apply_modifications(net, sol.modifications), attacked));
  sol.protected_total = set_difference(sol.induced_before, sol.induced_after);
}

}  // namespace

EntitySet verify_protection(const Network& net, const EntitySet& attacked, const std::vector<Modification>& mods) {
  const auto before = induced_failure_set(simulate_cascade(net, attacked));
  const auto after = induced_failure_set(simulate_cascade(apply_modifications(net, mods), attacked));
  return set_difference(before, after);
}

ProtectionSet auxiliary_protection_set(const Network& net, int idr_label, EntityId auxiliary,
                                       const EntitySet& attacked) {
  check_attack(net, attacked);
  const Idr& idr = net.idr(idr_label);
  const auto original = simulate_cascade(net, attacked);
  ProtectionSet out{idr_label, auxiliary, {}};
  if (auxiliary.is_always_alive()) {
    // A second always-alive disjunct changes nothing.
    if (has_always_alive(idr)) return out;
  } else {
    if (original.failed_set().contains(auxiliary)) {
      throw ValidationError("auxiliary " + to_string(auxiliary) + " fails under the attack");
    }
  }
  const auto modified = simulate_cascade(apply_modification(net, {idr_label, auxiliary}), attacked);
  out.protected_entities = set_difference(induced_failure_set(original), induced_failure_set(modified));
  return out;
}

AllocationSolution solve_alg1_special_case(const Network& net, const EntitySet& attacked, int s) {
  check_attack(net, attacked);
  if (s < 1) throw ValidationError("budget s must be at least 1");
  std::map<EntityId, int> rhs_uses;
  for (const auto& idr : net.idrs()) {
    if (idr.empty()) continue;
    if (idr.minterms.size() != 1 || idr.minterms.front().size() != 1 || idr.minterms.front().is_always_alive()) {
      throw ValidationError("IDR of " + to_string(idr.target) + " is not a single one-literal minterm");
    }
    if (++rhs_uses[idr.minterms.front().literals().front()] > 1) {
      throw ValidationError("entity " + to_string(idr.minterms.front().literals().front()) +
                            " appears on more than one right-hand side");
    }
  }

  const auto failed = simulate_cascade(net, attacked).failed_set();
  struct Candidate {
    EntityId target;
    int label;
    EntityId auxiliary;
    EntitySet protection;
  };
  // Canonical target order, then auxiliary order: the first maximum wins ties.
  std::vector<Candidate> candidates;
  std::set<int> eligible_labels;
  for (const auto& target : net.entities()) {
    const Idr& idr = net.idr_for(target);
    if (idr.empty()) continue;
    const auto e_d = idr.entities();
    for (const auto& x : net.entities()) {
      if (failed.contains(x) || e_d.contains(x)) continue;
      candidates.push_back(
          {target, idr.label, x, auxiliary_protection_set(net, idr.label, x, attacked).protected_entities});
      eligible_labels.insert(idr.label);
    }
  }
  if (static_cast<std::size_t>(s) > eligible_labels.size()) {
    throw ValidationError("budget s=" + std::to_string(s) + " exceeds the " + std::to_string(eligible_labels.size()) +
                          " IDRs with an eligible auxiliary");
  }

  AllocationSolution sol;
  sol.method = SolverMethod::Alg1;
  sol.s = s;
  sol.evaluations = candidates.size();
  for (int round = 0; round < s; ++round) {
    const Candidate* best = nullptr;
    for (const auto& c : candidates) {
      if (best == nullptr || c.protection.size() > best->protection.size()) best = &c;
    }
    const Candidate chosen = *best;
    sol.modifications.push_back({chosen.label, chosen.auxiliary});
    sol.accumulated.insert(chosen.protection.begin(), chosen.protection.end());
    std::erase_if(candidates, [&](const Candidate& c) { return c.label == chosen.label; });
    for (auto& c : candidates) c.protection = set_difference(c.protection, chosen.protection);
  }
  finish(net, attacked, sol);
  return sol;
}

HitValue afmhv(const Network& net, int idr_label) { return hit_value(net, net.idr(idr_label).target, {}); }

HitValue acfmhv(const Network& net, int idr_label, const EntitySet& attacked) {
  const auto ap = auxiliary_protection_set(net, idr_label, EntityId::always_alive(), attacked);
  return cumulative_hit_value(net, ap.protected_entities, {});
}

std::vector<ScoredIdr> score_idrs(const Network& net, const EntitySet& attacked) {
  std::vector<ScoredIdr> out;
  for (const auto& idr : net.idrs()) {
    const auto ap = auxiliary_protection_set(net, idr.label, EntityId::always_alive(), attacked);
    out.push_back({idr.label, static_cast<int>(ap.protected_entities.size()), afmhv(net, idr.label),
                   cumulative_hit_value(net, ap.protected_entities, {})});
  }
  return out;
}

AllocationSolution solve_heuristic(const Network& net, const EntitySet& attacked, int s) {
  check_attack(net, attacked);
  check_budget(net, s);
  const CascadeKernel kernel(net);
  const auto n = kernel.size();
  const auto initial = kernel.mask_of(attacked);
  // Entities marked permanently operational: modified targets and everything
  // protected so far. Marking them is the pruning step.
  CascadeKernel::Mask immune(n, 0);
  std::vector<std::uint8_t> modified(n, 0);

  AllocationSolution sol;
  sol.method = SolverMethod::Heuristic;
  sol.s = s;
  for (int round = 0; round < s; ++round) {
    const auto current = kernel.final_failures(initial, immune);
    std::vector<std::pair<std::size_t, EntitySet>> best;  // ties at the largest |AP|
    std::size_t best_size = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (modified[pos]) continue;
      EntitySet ap;
      if (current[pos] && !initial[pos]) {
        immune[pos] = 1;
        const auto after = kernel.final_failures(initial, immune);
        immune[pos] = 0;
        ++sol.evaluations;
        for (std::size_t i = 0; i < n; ++i) {
          if (current[i] && !initial[i] && !after[i]) ap.insert(kernel.entities()[i]);
        }
      }
      if (best.empty() || ap.size() > best_size) {
        best_size = ap.size();
        best.clear();
        best.emplace_back(pos, std::move(ap));
      } else if (ap.size() == best_size) {
        best.emplace_back(pos, std::move(ap));
      }
    }

    std::size_t pick = 0;
    if (best.size() > 1) {
      HitValue top{-1};
      for (std::size_t i = 0; i < best.size(); ++i) {
        const auto value = cumulative_hit_value(net, best[i].second, sol.accumulated);
        if (value > top) {
          top = value;
          pick = i;
        }
      }
    }
    const auto& [pos, ap] = best[pick];
    modified[pos] = 1;
    immune[pos] = 1;
    for (const auto& e : ap) immune[kernel.index_of(e)] = 1;
    sol.modifications.push_back({kernel.label_at(pos), EntityId::always_alive()});
    sol.accumulated.insert(ap.begin(), ap.end());
  }
  finish(net, attacked, sol);
  return sol;
}

AllocationSolution solve_exact(const Network& net, const EntitySet& attacked, int s, std::uint64_t cap) {
  check_attack(net, attacked);
  check_budget(net, s);
  const CascadeKernel kernel(net);
  const auto n = kernel.size();
  const auto initial = kernel.mask_of(attacked);
  const auto base = kernel.final_failures(initial, {});

  std::vector<int> candidates;  // labels of IDRs whose target is an induced failure
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (base[pos] && !initial[pos]) candidates.push_back(kernel.label_at(pos));
  }
  std::sort(candidates.begin(), candidates.end());
  const auto take = std::min(candidates.size(), static_cast<std::size_t>(s));
  const auto combos = binomial(candidates.size(), take);
  if (combos > cap) {
    throw CapExceededError("C(" + std::to_string(candidates.size()) + ", " + std::to_string(take) + ") = " +
                           std::to_string(combos) + " evaluations exceed cap " + std::to_string(cap));
  }

  std::vector<std::size_t> position_of_label(net.idr_count() + 1);
  for (std::size_t pos = 0; pos < n; ++pos) position_of_label[static_cast<std::size_t>(kernel.label_at(pos))] = pos;

  AllocationSolution sol;
  sol.method = SolverMethod::Exact;
  sol.s = s;
  std::vector<std::size_t> pick(take);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<std::size_t> best_pick = pick;
  std::size_t best = n + 1;
  CascadeKernel::Mask immune(n, 0);
  for (;;) {
    std::fill(immune.begin(), immune.end(), 0);
    for (auto p : pick) immune[position_of_label[static_cast<std::size_t>(candidates[p])]] = 1;
    const auto induced = kernel.induced_count(initial, immune);
    ++sol.evaluations;
    if (induced < best) {
      best = induced;
      best_pick = pick;
    }
    auto i = pick.size();
    while (i > 0 && pick[i - 1] == candidates.size() - pick.size() + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (auto j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }

  std::set<int> labels;
  for (auto p : best_pick) labels.insert(candidates[p]);
  for (int label = 1; labels.size() < static_cast<std::size_t>(s); ++label) labels.insert(label);
  for (int label : labels) sol.modifications.push_back({label, EntityId::always_alive()});

  CascadeKernel::Mask chosen(n, 0);
  for (auto p : best_pick) chosen[position_of_label[static_cast<std::size_t>(candidates[p])]] = 1;
  const auto after = kernel.final_failures(initial, chosen);
  for (std::size_t i = 0; i < n; ++i) {
    if (base[i] && !initial[i] && !after[i]) sol.accumulated.insert(kernel.entities()[i]);
  }
  finish(net, attacked, sol);
  return sol;
}

SetCoverReduction reduce_setcover(int universe_size, const std::vector<std::vector<int>>& subsets, int x) {
  const int n = universe_size;
  const int m = static_cast<int>(subsets.size());
  if (n < 1) throw ValidationError("universe must be non-empty");
  if (x < 1 || x > m) throw ValidationError("x must lie in [1, number of subsets]");
  std::vector<std::vector<int>> containing(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= m; ++j) {
    for (int element : subsets[static_cast<std::size_t>(j) - 1]) {
      if (element < 1 || element > n) throw ValidationError("element " + std::to_string(element) + " out of range");
      auto& list = containing[static_cast<std::size_t>(element)];
      if (list.empty() || list.back() != j) list.push_back(j);
    }
  }
  std::vector<Rule> rules;
  for (int i = 1; i <= n; ++i) {
    const auto& list = containing[static_cast<std::size_t>(i)];
    if (list.empty()) throw ValidationError("element " + std::to_string(i) + " is in no subset");
    Rule rule{EntityId::a(static_cast<std::uint32_t>(i)), {}};
    for (int j : list) rule.minterms.push_back(Minterm{EntityId::b(static_cast<std::uint32_t>(j))});
    rules.push_back(std::move(rule));
  }
  SetCoverReduction out;
  for (int j = 1; j <= m; ++j) {
    const auto a2 = EntityId::a(static_cast<std::uint32_t>(n + j));
    rules.push_back(Rule{a2, {}});
    out.attacked.insert(a2);
  }
  for (int i = 1; i <= x; ++i) rules.push_back(Rule{EntityId::a(static_cast<std::uint32_t>(n + m + i)), {}});
  for (int j = 1; j <= m; ++j) {
    rules.push_back(Rule{EntityId::b(static_cast<std::uint32_t>(j)),
                         {Minterm{EntityId::a(static_cast<std::uint32_t>(n + j))}}});
  }
  out.network = Network(std::move(rules));
  out.s = x;
  out.p_f_target = x + n;
  out.universe_size = n;
  out.subset_count = m;
  return out;
}

}  // namespace aeap
