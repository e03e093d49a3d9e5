#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "aeap/entity.hpp"
#include "aeap/network.hpp"
#include "aeap/vulnerability.hpp"

namespace aeap {

/// Exact sum of unit fractions.
using HitValue = boost::rational<std::int64_t>;

/// Entities saved from induced failure by adding `auxiliary` to one IDR.
struct ProtectionSet {
  int idr_label = 0;
  EntityId auxiliary = EntityId::always_alive();
  EntitySet protected_entities;
};

enum class SolverMethod { Alg1, Heuristic, Exact };

std::string to_string(SolverMethod method);
SolverMethod parse_solver_method(std::string_view text);

struct AllocationSolution {
  SolverMethod method = SolverMethod::Exact;
  int s = 0;
  std::vector<Modification> modifications;
  /// P_f, measured by re-simulating the original and fully modified networks.
  EntitySet protected_total;
  /// P_f as tracked by the solver's own bookkeeping.
  EntitySet accumulated;
  EntitySet induced_before;
  EntitySet induced_after;
  std::uint64_t evaluations = 0;
};

/// Per-IDR diagnostics used by the heuristic's selection rule.
struct ScoredIdr {
  int idr_label = 0;
  int ap_size = 0;
  HitValue afmhv;
  HitValue acfmhv;
};

/// AP(D, x | K): induced failures of the original network minus those of the
/// network where IDR `idr_label` gains the disjunct `auxiliary`. A concrete
/// auxiliary must lie outside A' ∪ B' ∪ E_D (ValidationError otherwise).
ProtectionSet auxiliary_protection_set(const Network& net, int idr_label, EntityId auxiliary,
                                       const EntitySet& attacked);

/// Greedy allocation for networks whose IDRs each hold one single-literal
/// minterm, with no entity on more than one right-hand side. Protection sets
/// are computed once per (IDR, auxiliary) pair and shrunk by set subtraction
/// after each pick. Throws ValidationError when the network is outside that
/// class or s exceeds the number of IDRs that have an eligible auxiliary.
AllocationSolution solve_alg1_special_case(const Network& net, const EntitySet& attacked, int s);

/// Sum of 1/|m| over every minterm m, across all IDRs, that contains the
/// labelled IDR's target.
HitValue afmhv(const Network& net, int idr_label);

/// Sum of afmhv over the IDRs of the entities in AP(D | K), with an
/// always-alive auxiliary on D.
HitValue acfmhv(const Network& net, int idr_label, const EntitySet& attacked);

std::vector<ScoredIdr> score_idrs(const Network& net, const EntitySet& attacked);

/// Iterative heuristic for the restricted case: each round takes the IDR with
/// the largest protection set on the current network, breaking ties by
/// ACFMHV and then by canonical target order, and marks the protected
/// entities as permanently operational.
AllocationSolution solve_heuristic(const Network& net, const EntitySet& attacked, int s);

/// Optimal allocation of s always-alive auxiliaries by enumeration. Only IDRs
/// whose target suffers an induced failure can change the outcome, so subsets
/// of those are enumerated (lexicographic label order, first optimum wins);
/// unused budget goes to the lowest remaining labels. Throws ValidationError
/// for s > P and CapExceededError when the enumeration exceeds `cap`.
AllocationSolution solve_exact(const Network& net, const EntitySet& attacked, int s,
                               std::uint64_t cap = kDefaultEvaluationCap);

/// Recomputes P_f for `mods` from scratch with simulate_cascade.
EntitySet verify_protection(const Network& net, const EntitySet& attacked, const std::vector<Modification>& mods);

/// AEAP instance built from a set-cover instance. Elements are numbered
/// 1..universe_size.
struct SetCoverReduction {
  Network network;
  EntitySet attacked;
  int s = 0;
  int p_f_target = 0;
  int universe_size = 0;
  int subset_count = 0;
};

/// Entities: a_1..a_n per element (A1), a_{n+1}..a_{n+m} per subset (A2),
/// a_{n+m+1}..a_{n+m+x} with no dependency (A3), and b_1..b_m per subset.
/// a_i <- sum of b_j over subsets holding element i; b_j <- a_{n+j}.
/// Throws ValidationError if an element is uncovered or out of range, or if
/// x is not in [1, m].
SetCoverReduction reduce_setcover(int universe_size, const std::vector<std::vector<int>>& subsets, int x);

}  // namespace aeap
