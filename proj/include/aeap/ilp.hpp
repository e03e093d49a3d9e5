#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aeap/entity.hpp"
#include "aeap/network.hpp"

namespace aeap {

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Term {
  int var = 0;
  std::int64_t coef = 0;
};

/// Which family a constraint belongs to.
enum class ConstraintFamily {
  InitialFailure,    // x_{i,0} = g_i
  Monotone,          // x_{i,d} >= x_{i,d-1}
  VirtualLower,      // N c_{k,d} >= sum of conjunct failures at d-1
  VirtualUpper,      // c_{k,d} <= sum of conjunct failures at d-1
  DisjunctionLower,  // target fails once every disjunct (auxiliary included) has failed
  DisjunctionUpper,  // target fails only if every disjunct has failed
  NoDependency,      // entity with an empty IDR never suffers induced failure
  Budget,            // sum of m_v = S
};

struct LinearConstraint {
  std::string name;
  ConstraintFamily family = ConstraintFamily::Budget;
  std::vector<Term> terms;
  Sense sense = Sense::Equal;
  std::int64_t rhs = 0;
};

struct Variable {
  enum class Kind { EntityState, VirtualState, Modification };
  std::string name;
  Kind kind = Kind::EntityState;
  EntityId entity;       // EntityState: the entity; VirtualState: the IDR owner; Modification: the IDR target
  int time = 0;          // state variables only
  int virtual_index = 0; // VirtualState only, 1-based
  int label = 0;         // Modification only
};

/// A minterm of two or more literals replaced by one failure indicator.
struct VirtualEntity {
  int index = 0;  // 1-based
  EntityId owner;
  Minterm minterm;
};

struct ConstraintCounts {
  std::size_t initial_failure = 0;
  std::size_t monotone = 0;
  std::size_t virtual_lower = 0;
  std::size_t virtual_upper = 0;
  std::size_t disjunction_lower = 0;
  std::size_t disjunction_upper = 0;
  std::size_t no_dependency = 0;
  std::size_t budget = 0;

  std::size_t total() const {
    return initial_failure + monotone + virtual_lower + virtual_upper + disjunction_lower + disjunction_upper +
           no_dependency + budget;
  }
  friend bool operator==(const ConstraintCounts&, const ConstraintCounts&) = default;
};

/// Time-indexed 0/1 program whose optimum is the AEAP optimum of the
/// restricted case. All variables are binary; 1 means "failed" for state
/// variables and "auxiliary added" for m_v.
struct IlpModel {
  int horizon = 0;  // T = 2(|A|+|B|)
  int budget = 0;
  EntitySet attacked;
  std::vector<Variable> variables;
  std::vector<LinearConstraint> constraints;
  std::vector<Term> objective;
  std::vector<VirtualEntity> virtual_entities;
  std::map<std::string, int> index_of;

  int var(const std::string& name) const;
  ConstraintCounts counts() const;
};

/// Variable names: x_<i>_<d> for a_i, y_<j>_<d> for b_j, c_<k>_<d> for virtual
/// entity k, m_<v> for IDR label v.
std::string state_variable(EntityId e, int time);

/// Throws ValidationError if s < 0, s > P, or `attacked` names an unknown entity.
IlpModel build_ilp(const Network& net, const EntitySet& attacked, int s);

/// CPLEX-style LP text; byte-identical for identical models.
std::string write_lp(const IlpModel& model);

/// JSON mapping each variable name to the entity/time or IDR it encodes.
std::string write_sidecar(const IlpModel& model);

using Assignment = std::map<std::string, int>;

struct AssignmentReport {
  bool feasible = true;
  std::vector<std::string> violated;  // constraint names, plus "domain:<var>" for non-binary values
  std::int64_t objective = 0;
};

/// Evaluates every constraint. Throws ValidationError if a variable is missing.
AssignmentReport check_assignment(const IlpModel& model, const Assignment& assignment);

/// The assignment a cascade induces on the model's variables when the IDRs in
/// `modified_labels` carry an always-alive disjunct. Virtual entities fail one
/// step after any conjunct fails; targets fail one step after every disjunct.
Assignment transcribe_cascade(const IlpModel& model, const Network& net, const std::vector<int>& modified_labels);

}  // namespace aeap
