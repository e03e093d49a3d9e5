#include "aeap/ilp.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "aeap/errors.hpp"

namespace aeap {

namespace {

// One disjunct of a virtualised IDR.
struct Disjunct {
  enum class Kind { Literal, Virtual, AlwaysAlive } kind;
  EntityId literal;
  int virtual_index = 0;
};

std::string minterm_text(const Minterm& m) {
  std::string out;
  for (const auto& e : m.literals()) {
    if (!out.empty()) out += ' ';
    out += to_string(e);
  }
  return out;
}

std::string virtual_variable(int k, int time) { return "c_" + std::to_string(k) + "_" + std::to_string(time); }
std::string modification_variable(int label) { return "m_" + std::to_string(label); }

std::vector<Disjunct> disjuncts_of(const Idr& idr, const std::map<std::pair<int, std::size_t>, int>& virtual_of) {
  std::vector<Disjunct> out;
  for (std::size_t i = 0; i < idr.minterms.size(); ++i) {
    const auto& m = idr.minterms[i];
    if (m.is_always_alive()) {
      out.push_back({Disjunct::Kind::AlwaysAlive, {}, 0});
    } else if (m.size() == 1) {
      out.push_back({Disjunct::Kind::Literal, m.literals().front(), 0});
    } else {
      out.push_back({Disjunct::Kind::Virtual, {}, virtual_of.at({idr.label, i})});
    }
  }
  return out;
}

std::map<std::pair<int, std::size_t>, int> virtual_index_map(const IlpModel& model, const Network& net) {
  std::map<std::pair<int, std::size_t>, int> out;
  auto it = model.virtual_entities.begin();
  for (const auto& idr : net.idrs()) {
    for (std::size_t i = 0; i < idr.minterms.size(); ++i) {
      if (idr.minterms[i].size() > 1) out[{idr.label, i}] = (it++)->index;
    }
  }
  return out;
}

}  // namespace

std::string state_variable(EntityId e, int time) {
  return std::string(e.side == Side::A ? "x_" : "y_") + std::to_string(e.index) + "_" + std::to_string(time);
}

int IlpModel::var(const std::string& name) const {
  const auto it = index_of.find(name);
  if (it == index_of.end()) throw ValidationError("unknown variable " + name);
  return it->second;
}

ConstraintCounts IlpModel::counts() const {
  ConstraintCounts c;
  for (const auto& con : constraints) {
    switch (con.family) {
      case ConstraintFamily::InitialFailure: ++c.initial_failure; break;
      case ConstraintFamily::Monotone: ++c.monotone; break;
      case ConstraintFamily::VirtualLower: ++c.virtual_lower; break;
      case ConstraintFamily::VirtualUpper: ++c.virtual_upper; break;
      case ConstraintFamily::DisjunctionLower: ++c.disjunction_lower; break;
      case ConstraintFamily::DisjunctionUpper: ++c.disjunction_upper; break;
      case ConstraintFamily::NoDependency: ++c.no_dependency; break;
      case ConstraintFamily::Budget: ++c.budget; break;
    }
  }
  return c;
}

IlpModel build_ilp(const Network& net, const EntitySet& attacked, int s) {
  if (s < 0 || static_cast<std::size_t>(s) > net.idr_count()) {
    throw ValidationError("budget s=" + std::to_string(s) + " outside [0, " + std::to_string(net.idr_count()) + "]");
  }
  for (const auto& e : attacked) {
    if (!net.contains(e)) throw ValidationError("attacked entity " + to_string(e) + " is not in the network");
  }

  IlpModel model;
  model.horizon = 2 * static_cast<int>(net.size());
  model.budget = s;
  model.attacked = attacked;
  const int T = model.horizon;

  auto add_var = [&model](Variable v) {
    model.index_of.emplace(v.name, static_cast<int>(model.variables.size()));
    model.variables.push_back(std::move(v));
  };
  for (const auto& e : net.entities()) {
    for (int d = 0; d <= T; ++d) add_var({state_variable(e, d), Variable::Kind::EntityState, e, d, 0, 0});
  }
  std::map<std::pair<int, std::size_t>, int> virtual_of;
  for (const auto& idr : net.idrs()) {
    for (std::size_t i = 0; i < idr.minterms.size(); ++i) {
      if (idr.minterms[i].size() < 2) continue;
      const int k = static_cast<int>(model.virtual_entities.size()) + 1;
      model.virtual_entities.push_back({k, idr.target, idr.minterms[i]});
      virtual_of[{idr.label, i}] = k;
    }
  }
  for (const auto& v : model.virtual_entities) {
    // c_{k,0} is the constant 0: a virtual entity reacts one step after its conjuncts.
    for (int d = 1; d <= T; ++d) add_var({virtual_variable(v.index, d), Variable::Kind::VirtualState, v.owner, d, v.index, 0});
  }
  for (const auto& idr : net.idrs()) {
    add_var({modification_variable(idr.label), Variable::Kind::Modification, idr.target, 0, 0, idr.label});
  }

  auto add = [&model](std::string name, ConstraintFamily family, std::vector<Term> terms, Sense sense,
                      std::int64_t rhs) {
    model.constraints.push_back({std::move(name), family, std::move(terms), sense, rhs});
  };
  const auto& entities = net.entities();

  for (const auto& e : entities) {
    add("init_" + to_string(e), ConstraintFamily::InitialFailure, {{model.var(state_variable(e, 0)), 1}}, Sense::Equal,
        attacked.contains(e) ? 1 : 0);
  }
  for (const auto& e : entities) {
    for (int d = 1; d <= T; ++d) {
      add("mono_" + to_string(e) + "_" + std::to_string(d), ConstraintFamily::Monotone,
          {{model.var(state_variable(e, d)), 1}, {model.var(state_variable(e, d - 1)), -1}}, Sense::GreaterEqual, 0);
    }
  }
  for (const auto& v : model.virtual_entities) {
    const auto n_conj = static_cast<std::int64_t>(v.minterm.size());
    for (int d = 1; d <= T; ++d) {
      std::vector<Term> lower{{model.var(virtual_variable(v.index, d)), n_conj}};
      std::vector<Term> upper{{model.var(virtual_variable(v.index, d)), 1}};
      for (const auto& lit : v.minterm.literals()) {
        lower.push_back({model.var(state_variable(lit, d - 1)), -1});
        upper.push_back({model.var(state_variable(lit, d - 1)), -1});
      }
      const auto suffix = std::to_string(v.index) + "_" + std::to_string(d);
      add("vlo_" + suffix, ConstraintFamily::VirtualLower, std::move(lower), Sense::GreaterEqual, 0);
      add("vhi_" + suffix, ConstraintFamily::VirtualUpper, std::move(upper), Sense::LessEqual, 0);
    }
  }
  for (const auto& e : entities) {
    const Idr& idr = net.idr_for(e);
    const int m_var = model.var(modification_variable(idr.label));
    if (idr.empty()) {
      for (int d = 1; d <= T; ++d) {
        add("nodep_" + to_string(e) + "_" + std::to_string(d), ConstraintFamily::NoDependency,
            {{model.var(state_variable(e, d)), 1}, {model.var(state_variable(e, d - 1)), -1}}, Sense::LessEqual, 0);
      }
      continue;
    }
    // The auxiliary is an extra disjunct whose failure indicator is (1 - m_v).
    const auto disjuncts = disjuncts_of(idr, virtual_of);
    const auto n_dis = static_cast<std::int64_t>(disjuncts.size());
    const std::int64_t g = attacked.contains(e) ? 1 : 0;
    for (int d = 1; d <= T; ++d) {
      std::vector<Term> failed;
      for (const auto& dj : disjuncts) {
        if (dj.kind == Disjunct::Kind::Literal) {
          failed.push_back({model.var(state_variable(dj.literal, d - 1)), -1});
        } else if (dj.kind == Disjunct::Kind::Virtual && d - 1 >= 1) {
          failed.push_back({model.var(virtual_variable(dj.virtual_index, d - 1)), -1});
        }
      }
      std::vector<Term> lower{{model.var(state_variable(e, d)), 1}};
      lower.insert(lower.end(), failed.begin(), failed.end());
      lower.push_back({m_var, 1});
      std::vector<Term> upper{{model.var(state_variable(e, d)), n_dis + 1}};
      upper.insert(upper.end(), failed.begin(), failed.end());
      upper.push_back({m_var, 1});
      const auto suffix = to_string(e) + "_" + std::to_string(d);
      add("dlo_" + suffix, ConstraintFamily::DisjunctionLower, std::move(lower), Sense::GreaterEqual, 1 - n_dis);
      add("dhi_" + suffix, ConstraintFamily::DisjunctionUpper, std::move(upper), Sense::LessEqual,
          1 + (n_dis + 1) * g);
    }
  }
  std::vector<Term> budget;
  for (const auto& idr : net.idrs()) budget.push_back({model.var(modification_variable(idr.label)), 1});
  add("budget", ConstraintFamily::Budget, std::move(budget), Sense::Equal, s);

  // Attacked entities are failed at T in every feasible assignment, so only
  // the remaining terminal variables are counted: the objective is the number
  // of induced failures.
  for (const auto& e : entities) {
    if (!attacked.contains(e)) model.objective.push_back({model.var(state_variable(e, T)), 1});
  }
  return model;
}

namespace {

void append_expression(std::string& out, const IlpModel& model, const std::vector<Term>& terms, std::size_t indent) {
  constexpr std::size_t kWrap = 200;
  std::size_t line_len = indent;
  bool first = true;
  for (const auto& t : terms) {
    std::string piece;
    if (first) {
      if (t.coef < 0) piece += "- ";
    } else {
      piece += t.coef < 0 ? "- " : "+ ";
    }
    const auto mag = t.coef < 0 ? -t.coef : t.coef;
    if (mag != 1) piece += std::to_string(mag) + " ";
    piece += model.variables[static_cast<std::size_t>(t.var)].name;
    if (!first && line_len + piece.size() + 1 > kWrap) {
      out += "\n  ";
      line_len = 2;
    } else if (!first) {
      out += ' ';
      ++line_len;
    }
    out += piece;
    line_len += piece.size();
    first = false;
  }
}

}  // namespace

std::string write_lp(const IlpModel& model) {
  std::string out;
  std::size_t virtual_count = model.virtual_entities.size();
  std::size_t entity_count = 0;
  for (const auto& v : model.variables) {
    if (v.kind == Variable::Kind::Modification) ++entity_count;
  }
  out += "\\ Auxiliary entity allocation: " + std::to_string(entity_count) + " entities, " +
         std::to_string(virtual_count) + " virtual entities, horizon " + std::to_string(model.horizon) + ", budget " +
         std::to_string(model.budget) + "\n";
  out += "Minimize\n obj:";
  if (!model.objective.empty()) {
    out += ' ';
    append_expression(out, model, model.objective, 6);
  }
  out += "\nSubject To\n";
  for (const auto& con : model.constraints) {
    if (con.terms.empty()) {
      out += "\\ " + con.name + ": no variables\n";
      continue;
    }
    out += " " + con.name + ": ";
    append_expression(out, model, con.terms, con.name.size() + 3);
    switch (con.sense) {
      case Sense::LessEqual: out += " <= "; break;
      case Sense::GreaterEqual: out += " >= "; break;
      case Sense::Equal: out += " = "; break;
    }
    out += std::to_string(con.rhs) + "\n";
  }
  out += "Bounds\n";
  for (const auto& v : model.variables) out += " 0 <= " + v.name + " <= 1\n";
  out += "Binary\n";
  for (const auto& v : model.variables) out += " " + v.name + "\n";
  out += "End\n";
  return out;
}

std::string write_sidecar(const IlpModel& model) {
  nlohmann::ordered_json doc;
  doc["horizon"] = model.horizon;
  doc["budget"] = model.budget;
  doc["attacked"] = to_strings(model.attacked);
  auto& vars = doc["variables"] = nlohmann::ordered_json::object();
  for (const auto& v : model.variables) {
    nlohmann::ordered_json entry;
    switch (v.kind) {
      case Variable::Kind::EntityState:
        entry["kind"] = "entity";
        entry["entity"] = to_string(v.entity);
        entry["t"] = v.time;
        break;
      case Variable::Kind::VirtualState:
        entry["kind"] = "virtual";
        entry["virtual"] = v.virtual_index;
        entry["owner"] = to_string(v.entity);
        entry["t"] = v.time;
        break;
      case Variable::Kind::Modification:
        entry["kind"] = "modification";
        entry["label"] = v.label;
        entry["idr_target"] = to_string(v.entity);
        break;
    }
    vars[v.name] = std::move(entry);
  }
  auto& virt = doc["virtual_entities"] = nlohmann::ordered_json::array();
  for (const auto& v : model.virtual_entities) {
    virt.push_back({{"index", v.index}, {"owner", to_string(v.owner)}, {"minterm", minterm_text(v.minterm)}});
  }
  return doc.dump(2) + "\n";
}

AssignmentReport check_assignment(const IlpModel& model, const Assignment& assignment) {
  std::vector<int> value(model.variables.size(), 0);
  AssignmentReport report;
  for (std::size_t i = 0; i < model.variables.size(); ++i) {
    const auto& name = model.variables[i].name;
    const auto it = assignment.find(name);
    if (it == assignment.end()) throw ValidationError("assignment is missing variable " + name);
    value[i] = it->second;
    if (it->second != 0 && it->second != 1) {
      report.feasible = false;
      report.violated.push_back("domain:" + name);
    }
  }
  for (const auto& con : model.constraints) {
    std::int64_t lhs = 0;
    for (const auto& t : con.terms) lhs += t.coef * value[static_cast<std::size_t>(t.var)];
    const bool ok = con.sense == Sense::LessEqual      ? lhs <= con.rhs
                    : con.sense == Sense::GreaterEqual ? lhs >= con.rhs
                                                       : lhs == con.rhs;
    if (!ok) {
      report.feasible = false;
      report.violated.push_back(con.name);
    }
  }
  for (const auto& t : model.objective) report.objective += t.coef * value[static_cast<std::size_t>(t.var)];
  return report;
}

Assignment transcribe_cascade(const IlpModel& model, const Network& net, const std::vector<int>& modified_labels) {
  const int T = model.horizon;
  const auto& entities = net.entities();
  const auto virtual_of = virtual_index_map(model, net);
  std::set<int> modified(modified_labels.begin(), modified_labels.end());

  std::map<EntityId, std::vector<int>> state;
  for (const auto& e : entities) {
    state[e].assign(static_cast<std::size_t>(T) + 1, 0);
    state[e][0] = model.attacked.contains(e) ? 1 : 0;
  }
  std::vector<std::vector<int>> virt(model.virtual_entities.size() + 1, std::vector<int>(static_cast<std::size_t>(T) + 1, 0));

  for (int d = 1; d <= T; ++d) {
    const auto prev = static_cast<std::size_t>(d - 1);
    const auto cur = static_cast<std::size_t>(d);
    for (const auto& v : model.virtual_entities) {
      int any = 0;
      for (const auto& lit : v.minterm.literals()) any |= state[lit][prev];
      virt[static_cast<std::size_t>(v.index)][cur] = any;
    }
    for (const auto& e : entities) {
      const Idr& idr = net.idr_for(e);
      int failed = state[e][prev];
      if (!failed && !idr.empty() && !modified.contains(idr.label)) {
        bool all = true;
        for (const auto& dj : disjuncts_of(idr, virtual_of)) {
          const bool dj_failed = dj.kind == Disjunct::Kind::Literal   ? state[dj.literal][prev] != 0
                                 : dj.kind == Disjunct::Kind::Virtual ? virt[static_cast<std::size_t>(dj.virtual_index)][prev] != 0
                                                                      : false;
          if (!dj_failed) {
            all = false;
            break;
          }
        }
        failed = all ? 1 : 0;
      }
      state[e][cur] = failed;
    }
  }

  Assignment out;
  for (const auto& e : entities) {
    for (int d = 0; d <= T; ++d) out[state_variable(e, d)] = state[e][static_cast<std::size_t>(d)];
  }
  for (const auto& v : model.virtual_entities) {
    for (int d = 1; d <= T; ++d) out[virtual_variable(v.index, d)] = virt[static_cast<std::size_t>(v.index)][static_cast<std::size_t>(d)];
  }
  for (const auto& idr : net.idrs()) out[modification_variable(idr.label)] = modified.contains(idr.label) ? 1 : 0;
  return out;
}

}  // namespace aeap
