#include "aeap/network.hpp"

#include <algorithm>
#include <cctype>

#include "aeap/errors.hpp"

namespace aeap {

Minterm::Minterm(std::vector<EntityId> literals) : literals_(std::move(literals)) {
  if (literals_.empty()) throw ValidationError("empty minterm");
  std::sort(literals_.begin(), literals_.end());
  if (std::adjacent_find(literals_.begin(), literals_.end()) != literals_.end()) {
    throw ValidationError("duplicate literal in minterm");
  }
  if (literals_.size() > 1 && literals_.back().is_always_alive()) {
    throw ValidationError("always-alive literal must form a minterm on its own");
  }
}

bool Minterm::contains(EntityId e) const {
  return std::binary_search(literals_.begin(), literals_.end(), e);
}

std::strong_ordering operator<=>(const Minterm& lhs, const Minterm& rhs) {
  if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(lhs.literals_.begin(), lhs.literals_.end(),
                                                rhs.literals_.begin(), rhs.literals_.end());
}

EntitySet Idr::entities() const {
  EntitySet out{target};
  for (const auto& m : minterms) {
    for (const auto& e : m.literals()) {
      if (!e.is_always_alive()) out.insert(e);
    }
  }
  return out;
}

Network::Network(std::vector<Rule> rules) {
  idrs_.reserve(rules.size());
  for (auto& rule : rules) {
    if (rule.target.is_always_alive()) throw ValidationError("the always-alive literal cannot be a target");
    if (!by_target_.emplace(rule.target, idrs_.size()).second) {
      throw ValidationError("duplicate rule for " + to_string(rule.target));
    }
    std::sort(rule.minterms.begin(), rule.minterms.end());
    if (std::adjacent_find(rule.minterms.begin(), rule.minterms.end()) != rule.minterms.end()) {
      throw ValidationError("duplicate minterm in rule for " + to_string(rule.target));
    }
    idrs_.push_back(Idr{rule.target, std::move(rule.minterms), static_cast<int>(idrs_.size()) + 1});
  }
  for (const auto& idr : idrs_) {
    for (const auto& m : idr.minterms) {
      for (const auto& e : m.literals()) {
        if (e == idr.target) throw ValidationError("rule for " + to_string(e) + " references itself");
        if (!e.is_always_alive() && !by_target_.contains(e)) {
          throw ValidationError("unknown entity " + to_string(e) + " in rule for " + to_string(idr.target));
        }
      }
    }
  }
  entities_.reserve(by_target_.size());
  for (const auto& [e, pos] : by_target_) entities_.push_back(e);
}

EntitySet Network::entities_a() const {
  EntitySet out;
  for (const auto& e : entities_) {
    if (e.side == Side::A) out.insert(e);
  }
  return out;
}

EntitySet Network::entities_b() const {
  EntitySet out;
  for (const auto& e : entities_) {
    if (e.side == Side::B) out.insert(e);
  }
  return out;
}

const Idr& Network::idr(int label) const {
  if (label < 1 || static_cast<std::size_t>(label) > idrs_.size()) {
    throw ValidationError("unknown IDR label " + std::to_string(label));
  }
  return idrs_[static_cast<std::size_t>(label) - 1];
}

const Idr& Network::idr_for(EntityId target) const {
  const auto it = by_target_.find(target);
  if (it == by_target_.end()) throw ValidationError("unknown entity " + to_string(target));
  return idrs_[it->second];
}

int Network::horizon() const { return entities_.empty() ? 0 : static_cast<int>(entities_.size()) - 1; }

std::vector<Rule> Network::rules() const {
  std::vector<Rule> out;
  out.reserve(idrs_.size());
  for (const auto& idr : idrs_) out.push_back(Rule{idr.target, idr.minterms});
  return out;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+') {
      out.push_back({line.substr(i, 1), i + 1});
      ++i;
    } else if (c == '<') {
      if (i + 1 >= line.size() || line[i + 1] != '-') throw ParseError("expected '<-'", line_no, i + 1);
      out.push_back({line.substr(i, 2), i + 1});
      i += 2;
    } else if (std::isalnum(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isalnum(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({line.substr(i, j - i), i + 1});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_no, i + 1);
    }
  }
  return out;
}

EntityId literal_at(const Token& tok, std::size_t line_no, bool allow_always_alive) {
  if (allow_always_alive && tok.text == "1") return EntityId::always_alive();
  try {
    return parse_entity(tok.text);
  } catch (const ValidationError&) {
    throw ParseError("invalid entity '" + std::string(tok.text) + "'", line_no, tok.column);
  }
}

struct ParsedLiteral {
  EntityId entity;
  std::size_t column;
};

struct ParsedRule {
  EntityId target;
  std::size_t line;
  std::size_t column;
  std::vector<std::vector<ParsedLiteral>> minterms;
};

}  // namespace

Network parse_network(std::string_view text) {
  std::vector<ParsedRule> parsed;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;

    const auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;

    ParsedRule rule{literal_at(tokens[0], line_no, false), line_no, tokens[0].column, {}};
    if (tokens.size() > 1) {
      if (tokens[1].text != "<-") throw ParseError("expected '<-'", line_no, tokens[1].column);
      if (tokens.size() == 2) throw ParseError("expected minterm after '<-'", line_no, line.size() + 1);
      std::vector<ParsedLiteral> current;
      for (std::size_t t = 2; t < tokens.size(); ++t) {
        const auto& tok = tokens[t];
        if (tok.text == "+") {
          if (current.empty()) throw ParseError("empty minterm", line_no, tok.column);
          rule.minterms.push_back(std::move(current));
          current.clear();
        } else if (tok.text == "<-") {
          throw ParseError("unexpected '<-'", line_no, tok.column);
        } else {
          current.push_back({literal_at(tok, line_no, true), tok.column});
        }
      }
      if (current.empty()) throw ParseError("expected minterm after '+'", line_no, line.size() + 1);
      rule.minterms.push_back(std::move(current));
    }
    parsed.push_back(std::move(rule));
  }

  // Cross-line checks first, so that positions can be reported.
  std::map<EntityId, std::size_t> declared;
  for (const auto& rule : parsed) {
    if (!declared.emplace(rule.target, rule.line).second) {
      throw ParseError("duplicate rule for " + to_string(rule.target) + " (first on line " +
                           std::to_string(declared[rule.target]) + ")",
                       rule.line, rule.column);
    }
  }
  std::vector<Rule> rules;
  rules.reserve(parsed.size());
  for (const auto& rule : parsed) {
    Rule out{rule.target, {}};
    for (const auto& minterm : rule.minterms) {
      std::vector<EntityId> literals;
      for (const auto& lit : minterm) {
        if (lit.entity == rule.target) {
          throw ParseError("target self-reference " + to_string(lit.entity), rule.line, lit.column);
        }
        if (!lit.entity.is_always_alive() && !declared.contains(lit.entity)) {
          throw ParseError("unknown entity " + to_string(lit.entity), rule.line, lit.column);
        }
        literals.push_back(lit.entity);
      }
      try {
        out.minterms.emplace_back(std::move(literals));
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), rule.line, minterm.front().column);
      }
    }
    auto sorted = out.minterms;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("duplicate minterm in rule for " + to_string(rule.target), rule.line, rule.column);
    }
    rules.push_back(std::move(out));
  }
  return Network(std::move(rules));
}

std::string format_network(const Network& net) {
  std::string out;
  for (const auto& idr : net.idrs()) {
    out += to_string(idr.target);
    for (std::size_t i = 0; i < idr.minterms.size(); ++i) {
      out += i == 0 ? " <- " : " + ";
      const auto& lits = idr.minterms[i].literals();
      for (std::size_t j = 0; j < lits.size(); ++j) {
        if (j > 0) out += ' ';
        out += to_string(lits[j]);
      }
    }
    out += '\n';
  }
  return out;
}

Network apply_modification(const Network& net, const Modification& mod) {
  const Idr& idr = net.idr(mod.idr_label);
  const auto& aux = mod.auxiliary;
  if (aux.is_always_alive()) {
    if (std::any_of(idr.minterms.begin(), idr.minterms.end(), [](const Minterm& m) { return m.is_always_alive(); })) {
      throw ValidationError("IDR of " + to_string(idr.target) + " already has an always-alive disjunct");
    }
  } else {
    if (aux == idr.target) throw ValidationError("auxiliary " + to_string(aux) + " is the IDR target");
    if (!net.contains(aux)) throw ValidationError("auxiliary " + to_string(aux) + " is not in the network");
    if (idr.entities().contains(aux)) {
      throw ValidationError("auxiliary " + to_string(aux) + " already appears in the IDR of " + to_string(idr.target));
    }
  }
  auto rules = net.rules();
  rules[static_cast<std::size_t>(mod.idr_label) - 1].minterms.push_back(Minterm{aux});
  return Network(std::move(rules));
}

Network apply_modifications(const Network& net, const std::vector<Modification>& mods) {
  Network out = net;
  for (const auto& mod : mods) out = apply_modification(out, mod);
  return out;
}

}  // namespace aeap
