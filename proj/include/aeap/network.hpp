#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aeap/entity.hpp"

namespace aeap {

/// A conjunction of entities. Literals are kept sorted and unique, so two
/// minterms compare equal regardless of the order they were written in.
class Minterm {
 public:
  /// Throws ValidationError on an empty literal list, duplicate literals, or an
  /// always-alive literal combined with anything else.
  explicit Minterm(std::vector<EntityId> literals);
  Minterm(std::initializer_list<EntityId> literals) : Minterm(std::vector<EntityId>(literals)) {}

  const std::vector<EntityId>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool contains(EntityId e) const;
  bool is_always_alive() const { return literals_.front().is_always_alive(); }

  /// Canonical order: by size, then lexicographically by literals.
  friend std::strong_ordering operator<=>(const Minterm& lhs, const Minterm& rhs);
  friend bool operator==(const Minterm&, const Minterm&) = default;

 private:
  std::vector<EntityId> literals_;
};

/// One dependency rule as written: target <- m1 + m2 + ...
/// An empty minterm list declares an entity with no dependency.
struct Rule {
  EntityId target;
  std::vector<Minterm> minterms;
};

/// A validated Inter-Dependency Relation with its 1-based label.
struct Idr {
  EntityId target;
  std::vector<Minterm> minterms;  // canonical order
  int label = 0;

  bool empty() const { return minterms.empty(); }
  /// E_D: the target plus every literal of every minterm.
  EntitySet entities() const;

  friend bool operator==(const Idr&, const Idr&) = default;
};

/// Interdependent network: entity sets A and B together with one IDR per
/// entity. Every entity owns exactly one IDR (possibly empty), so labels run
/// 1..P with P = |A| + |B|, in the order the rules were supplied.
///
/// Immutable after construction.
class Network {
 public:
  Network() = default;

  /// Validates and canonicalises the rules. Throws ValidationError on a
  /// duplicate target, a self-referencing rule, a duplicate minterm, or a
  /// literal that names no declared entity.
  explicit Network(std::vector<Rule> rules);

  /// All entities in canonical order.
  const std::vector<EntityId>& entities() const { return entities_; }
  EntitySet entities_a() const;
  EntitySet entities_b() const;
  std::size_t size() const { return entities_.size(); }
  bool contains(EntityId e) const { return by_target_.contains(e); }

  /// IDRs in label order.
  const std::vector<Idr>& idrs() const { return idrs_; }
  std::size_t idr_count() const { return idrs_.size(); }
  const Idr& idr(int label) const;
  const Idr& idr_for(EntityId target) const;
  int label_of(EntityId target) const { return idr_for(target).label; }

  /// |A| + |B| - 1, floored at zero.
  int horizon() const;

  /// Rules in label order, suitable for rebuilding a modified copy.
  std::vector<Rule> rules() const;

  friend bool operator==(const Network& lhs, const Network& rhs) { return lhs.idrs_ == rhs.idrs_; }

 private:
  std::vector<Idr> idrs_;
  std::vector<EntityId> entities_;
  std::map<EntityId, std::size_t> by_target_;
};

/// Adds a single-literal minterm holding `auxiliary` to the IDR `idr_label`.
/// `auxiliary` is either a concrete entity or EntityId::always_alive().
struct Modification {
  int idr_label = 0;
  EntityId auxiliary = EntityId::always_alive();

  friend bool operator==(const Modification&, const Modification&) = default;
};

/// Parses the line-oriented rule language:
///
///     a1 <- b1 + b2     # a1 works while b1 or b2 works
///     a2 <- b1 b2       # ... while both b1 and b2 work
///     a5                # no dependency
///
/// The literal `1` denotes an always-alive auxiliary and may only appear as a
/// minterm on its own. Labels follow line order.
Network parse_network(std::string_view text);

/// Canonical text: one line per IDR in label order, minterms sorted by
/// (size, literals), single spaces around "<-" and "+". Empty network gives "".
std::string format_network(const Network& net);

/// Returns a copy of `net` whose IDR gains one extra minterm {auxiliary}.
/// Throws ValidationError for an unknown label, an auxiliary that is the target,
/// already in E_D, or not an entity of the network, and for a second
/// always-alive disjunct on the same IDR.
Network apply_modification(const Network& net, const Modification& mod);

Network apply_modifications(const Network& net, const std::vector<Modification>& mods);

}  // namespace aeap
