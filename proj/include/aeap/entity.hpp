#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace aeap {

/// Which infrastructure an entity belongs to. `AlwaysAlive` tags the synthetic
/// auxiliary literal that never fails; it is not a member of either network.
enum class Side : std::uint8_t { A, B, AlwaysAlive };

/// An entity of network A (e.g. power) or B (e.g. communication).
///
/// Canonical order is by side, then numeric index: a1 < a2 < a10 < b1.
struct EntityId {
  Side side = Side::A;
  std::uint32_t index = 0;

  static constexpr EntityId a(std::uint32_t i) { return {Side::A, i}; }
  static constexpr EntityId b(std::uint32_t i) { return {Side::B, i}; }
  static constexpr EntityId always_alive() { return {Side::AlwaysAlive, 0}; }

  constexpr bool is_always_alive() const { return side == Side::AlwaysAlive; }

  friend constexpr auto operator<=>(const EntityId&, const EntityId&) = default;
};

using EntitySet = std::set<EntityId>;

/// Canonical rendering: "a3", "b1"; the always-alive literal renders as "1".
std::string to_string(EntityId e);

/// Parses "a<k>" or "b<k>" with k a positive integer without leading zeros.
/// Throws ValidationError on anything else.
EntityId parse_entity(std::string_view text);

/// Parses a comma separated list such as "b2,b3". Empty text yields an empty set.
EntitySet parse_entity_list(std::string_view text);

std::string join(const EntitySet& set, std::string_view sep = ",");
std::vector<std::string> to_strings(const EntitySet& set);

}  // namespace aeap

template <>
struct std::hash<aeap::EntityId> {
  std::size_t operator()(const aeap::EntityId& e) const noexcept {
    return (static_cast<std::size_t>(e.side) << 32) ^ e.index;
  }
};
