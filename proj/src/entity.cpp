#include "aeap/entity.hpp"

#include <charconv>

#include "aeap/errors.hpp"

namespace aeap {

std::string to_string(EntityId e) {
  switch (e.side) {
    case Side::A:
      return "a" + std::to_string(e.index);
    case Side::B:
      return "b" + std::to_string(e.index);
    case Side::AlwaysAlive:
      break;
  }
  return "1";
}

EntityId parse_entity(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'a' && text[0] != 'b') || text[1] < '1' || text[1] > '9') {
    throw ValidationError("invalid entity '" + std::string(text) + "'");
  }
  std::uint32_t index = 0;
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ValidationError("invalid entity '" + std::string(text) + "'");
  }
  return text[0] == 'a' ? EntityId::a(index) : EntityId::b(index);
}

EntitySet parse_entity_list(std::string_view text) {
  EntitySet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto item = text.substr(pos, next - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.insert(parse_entity(item));
    pos = next + 1;
  }
  return out;
}

std::string join(const EntitySet& set, std::string_view sep) {
  std::string out;
  for (const auto& e : set) {
    if (!out.empty()) out += sep;
    out += to_string(e);
  }
  return out;
}

std::vector<std::string> to_strings(const EntitySet& set) {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (const auto& e : set) out.push_back(to_string(e));
  return out;
}

}  // namespace aeap
