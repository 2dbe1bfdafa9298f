#include "strata/leaf.hpp"

#include <charconv>

#include "strata/error.hpp"

namespace strata {

Leaf Leaf::parse(std::string_view text) {
  if (text == "a") return a();
  if (text == "b") return b();
  if (text == "c") return c();
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || value < 1 || value > kMaxN) {
    throw StrataError(ErrorCode::ParseError, "bad leaf label '" + std::string(text) + "'");
  }
  return numbered(value);
}

std::string Leaf::to_string() const {
  switch (index_) {
    case kA: return "a";
    case kB: return "b";
    case kC: return "c";
    default: return std::to_string(number());
  }
}

std::vector<Leaf> members(LeafSet set) {
  std::vector<Leaf> out;
  for (; set != 0; set &= set - 1) out.push_back(Leaf::from_index(min_index(set)));
  return out;
}

std::string set_to_string(LeafSet set) {
  // Multi-digit labels are comma separated so that the string stays readable.
  bool wide = false;
  for (Leaf leaf : members(set)) wide |= leaf.is_numbered() && leaf.number() >= 10;
  std::string out;
  for (Leaf leaf : members(set)) {
    if (wide && !out.empty()) out += ',';
    out += leaf.to_string();
  }
  return out;
}

}  // namespace strata
