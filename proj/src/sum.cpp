#include "strata/sum.hpp"

#include <charconv>
#include <numeric>

#include "strata/error.hpp"

namespace strata {

int total(const Composition& k) { return std::accumulate(k.begin(), k.end(), 0); }

void check_composition(const Composition& k) {
  if (static_cast<int>(k.size()) > kMaxN) {
    throw StrataError(ErrorCode::BoundExceeded, "composition longer than " + std::to_string(kMaxN));
  }
  for (int part : k) {
    if (part < 0) throw StrataError(ErrorCode::BadComposition, "negative part in " + composition_to_string(k));
  }
  if (total(k) > static_cast<int>(k.size())) {
    throw StrataError(ErrorCode::BadComposition,
                      "sum of " + composition_to_string(k) + " exceeds n=" + std::to_string(k.size()));
  }
}

Composition parse_composition(std::string_view text) {
  Composition out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw StrataError(ErrorCode::ParseError, "bad composition '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string composition_to_string(const Composition& k) {
  std::string out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(k[i]);
  }
  return out;
}

std::vector<Composition> weak_compositions(int sum, int parts) {
  std::vector<Composition> out;
  if (parts == 0) {
    if (sum == 0) out.emplace_back();
    return out;
  }
  Composition current(parts, 0);
  // Odometer over the first parts-1 entries; the last takes the remainder.
  auto fill = [&](auto&& self, int index, int left) -> void {
    if (index == parts - 1) {
      current[index] = left;
      out.push_back(current);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      current[index] = v;
      self(self, index + 1, left - v);
    }
  };
  fill(fill, 0, sum);
  return out;
}

std::string_view to_string(Flavor flavor) { return flavor == Flavor::Psi ? "psi" : "omega"; }

Flavor parse_flavor(std::string_view text) {
  if (text == "psi") return Flavor::Psi;
  if (text == "omega") return Flavor::Omega;
  throw StrataError(ErrorCode::ParseError, "flavor must be psi or omega, got '" + std::string(text) + "'");
}

void StrataSum::add(const StableTree& tree, std::int64_t mult) {
  if (tree.n() != n_) {
    throw StrataError(ErrorCode::BadLeaf, "tree on n=" + std::to_string(tree.n()) + " added to a sum on n=" +
                                              std::to_string(n_));
  }
  if (mult == 0) return;
  auto& slot = terms_[tree];
  slot += mult;
  if (slot == 0) terms_.erase(tree);
}

void StrataSum::merge(const StrataSum& other) {
  for (const auto& [tree, mult] : other.terms_) add(tree, mult);
}

std::int64_t StrataSum::multiplicity(const StableTree& tree) const {
  auto it = terms_.find(tree);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t StrataSum::total_multiplicity() const {
  std::int64_t sum = 0;
  for (const auto& [tree, mult] : terms_) sum += mult;
  return sum;
}

bool StrataSum::multiplicity_free() const {
  for (const auto& [tree, mult] : terms_) {
    if (mult != 1) return false;
  }
  return true;
}

bool StrataSum::is_subset_of(const StrataSum& other) const {
  for (const auto& [tree, mult] : terms_) {
    if (!other.contains(tree)) return false;
  }
  return true;
}

std::vector<StableTree> StrataSum::trees() const {
  std::vector<StableTree> out;
  out.reserve(terms_.size());
  for (const auto& [tree, mult] : terms_) out.push_back(tree);
  return out;
}

}  // namespace strata
