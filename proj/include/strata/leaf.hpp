#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

// Leaves are indexed a=0, b=1, c=2, numeric i -> i+2, so index order is the
// label order a < b < c < 1 < 2 < ... < n.
class Leaf {
 public:
  static constexpr int kA = 0;
  static constexpr int kB = 1;
  static constexpr int kC = 2;

  constexpr Leaf() = default;
  static constexpr Leaf from_index(int index) { return Leaf(index); }
  static constexpr Leaf a() { return Leaf(kA); }
  static constexpr Leaf b() { return Leaf(kB); }
  static constexpr Leaf c() { return Leaf(kC); }
  static constexpr Leaf numbered(int i) { return Leaf(i + 2); }

  // Accepts "a", "b", "c" or a positive decimal integer.
  static Leaf parse(std::string_view text);

  constexpr int index() const { return index_; }
  constexpr bool is_numbered() const { return index_ > kC; }
  constexpr int number() const { return index_ - 2; }
  std::string to_string() const;

  constexpr auto operator<=>(const Leaf&) const = default;

 private:
  constexpr explicit Leaf(int index) : index_(index) {}
  int index_ = 0;
};

// Bitmask over leaf indices. 32 bits caps the leaf set at {a,b,c,1..29}.
using LeafSet = std::uint32_t;
inline constexpr int kMaxLeaves = 32;
inline constexpr int kMaxN = kMaxLeaves - 3;

constexpr LeafSet bit(int index) { return LeafSet{1} << index; }
constexpr LeafSet bit(Leaf leaf) { return bit(leaf.index()); }
constexpr bool contains(LeafSet set, int index) { return (set >> index) & 1U; }
constexpr bool contains(LeafSet set, Leaf leaf) { return contains(set, leaf.index()); }
constexpr int size_of(LeafSet set) { return std::popcount(set); }
constexpr bool is_subset(LeafSet inner, LeafSet outer) { return (inner & ~outer) == 0; }
// Smallest leaf index in a nonempty set.
constexpr int min_index(LeafSet set) { return std::countr_zero(set); }

// {a, b, c, 1, ..., n}
constexpr LeafSet leaves_of(int n) {
  const int count = n + 3;
  return count >= kMaxLeaves ? ~LeafSet{0} : (LeafSet{1} << count) - 1;
}

// Order on leaf sets: lexicographic on their ascending label lists.
constexpr bool lex_less(LeafSet lhs, LeafSet rhs) {
  if (lhs == rhs) return false;
  const LeafSet diff = lhs ^ rhs;
  const int d = std::countr_zero(diff);
  const LeafSet above = ~((LeafSet{2} << d) - 1);
  if (contains(lhs, d)) {
    // lhs continues with d; rhs either continues with something larger or ends.
    return (rhs & above) != 0;
  }
  return (lhs & above) == 0;
}

std::vector<Leaf> members(LeafSet set);
std::string set_to_string(LeafSet set);

}  // namespace strata
