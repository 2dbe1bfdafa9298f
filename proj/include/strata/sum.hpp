#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "strata/tree.hpp"

namespace strata {

// Weak composition k = (k_1, ..., k_n); its length is the ambient n.
using Composition = std::vector<int>;

int total(const Composition& k);
// Throws BadComposition unless every part is >= 0 and the sum is <= length.
void check_composition(const Composition& k);
// "1,0,2" -> {1,0,2}. Throws ParseError.
Composition parse_composition(std::string_view text);
std::string composition_to_string(const Composition& k);

// All weak compositions of `sum` into `parts` parts, in lexicographic order.
std::vector<Composition> weak_compositions(int sum, int parts);

enum class Flavor { Psi, Omega };
std::string_view to_string(Flavor flavor);
Flavor parse_flavor(std::string_view text);

// Formal sum of boundary strata with positive integer multiplicities.
class StrataSum {
 public:
  explicit StrataSum(int n = 0) : n_(n) {}

  int n() const { return n_; }
  // Throws BadLeaf when the tree lives on a different leaf set.
  void add(const StableTree& tree, std::int64_t mult = 1);
  void merge(const StrataSum& other);

  std::int64_t multiplicity(const StableTree& tree) const;
  bool contains(const StableTree& tree) const { return terms_.count(tree) != 0; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::int64_t total_multiplicity() const;
  bool multiplicity_free() const;
  bool is_subset_of(const StrataSum& other) const;

  // Canonically ordered.
  const std::map<StableTree, std::int64_t>& terms() const { return terms_; }
  std::vector<StableTree> trees() const;

  friend bool operator==(const StrataSum&, const StrataSum&) = default;

 private:
  int n_;
  std::map<StableTree, std::int64_t> terms_;
};

}  // namespace strata
