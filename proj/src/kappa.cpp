#include "strata/kappa.hpp"

#include "strata/error.hpp"
#include "strata/slide.hpp"

namespace strata {

namespace {

void check_degree(int n, int i) {
  if (n < 0 || i < 0 || i > n) {
    throw StrataError(ErrorCode::BadDegree, "kappa_" + std::to_string(i) + " on n=" + std::to_string(n));
  }
}

Composition padded(int n, const Composition& tail) {
  Composition k(n, 0);
  k.insert(k.end(), tail.begin(), tail.end());
  return k;
}

}  // namespace

StrataSum kappa_expansion(int n, int i) {
  check_degree(n, i);
  const Leaf extra = Leaf::numbered(n + 1);
  StrataSum out(n);
  const StrataSum slides = slide_set_psi(padded(n, {i + 1}));
  for (const auto& [tree, mult] : slides.terms()) {
    if (tree.degree_at(extra) == 3) out.add(forget_leaf(tree, extra), mult);
  }
  return out;
}

StrataSum kappa_expansion_via_degrees(int n, int i) {
  check_degree(n, i);
  const Leaf extra = Leaf::numbered(n + 1);
  StrataSum out(n);
  const StrataSum slides = slide_set_psi(padded(n, {i}));
  for (const auto& [tree, mult] : slides.terms()) {
    const int weight = tree.degree_at(extra) - 3;
    if (weight > 0) out.add(forget_leaf(tree, extra), mult * weight);
  }
  return out;
}

StrataSum generalized_kappa(int n, const Composition& r) {
  const int m = static_cast<int>(r.size());
  if (n < 0 || m == 0) throw StrataError(ErrorCode::BadComposition, "generalized kappa needs n >= 0 and m >= 1");
  for (int part : r) {
    if (part < 0) throw StrataError(ErrorCode::BadComposition, "negative exponent");
  }
  if (total(r) - m > n) throw StrataError(ErrorCode::BadComposition, "sum(r) - m exceeds n");
  StrataSum out(n);
  const StrataSum slides = slide_set_psi(padded(n, r));
  for (const auto& [tree, mult] : slides.terms()) {
    StableTree current = tree;
    bool survives = true;
    for (int j = n + m; j > n && survives; --j) {
      if (current.degree_at(Leaf::numbered(j)) != 3) {
        survives = false;
      } else {
        current = forget_leaf(current, Leaf::numbered(j));
      }
    }
    if (survives) out.add(current, mult);
  }
  return out;
}

}  // namespace strata
