#pragma once

#include "strata/sum.hpp"

namespace strata {

// kappa_i on M_{0,n+3}: trees of Slide^psi(0^n, i+1) whose leaf n+1 sits at a
// trivalent vertex, pushed forward by forgetting n+1. Throws BadDegree unless
// 0 <= i <= n.
StrataSum kappa_expansion(int n, int i);

// The same class from Slide^psi(0^n, i), each tree weighted by
// deg(v_{n+1}) - 3 before forgetting n+1.
StrataSum kappa_expansion_via_degrees(int n, int i);

// R_{n;r} for r = (r_1, ..., r_m): trees of Slide^psi(0^n, r) surviving the
// trivalence test at n+m, n+m-1, ..., n+1 as those leaves are forgotten one at
// a time. Throws BadComposition unless m >= 1, every r_j >= 0 and
// sum(r) - m <= n.
StrataSum generalized_kappa(int n, const Composition& r);

}  // namespace strata
