#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "strata/sum.hpp"

namespace strata {

using BigInt = boost::multiprecision::cpp_int;

// n! / (k_1! ... k_n!). Throws BadComposition unless sum(k) = n.
BigInt multinomial(const Composition& k);

// <<n; k_1, ..., k_n>>, counted as |Slide^omega(k)| and memoized.
// Throws BadComposition unless sum(k) = n.
BigInt asym_multinomial(const Composition& k);

// Suffix sums k_n + ... + k_{n-i+1} >= i (resp. >= i - 1) for all i.
bool is_catalan(const Composition& k);
bool is_almost_catalan(const Composition& k);

// (2n-1)!! = (2n-1)(2n-3)...3.1; 1 for n <= 0.
BigInt double_factorial_odd(int n);

}  // namespace strata
