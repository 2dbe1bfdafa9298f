#pragma once

#include <cstdint>
#include <vector>

#include "strata/slide.hpp"
#include "strata/tree.hpp"

namespace strata {

// One-line notation, values 1..n.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& w);

// No i + 1 < j with w[j] < w[i] < w[i+1] (1-based). Throws BadComposition if
// `w` is not a permutation.
bool avoids_231_dash(const Permutation& w);

// Every 23-1 avoider of length n, in lexicographic order.
std::vector<Permutation> avoiders_231_dash(int n);

// Internal vertices of a caterpillar with the a,b cherry at the left end,
// listed left to right by clade.
std::vector<LeafSet> caterpillar_spine(const StableTree& tree);

// Edge labels of the omega (1,...,1) slide labeling, read left to right.
// Throws NotCaterpillar or NoValidLabeling.
Permutation reading_word(const StableTree& tree);

// The caterpillar T_w. Throws PatternViolation unless w avoids 23-1.
StableTree leaf_labeling(const Permutation& w);

// Word with k_i copies of i built along the slide history: each i-slide
// inserts i at the position of v_i among the internal vertices of the tree it
// acts on, ordered by smallest leaf below, ties putting the vertex nearer to a
// later.
std::vector<int> word_encode_psi(const TracedTree& traced);

// Bell number via the Bell triangle. Throws BoundExceeded past n = 25.
std::uint64_t bell(int n);

}  // namespace strata
