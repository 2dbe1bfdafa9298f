#include "strata/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "strata/error.hpp"

namespace strata {

bool is_permutation(const Permutation& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int value : w) {
    if (value < 1 || value > static_cast<int>(w.size()) || seen[value]) return false;
    seen[value] = true;
  }
  return true;
}

namespace {

void require_permutation(const Permutation& w) {
  if (!is_permutation(w)) throw StrataError(ErrorCode::BadComposition, "not a permutation");
}

}  // namespace

bool avoids_231_dash(const Permutation& w) {
  require_permutation(w);
  // For each adjacent ascent w[i] < w[i+1], look for a later value below w[i].
  // Scanning from the right, the running minimum of w[i+2..] suffices.
  const int len = static_cast<int>(w.size());
  int suffix_min = len + 1;
  for (int i = len - 3; i >= 0; --i) {
    suffix_min = std::min(suffix_min, w[i + 2]);
    if (w[i] < w[i + 1] && suffix_min < w[i]) return false;
  }
  return true;
}

std::vector<Permutation> avoiders_231_dash(int n) {
  if (n < 0) throw StrataError(ErrorCode::BadComposition, "negative length");
  if (n > 12) throw StrataError(ErrorCode::BoundExceeded, "avoider enumeration capped at n = 12");
  Permutation w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    if (avoids_231_dash(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<LeafSet> caterpillar_spine(const StableTree& tree) {
  if (!tree.is_trivalent() || !tree.is_caterpillar()) {
    throw StrataError(ErrorCode::NotCaterpillar, "internal vertices do not form a trivalent path");
  }
  const LeafSet root = tree.root_clade();
  const std::vector<LeafSet> top = tree.children_of(root);
  if (std::find(top.begin(), top.end(), bit(Leaf::kB)) == top.end()) {
    throw StrataError(ErrorCode::NotCaterpillar, "a and b do not form a cherry");
  }
  std::vector<LeafSet> spine{root};
  std::vector<LeafSet> splits = tree.splits();
  std::sort(splits.begin(), splits.end(), [](LeafSet x, LeafSet y) { return size_of(x) > size_of(y); });
  spine.insert(spine.end(), splits.begin(), splits.end());
  for (std::size_t p = 1; p < spine.size(); ++p) {
    if (!is_subset(spine[p], spine[p - 1])) throw std::logic_error("caterpillar splits are not nested");
  }
  return spine;
}

Permutation reading_word(const StableTree& tree) {
  const std::vector<LeafSet> spine = caterpillar_spine(tree);
  const LabelingOutcome outcome = verify_labeling(tree, Composition(tree.n(), 1), Flavor::Omega);
  const auto* labeling = std::get_if<SlideLabeling>(&outcome);
  if (!labeling) {
    throw StrataError(ErrorCode::NoValidLabeling, std::get<LabelingRejection>(outcome).reason);
  }
  Permutation word;
  for (std::size_t p = 1; p < spine.size(); ++p) word.push_back(labeling->edge_labels.at(spine[p]));
  return word;
}

StableTree leaf_labeling(const Permutation& w) {
  require_permutation(w);
  const int n = static_cast<int>(w.size());
  if (n > kMaxN) throw StrataError(ErrorCode::BoundExceeded, "word too long");
  if (!avoids_231_dash(w)) throw StrataError(ErrorCode::PatternViolation, "word contains 23-1");

  // Slots 1..n+1: slot p < n hangs off the vertex right of edge p, slots n and
  // n+1 share the last vertex. 0 marks an unlabeled slot.
  std::vector<int> slot(n + 2, 0);
  std::vector<int> edge_of(n + 1, 0);
  for (int p = 1; p <= n; ++p) edge_of[w[p - 1]] = p;

  for (int value = n; value >= 1; --value) {
    const int p = edge_of[value];
    if (p < n && w[p] < value) {
      if (slot[p] != 0) throw std::logic_error("case 1 leaf already labeled");
      slot[p] = value;
      continue;
    }
    int open = 0;
    int rightmost = 0;
    for (int q = p; q <= n + 1; ++q) {
      if (slot[q] == 0) {
        ++open;
        rightmost = q;
      }
    }
    if (open != 2 || slot[p] != 0) {
      throw std::logic_error("case 2 expected two open leaves right of edge " + std::to_string(value));
    }
    slot[rightmost] = value;
  }

  std::vector<LeafSet> splits;
  LeafSet side = 0;
  for (int q = n + 1; q >= 1; --q) {
    side |= slot[q] == 0 ? bit(Leaf::kC) : bit(Leaf::numbered(slot[q]));
    if (q <= n) splits.push_back(side);
  }
  return make_unchecked(n, std::move(splits));
}

namespace {

// 1-based position of v_i among the internal vertices.
int vertex_rank(const StableTree& tree, int i) {
  std::vector<LeafSet> clades = tree.vertex_clades();
  std::sort(clades.begin(), clades.end(), [](LeafSet x, LeafSet y) {
    if (min_index(x) != min_index(y)) return min_index(x) < min_index(y);
    return size_of(x) < size_of(y);
  });
  const LeafSet target = tree.clade_at(Leaf::numbered(i));
  return static_cast<int>(std::find(clades.begin(), clades.end(), target) - clades.begin()) + 1;
}

}  // namespace

std::vector<int> word_encode_psi(const TracedTree& traced) {
  std::vector<int> word;
  for (const SlideStep& step : traced.history) {
    const int position = vertex_rank(step.before, step.leaf);
    if (position > static_cast<int>(word.size()) + 1) {
      throw std::logic_error("insertion position past the end of the word");
    }
    word.insert(word.begin() + (position - 1), step.leaf);
  }
  return word;
}

std::uint64_t bell(int n) {
  if (n < 0) throw StrataError(ErrorCode::BadComposition, "negative n");
  if (n > 25) throw StrataError(ErrorCode::BoundExceeded, "bell(n) overflows 64 bits past n = 25");
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t value : row) next.push_back(next.back() + value);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace strata
