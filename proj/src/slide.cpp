#include "strata/slide.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "strata/error.hpp"

namespace strata {

namespace {

using Owed = std::vector<int>;

void require_leaf(const StableTree& tree, int i) {
  if (i < 1 || i > tree.n()) {
    throw StrataError(ErrorCode::BadLeaf, "leaf " + std::to_string(i) + " not in a tree on n=" + std::to_string(tree.n()));
  }
}

// Every way of splitting v_i so that the branch holding `m` goes with a.
std::vector<StableTree> slide_away(const StableTree& tree, int i, Leaf m) {
  const LeafSet self = bit(Leaf::numbered(i));
  const LeafSet clade = tree.clade_at(Leaf::numbered(i));
  std::vector<LeafSet> movable;
  for (LeafSet child : tree.children_of(clade)) {
    if (child != self && !contains(child, m)) movable.push_back(child);
  }
  std::vector<StableTree> out;
  const std::uint32_t choices = std::uint32_t{1} << movable.size();
  out.reserve(choices);
  for (std::uint32_t pick = 1; pick < choices; ++pick) {
    LeafSet stay = self;
    for (std::size_t b = 0; b < movable.size(); ++b) {
      if ((pick >> b) & 1U) stay |= movable[b];
    }
    std::vector<LeafSet> splits = tree.splits();
    splits.push_back(stay);
    out.push_back(make_unchecked(tree.n(), std::move(splits)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class TreeSet {
 public:
  // Returns false on a repeat.
  bool insert(StableTree tree) {
    if (!seen_.insert(tree).second) return false;
    items_.push_back(std::move(tree));
    return true;
  }
  std::vector<StableTree>& items() { return items_; }

 private:
  std::unordered_set<StableTree, StableTreeHash> seen_;
  std::vector<StableTree> items_;
};

void apply_slides(std::vector<StableTree>& current, int i, int count, Owed& owed, bool prune) {
  for (int step = 0; step < count; ++step) {
    --owed[Leaf::numbered(i).index()];
    TreeSet next;
    for (const StableTree& tree : current) {
      for (StableTree& result : slide_i(tree, i)) {
        if (prune && !vertices_can_absorb(result, owed)) continue;
        if (!next.insert(std::move(result))) {
          throw std::logic_error("slide generation produced a repeated tree");
        }
      }
    }
    current = std::move(next.items());
  }
}

StrataSum to_sum(int n, const std::vector<StableTree>& trees) {
  StrataSum sum(n);
  for (const StableTree& tree : trees) sum.add(tree);
  return sum;
}

}  // namespace

bool vertices_can_absorb(const StableTree& tree, const std::vector<int>& owed) {
  std::vector<std::pair<LeafSet, int>> load;
  for (std::size_t index = 0; index < owed.size(); ++index) {
    if (owed[index] == 0 || static_cast<int>(index) >= tree.leaf_count()) continue;
    const LeafSet clade = tree.clade_at(Leaf::from_index(static_cast<int>(index)));
    auto it = std::find_if(load.begin(), load.end(), [&](const auto& entry) { return entry.first == clade; });
    if (it == load.end()) {
      load.emplace_back(clade, owed[index]);
    } else {
      it->second += owed[index];
    }
  }
  for (const auto& [clade, need] : load) {
    if (tree.degree_of(clade) - 3 < need) return false;
  }
  return true;
}

PriorityOrder default_priority(int i, int n) {
  PriorityOrder order{Leaf::b(), Leaf::c()};
  for (int j = 1; j <= n; ++j) {
    if (j != i) order.push_back(Leaf::numbered(j));
  }
  return order;
}

Leaf i_minimal_point(const StableTree& tree, int i) {
  require_leaf(tree, i);
  const Leaf leaf = Leaf::numbered(i);
  return Leaf::from_index(min_index(tree.clade_at(leaf) & ~bit(leaf)));
}

std::vector<StableTree> slide_i(const StableTree& tree, int i) {
  return slide_away(tree, i, i_minimal_point(tree, i));
}

std::vector<StableTree> generalized_slide(const StableTree& tree, int i, const PriorityOrder& priority) {
  require_leaf(tree, i);
  if (priority.empty()) throw StrataError(ErrorCode::BadLeaf, "empty priority order");
  LeafSet listed = 0;
  for (Leaf leaf : priority) {
    if (!tree.has_leaf(leaf) || leaf == Leaf::a() || leaf == Leaf::numbered(i) || contains(listed, leaf)) {
      throw StrataError(ErrorCode::BadLeaf, "bad priority entry " + leaf.to_string());
    }
    listed |= bit(leaf);
  }
  const LeafSet off_a = tree.clade_at(Leaf::numbered(i)) & ~bit(Leaf::numbered(i));
  for (Leaf leaf : priority) {
    if (contains(off_a, leaf)) return slide_away(tree, i, leaf);
  }
  return {};
}

StrataSum slide_set_psi(const Composition& k, SlideOptions options) {
  check_composition(k);
  const int n = static_cast<int>(k.size());
  Owed owed(n + 3, 0);
  for (int i = 1; i <= n; ++i) owed[Leaf::numbered(i).index()] = k[i - 1];
  std::vector<StableTree> current{StableTree::interior(n)};
  for (int i = 1; i <= n; ++i) apply_slides(current, i, k[i - 1], owed, options.prune);
  return to_sum(n, current);
}

StrataSum slide_set_omega(const Composition& k, SlideOptions options) {
  check_composition(k);
  const int n = static_cast<int>(k.size());
  Owed owed(n + 3, 0);
  std::vector<StableTree> current{StableTree::interior(0)};
  for (int i = 1; i <= n; ++i) {
    owed[Leaf::numbered(i).index()] = k[i - 1];
    TreeSet inserted;
    for (const StableTree& tree : current) {
      for (StableTree& grown : insert_leaf(tree, Leaf::numbered(i))) {
        if (options.prune && !vertices_can_absorb(grown, owed)) continue;
        inserted.insert(std::move(grown));
      }
    }
    current = std::move(inserted.items());
    apply_slides(current, i, k[i - 1], owed, options.prune);
  }
  return to_sum(n, current);
}

StrataSum slide_set(const Composition& k, Flavor flavor, SlideOptions options) {
  return flavor == Flavor::Psi ? slide_set_psi(k, options) : slide_set_omega(k, options);
}

StrataSum slide_word(const std::vector<int>& word, int n) {
  if (n < 0 || n > kMaxN) throw StrataError(ErrorCode::BadComposition, "bad n");
  if (static_cast<int>(word.size()) > n) {
    throw StrataError(ErrorCode::BadComposition, "word longer than n");
  }
  Owed owed(n + 3, 0);
  for (int letter : word) {
    if (letter < 1 || letter > n) throw StrataError(ErrorCode::BadComposition, "letter out of range");
    ++owed[Leaf::numbered(letter).index()];
  }
  std::vector<StableTree> current{StableTree::interior(n)};
  for (int letter : word) apply_slides(current, letter, 1, owed, true);
  return to_sum(n, current);
}

std::vector<TracedTree> slide_set_psi_traced(const Composition& k) {
  check_composition(k);
  const int n = static_cast<int>(k.size());
  std::vector<TracedTree> current{TracedTree{StableTree::interior(n), {}}};
  for (int i = 1; i <= n; ++i) {
    for (int step = 0; step < k[i - 1]; ++step) {
      std::vector<TracedTree> next;
      for (const TracedTree& traced : current) {
        for (StableTree& result : slide_i(traced.tree, i)) {
          TracedTree grown{result, traced.history};
          grown.history.push_back(SlideStep{i, traced.tree, std::move(result)});
          next.push_back(std::move(grown));
        }
      }
      current = std::move(next);
    }
  }
  std::sort(current.begin(), current.end(), [](const TracedTree& x, const TracedTree& y) { return x.tree < y.tree; });
  return current;
}

LabelingOutcome verify_labeling(const StableTree& tree, const Composition& k, Flavor flavor) {
  if (static_cast<int>(k.size()) != tree.n()) {
    throw StrataError(ErrorCode::BadComposition, "composition length differs from n");
  }
  check_composition(k);
  const int needed = total(k);
  if (needed != tree.codim()) {
    return LabelingRejection{0, 0, "tree has " + std::to_string(tree.codim()) + " edges but k asks for " +
                                       std::to_string(needed)};
  }
  const std::vector<LeafSet>& splits = tree.splits();
  std::vector<bool> labeled(splits.size(), false);
  const LeafSet root = tree.root_clade();

  // Smallest still-uncontracted clade strictly containing `inner` (or the
  // root clade when none is left).
  auto enclosing = [&](LeafSet inner, bool strict) {
    LeafSet best = root;
    for (std::size_t s = 0; s < splits.size(); ++s) {
      if (labeled[s] || !is_subset(inner, splits[s]) || (strict && splits[s] == inner)) continue;
      if (size_of(splits[s]) < size_of(best)) best = splits[s];
    }
    return best;
  };

  SlideLabeling result{tree, {}};
  int done = 0;
  for (int ell = tree.n(); ell >= 1; --ell) {
    const Leaf leaf = Leaf::numbered(ell);
    for (int copy = 0; copy < k[ell - 1]; ++copy) {
      const LeafSet here = enclosing(bit(leaf), false);
      if (here == root) {
        return LabelingRejection{ell, done, "leaf " + std::to_string(ell) + " already sits next to a"};
      }
      const LeafSet parent = enclosing(here, true);
      const int m_here = min_index(here & ~bit(leaf));
      const int m_parent = min_index(parent & ~here);
      const bool ok = flavor == Flavor::Psi ? m_here > m_parent : (leaf.index() > m_here && m_here > m_parent);
      if (!ok) {
        return LabelingRejection{ell, done,
                                 "minima " + Leaf::from_index(m_here).to_string() + " vs " +
                                     Leaf::from_index(m_parent).to_string() + " fail the " +
                                     std::string(to_string(flavor)) + " condition"};
      }
      const auto pos = std::find(splits.begin(), splits.end(), here) - splits.begin();
      labeled[pos] = true;
      result.edge_labels.emplace(here, ell);
      ++done;
    }
  }
  return result;
}

bool admits_labeling(const StableTree& tree, const Composition& k, Flavor flavor) {
  return std::holds_alternative<SlideLabeling>(verify_labeling(tree, k, flavor));
}

}  // namespace strata
