#include "strata/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "strata/error.hpp"

namespace strata {

namespace {

void sort_canonical(std::vector<LeafSet>& splits) {
  std::sort(splits.begin(), splits.end(), lex_less);
}

bool compatible(LeafSet x, LeafSet y) {
  return is_subset(x, y) || is_subset(y, x) || (x & y) == 0;
}

void check_bound(int n, int max_n) {
  if (n < 0) throw StrataError(ErrorCode::BadComposition, "negative n");
  if (n > max_n || n > kMaxN) {
    throw StrataError(ErrorCode::BoundExceeded,
                      "n=" + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
  }
}

}  // namespace

StableTree make_unchecked(int n, std::vector<LeafSet> splits) {
  sort_canonical(splits);
  return StableTree(n, std::move(splits));
}

StableTree StableTree::interior(int n) {
  if (n < 0 || n > kMaxN) throw StrataError(ErrorCode::BadLeaf, "n out of range");
  return StableTree(n, {});
}

StableTree StableTree::from_splits(int n, std::span<const LeafSet> sides) {
  if (n < 0 || n > kMaxN) throw StrataError(ErrorCode::BadLeaf, "n out of range");
  const LeafSet universe = leaves_of(n);
  const LeafSet non_a = universe & ~bit(Leaf::kA);
  std::vector<LeafSet> splits(sides.begin(), sides.end());
  for (LeafSet side : splits) {
    if ((side & ~universe) != 0) {
      throw StrataError(ErrorCode::BadLeaf, "split " + set_to_string(side) + " uses a leaf outside the leaf set");
    }
    if (contains(side, Leaf::kA)) {
      throw StrataError(ErrorCode::BadLeaf, "split " + set_to_string(side) + " contains a");
    }
    // A one-leaf side, or one whose complement is {a}, reconstructs with a
    // degree-2 vertex.
    if (size_of(side) < 2 || side == non_a) {
      throw StrataError(ErrorCode::UnstableTree, "split " + set_to_string(side) + " leaves a degree-2 vertex");
    }
  }
  sort_canonical(splits);
  if (std::adjacent_find(splits.begin(), splits.end()) != splits.end()) {
    throw StrataError(ErrorCode::UnstableTree, "repeated split creates a degree-2 vertex");
  }
  for (std::size_t i = 0; i < splits.size(); ++i) {
    for (std::size_t j = i + 1; j < splits.size(); ++j) {
      if (!compatible(splits[i], splits[j])) {
        throw StrataError(ErrorCode::IncompatibleSplits,
                          set_to_string(splits[i]) + " and " + set_to_string(splits[j]) + " cross");
      }
    }
  }
  return StableTree(n, std::move(splits));
}

bool StableTree::has_split(LeafSet side) const {
  return std::binary_search(splits_.begin(), splits_.end(), side, lex_less);
}

std::vector<LeafSet> StableTree::vertex_clades() const {
  std::vector<LeafSet> clades;
  clades.reserve(splits_.size() + 1);
  clades.push_back(root_clade());
  clades.insert(clades.end(), splits_.begin(), splits_.end());
  return clades;
}

LeafSet StableTree::clade_at(Leaf leaf) const {
  LeafSet best = root_clade();
  if (leaf.index() == Leaf::kA) return best;
  for (LeafSet side : splits_) {
    if (contains(side, leaf) && size_of(side) < size_of(best)) best = side;
  }
  return best;
}

std::vector<LeafSet> StableTree::children_of(LeafSet clade) const {
  std::vector<LeafSet> inside;
  for (LeafSet side : splits_) {
    if (side != clade && is_subset(side, clade)) inside.push_back(side);
  }
  std::sort(inside.begin(), inside.end(),
            [](LeafSet x, LeafSet y) { return size_of(x) > size_of(y); });
  std::vector<LeafSet> children;
  LeafSet covered = 0;
  for (LeafSet side : inside) {
    if ((side & covered) == 0) {
      children.push_back(side);
      covered |= side;
    }
  }
  for (LeafSet rest = clade & ~covered; rest != 0; rest &= rest - 1) {
    children.push_back(rest & (~rest + 1));
  }
  return children;
}

int StableTree::degree_of(LeafSet clade) const {
  return static_cast<int>(children_of(clade).size()) + 1;
}

bool StableTree::is_caterpillar() const {
  // A tree is a path iff every internal vertex has at most two internal
  // neighbours.
  for (LeafSet clade : vertex_clades()) {
    int internal_neighbours = clade == root_clade() ? 0 : 1;
    for (LeafSet child : children_of(clade)) {
      if (size_of(child) >= 2) ++internal_neighbours;
    }
    if (internal_neighbours > 2) return false;
  }
  return true;
}

bool operator<(const StableTree& lhs, const StableTree& rhs) {
  if (lhs.n_ != rhs.n_) return lhs.n_ < rhs.n_;
  return std::lexicographical_compare(lhs.splits_.begin(), lhs.splits_.end(), rhs.splits_.begin(),
                                      rhs.splits_.end(), lex_less);
}

std::size_t StableTree::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9E3779B97F4A7C15ULL;
  for (LeafSet side : splits_) {
    h ^= side + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int default_max_n() {
  if (const char* env = std::getenv("STRATA_MAX_N")) {
    try {
      const int value = std::stoi(env);
      if (value >= 0) return std::min(value, kMaxN);
    } catch (const std::exception&) {
    }
  }
  return 7;
}

StableTree contract_split(const StableTree& tree, LeafSet side) {
  if (!tree.has_split(side)) {
    throw StrataError(ErrorCode::NoSuchSplit, set_to_string(side));
  }
  std::vector<LeafSet> rest;
  rest.reserve(tree.splits().size() - 1);
  for (LeafSet s : tree.splits()) {
    if (s != side) rest.push_back(s);
  }
  return make_unchecked(tree.n(), std::move(rest));
}

StableTree insert_leaf_at(const StableTree& tree, LeafSet clade) {
  if (tree.n() + 1 > kMaxN) throw StrataError(ErrorCode::BadLabel, "leaf set too large");
  const LeafSet fresh = bit(Leaf::numbered(tree.n() + 1));
  std::vector<LeafSet> splits;
  splits.reserve(tree.splits().size());
  for (LeafSet side : tree.splits()) {
    splits.push_back(is_subset(clade, side) ? side | fresh : side);
  }
  return make_unchecked(tree.n() + 1, std::move(splits));
}

std::vector<StableTree> insert_leaf(const StableTree& tree, Leaf label) {
  if (!label.is_numbered() || label.number() != tree.n() + 1) {
    throw StrataError(ErrorCode::BadLabel,
                      "can only insert leaf " + std::to_string(tree.n() + 1) + ", got " + label.to_string());
  }
  std::vector<StableTree> out;
  for (LeafSet clade : tree.vertex_clades()) out.push_back(insert_leaf_at(tree, clade));
  return out;
}

StableTree insert_leaf_on_edge(const StableTree& tree, LeafSet clade) {
  if (tree.n() + 1 > kMaxN) throw StrataError(ErrorCode::BadLabel, "leaf set too large");
  const LeafSet fresh = bit(Leaf::numbered(tree.n() + 1));
  const LeafSet new_root = leaves_of(tree.n() + 1) & ~bit(Leaf::kA);
  std::vector<LeafSet> splits;
  splits.reserve(tree.splits().size() + 1);
  for (LeafSet side : tree.splits()) {
    splits.push_back(is_subset(clade, side) && side != clade ? side | fresh : side);
  }
  // The new vertex sits between `clade` and its parent and owns clade + fresh.
  if ((clade | fresh) != new_root) splits.push_back(clade | fresh);
  if (clade == tree.root_clade()) splits.push_back(clade);
  return make_unchecked(tree.n() + 1, std::move(splits));
}

StableTree forget_leaf(const StableTree& tree, Leaf label) {
  if (!label.is_numbered() || label.number() != tree.n() || tree.n() == 0) {
    throw StrataError(ErrorCode::BadLabel, "can only forget the largest numbered leaf");
  }
  const LeafSet drop = ~bit(label);
  const LeafSet new_root = leaves_of(tree.n() - 1) & ~bit(Leaf::kA);
  std::vector<LeafSet> splits;
  splits.reserve(tree.splits().size());
  for (LeafSet side : tree.splits()) {
    const LeafSet reduced = side & drop;
    if (size_of(reduced) >= 2 && reduced != new_root) splits.push_back(reduced);
  }
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
  return make_unchecked(tree.n() - 1, std::move(splits));
}

std::optional<std::size_t> SetPartitionAtLeaf::block_of(Leaf member) const {
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (contains(blocks[k], member)) return k;
  }
  return std::nullopt;
}

SetPartitionAtLeaf branches_at(const StableTree& tree, Leaf leaf) {
  if (!tree.has_leaf(leaf)) throw StrataError(ErrorCode::BadLeaf, leaf.to_string() + " not in tree");
  SetPartitionAtLeaf out{leaf, {}, false};
  const LeafSet clade = tree.clade_at(leaf);
  std::vector<LeafSet> rest;
  for (LeafSet child : tree.children_of(clade)) {
    if (child != bit(leaf)) rest.push_back(child);
  }
  std::sort(rest.begin(), rest.end(), [](LeafSet x, LeafSet y) { return min_index(x) < min_index(y); });
  if (leaf.index() != Leaf::kA) {
    out.blocks.push_back(tree.all_leaves() & ~clade);
    out.first_block_has_a = true;
  }
  out.blocks.insert(out.blocks.end(), rest.begin(), rest.end());
  return out;
}

namespace {

// Clades of the edges of a tree: every non-a leaf, every split, and the root
// clade standing for the edge to a.
std::vector<LeafSet> edge_clades(const StableTree& tree) {
  std::vector<LeafSet> edges;
  for (int index = 1; index < tree.leaf_count(); ++index) edges.push_back(bit(index));
  edges.insert(edges.end(), tree.splits().begin(), tree.splits().end());
  edges.push_back(tree.root_clade());
  return edges;
}

void grow_trivalent(const StableTree& tree, int target, bool keep_ab,
                    const std::function<void(const StableTree&)>& visit) {
  if (tree.n() == target) {
    visit(tree);
    return;
  }
  for (LeafSet edge : edge_clades(tree)) {
    if (keep_ab && (edge == tree.root_clade() || edge == bit(Leaf::kB))) continue;
    grow_trivalent(insert_leaf_on_edge(tree, edge), target, keep_ab, visit);
  }
}

void grow_stable(const StableTree& tree, int target, const std::function<void(const StableTree&)>& visit) {
  if (tree.n() == target) {
    visit(tree);
    return;
  }
  for (LeafSet clade : tree.vertex_clades()) grow_stable(insert_leaf_at(tree, clade), target, visit);
  for (LeafSet edge : edge_clades(tree)) grow_stable(insert_leaf_on_edge(tree, edge), target, visit);
}

}  // namespace

void for_each_trivalent(int n, const std::function<void(const StableTree&)>& visit, int max_n) {
  check_bound(n, max_n);
  grow_trivalent(StableTree::interior(0), n, false, visit);
}

std::vector<StableTree> enumerate_trivalent(int n, int max_n) {
  std::vector<StableTree> out;
  for_each_trivalent(n, [&](const StableTree& t) { out.push_back(t); }, max_n);
  return out;
}

void for_each_ab_paired(int n, const std::function<void(const StableTree&)>& visit, int max_n) {
  check_bound(n, max_n);
  grow_trivalent(StableTree::interior(0), n, true, visit);
}

void for_each_stable(int n, const std::function<void(const StableTree&)>& visit, int max_n) {
  check_bound(n, max_n);
  grow_stable(StableTree::interior(0), n, visit);
}

}  // namespace strata
