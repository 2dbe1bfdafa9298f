#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "strata/leaf.hpp"

namespace strata {

// A stable leaf-labeled tree on {a, b, c, 1, ..., n}, i.e. the dual tree of a
// boundary stratum of M_{0,n+3}.
//
// The tree is stored as its set of splits. Each internal edge cuts the leaf
// set in two; we keep the side that does not contain `a`. Rooting the tree at
// leaf `a`, every internal vertex owns a "clade" (the leaves below it): the
// vertex adjacent to `a` owns all non-a leaves, every other vertex owns the
// split of the edge above it. Codimension equals the number of splits and the
// stratum dimension (extra valency) is n - codim.
class StableTree {
 public:
  StableTree() = default;

  // The tree with a single internal vertex carrying every leaf.
  static StableTree interior(int n);

  // Validates and canonicalizes. Throws BadLeaf, UnstableTree or
  // IncompatibleSplits.
  static StableTree from_splits(int n, std::span<const LeafSet> sides);
  static StableTree from_splits(int n, std::initializer_list<LeafSet> sides) {
    return from_splits(n, std::span<const LeafSet>(sides.begin(), sides.size()));
  }

  int n() const { return n_; }
  int leaf_count() const { return n_ + 3; }
  LeafSet all_leaves() const { return leaves_of(n_); }
  LeafSet root_clade() const { return leaves_of(n_) & ~bit(Leaf::kA); }

  // Canonically ordered (lex_less) split sides.
  const std::vector<LeafSet>& splits() const { return splits_; }
  int codim() const { return static_cast<int>(splits_.size()); }
  int extra_valency() const { return n_ - codim(); }
  bool is_trivalent() const { return codim() == n_; }
  bool has_split(LeafSet side) const;
  bool has_leaf(Leaf leaf) const { return leaf.index() < leaf_count(); }

  // Internal vertices, identified by their clades: the root clade first, then
  // the splits in canonical order.
  std::vector<LeafSet> vertex_clades() const;
  int internal_vertex_count() const { return codim() + 1; }

  // Clade of the internal vertex adjacent to `leaf`. For `a` that is the root.
  LeafSet clade_at(Leaf leaf) const;
  // Children of the vertex owning `clade`: maximal splits strictly inside it,
  // then the leaves it carries directly as singletons.
  std::vector<LeafSet> children_of(LeafSet clade) const;
  int degree_of(LeafSet clade) const;
  int degree_at(Leaf leaf) const { return degree_of(clade_at(leaf)); }

  // True when the internal vertices form a path.
  bool is_caterpillar() const;

  friend bool operator==(const StableTree&, const StableTree&) = default;
  friend bool operator<(const StableTree& lhs, const StableTree& rhs);

  std::size_t hash() const;

 private:
  StableTree(int n, std::vector<LeafSet> splits) : n_(n), splits_(std::move(splits)) {}
  friend StableTree make_unchecked(int n, std::vector<LeafSet> splits);

  int n_ = 0;
  std::vector<LeafSet> splits_;
};

// Builds a tree from splits already known to be valid; sorts them.
StableTree make_unchecked(int n, std::vector<LeafSet> splits);

struct StableTreeHash {
  std::size_t operator()(const StableTree& tree) const { return tree.hash(); }
};

// Bound on n for exhaustive enumeration; STRATA_MAX_N overrides the default 7.
int default_max_n();

// Removes one split (contracts its edge). Throws NoSuchSplit.
StableTree contract_split(const StableTree& tree, LeafSet side);

// One tree per internal vertex, the new leaf n+1 attached there. `label` must
// be the numbered leaf n+1, else BadLabel.
std::vector<StableTree> insert_leaf(const StableTree& tree, Leaf label);
// Attaches leaf n+1 at the vertex owning `clade`.
StableTree insert_leaf_at(const StableTree& tree, LeafSet clade);

// Deletes the largest numbered leaf and restabilizes. Throws BadLabel.
StableTree forget_leaf(const StableTree& tree, Leaf label);

// Branch decomposition at a leaf: the leaf sets of the components of
// T minus the vertex adjacent to `leaf`.
struct SetPartitionAtLeaf {
  Leaf leaf;
  // The block containing `a` (if any) first, then the rest ordered by their
  // smallest label.
  std::vector<LeafSet> blocks;
  bool first_block_has_a = false;

  // Index of the block containing `member`, or nullopt.
  std::optional<std::size_t> block_of(Leaf member) const;
};

SetPartitionAtLeaf branches_at(const StableTree& tree, Leaf leaf);

// All trivalent trees on {a,b,c,1..n}, each exactly once, built by inserting
// leaves 1..n on edges. Throws BoundExceeded when n > max_n.
void for_each_trivalent(int n, const std::function<void(const StableTree&)>& visit,
                        int max_n = default_max_n());
std::vector<StableTree> enumerate_trivalent(int n, int max_n = default_max_n());

// Trivalent trees in which leaves a and b share a vertex.
void for_each_ab_paired(int n, const std::function<void(const StableTree&)>& visit,
                        int max_n = default_max_n());

// Every stable tree on {a,b,c,1..n}, each exactly once.
void for_each_stable(int n, const std::function<void(const StableTree&)>& visit,
                     int max_n = default_max_n());

// Attaches leaf n+1 on the edge above `clade` (a split, a singleton leaf, or
// the root clade for the edge to a).
StableTree insert_leaf_on_edge(const StableTree& tree, LeafSet clade);

}  // namespace strata
