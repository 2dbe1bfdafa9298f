#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "strata/sum.hpp"
#include "strata/tree.hpp"

namespace strata {

// Labels consulted, in order, when choosing which branch slides toward a.
using PriorityOrder = std::vector<Leaf>;

// (b, c, 1, ..., n) without i: the order under which a generalized slide is
// the plain i-slide.
PriorityOrder default_priority(int i, int n);

// The i-minimal marked point: smallest label off the a-branch at v_i, other
// than i itself. Throws BadLeaf if leaf i is absent.
Leaf i_minimal_point(const StableTree& tree, int i);

// All trees obtained by one i-slide; empty when deg(v_i) = 3.
std::vector<StableTree> slide_i(const StableTree& tree, int i);

// As slide_i, but the sliding branch is the one holding the first label of
// `priority` found off the a-branch. Empty if no such label exists.
std::vector<StableTree> generalized_slide(const StableTree& tree, int i, const PriorityOrder& priority);

struct SlideOptions {
  // Drop trees whose vertices cannot absorb the slides still owed to their
  // leaves.
  bool prune = true;
};

// Pruning test: false when some vertex v has more slides owed by its leaves
// than deg(v) - 3. `owed` is indexed by leaf index.
bool vertices_can_absorb(const StableTree& tree, const std::vector<int>& owed);

StrataSum slide_set_psi(const Composition& k, SlideOptions options = {});
StrataSum slide_set_omega(const Composition& k, SlideOptions options = {});
StrataSum slide_set(const Composition& k, Flavor flavor, SlideOptions options = {});

// Applies slides in the order given by `word` (letters in 1..n), starting
// from the interior tree on n leaves.
StrataSum slide_word(const std::vector<int>& word, int n);

// One slide of a generative run.
struct SlideStep {
  int leaf = 0;
  StableTree before;
  StableTree after;
};

// A tree of Slide^psi(k) together with the slides that produced it.
struct TracedTree {
  StableTree tree;
  std::vector<SlideStep> history;
};

std::vector<TracedTree> slide_set_psi_traced(const Composition& k);

struct SlideLabeling {
  StableTree tree;
  // Split -> label. Every split of `tree` is present once the labeling is
  // complete.
  std::map<LeafSet, int> edge_labels;
};

struct LabelingRejection {
  int label = 0;            // value being placed when the process stopped
  int edges_labeled = 0;    // edges labeled before stopping
  std::string reason;
};

using LabelingOutcome = std::variant<SlideLabeling, LabelingRejection>;

// Runs the deterministic labeling process for k on `tree`. A tree is accepted
// only when every split gets a label and the number of splits equals sum(k).
LabelingOutcome verify_labeling(const StableTree& tree, const Composition& k, Flavor flavor);
bool admits_labeling(const StableTree& tree, const Composition& k, Flavor flavor);

}  // namespace strata
