#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "strata/slide.hpp"
#include "strata/sum.hpp"
#include "strata/tree.hpp"

namespace strata {

// When two eligible pairs share the largest loser label, pick by winner.
enum class TieBreak { SmallerWinner, LargerWinner };

struct Match {
  Leaf loser;
  Leaf winner;
  Leaf advanced;
};

struct TournamentResult {
  StableTree tree;
  // Every edge, keyed by its side not containing a (for a's own leaf edge
  // that is the root clade).
  std::map<LeafSet, Leaf> edge_labels;
  // Indexed by leaf index.
  std::vector<int> win_counts;
  std::vector<Match> match_log;
  // Steps at which more than one pair had the largest loser label.
  int ties = 0;

  int wins(Leaf leaf) const { return win_counts[leaf.index()]; }
  // (wins of 1, ..., wins of n)
  Composition numbered_wins() const;
};

// Throws NotTrivalent.
TournamentResult lazy_tournament(const StableTree& tree, TieBreak tie_break = TieBreak::SmallerWinner);

// True when the leaf edges of a and b meet at a vertex.
bool ab_paired(const StableTree& tree);

// Trivalent trees with a,b paired in which each i >= 1 wins exactly k_i
// matches. Requires sum(k) = n, else BadComposition.
StrataSum tour_set(const Composition& k, int max_n = default_max_n());

// Tour(k) for every composition of n at once.
std::map<Composition, StrataSum> tour_partition(int n, int max_n = default_max_n());
std::map<Composition, std::int64_t> tour_counts(int n, int max_n = default_max_n());

struct Insert {
  int label = 0;
};
struct GenSlide {
  int leaf = 0;
  PriorityOrder priority;
};
using Instruction = std::variant<Insert, GenSlide>;

struct SlideSchedule {
  std::vector<Instruction> steps;
};

bool operator==(const Insert& x, const Insert& y);
bool operator==(const GenSlide& x, const GenSlide& y);
bool operator==(const SlideSchedule& x, const SlideSchedule& y);

// Insert i followed by k_i slides with priority (b, c, 1, ..., i-1).
SlideSchedule omega_schedule(const Composition& k);

// Hyperplane schedules for (0,...,0,n), (0,...,0,1,n-1), (0,...,0,n-1,1),
// (0,0,2,2), and anything reachable from those by
// (k_1..k_n) -> (k_1..k_{n-1}, 0, k_n + 1). Throws UnsupportedShape.
SlideSchedule family_schedule(const Composition& k);
SlideSchedule schedule_last_two(int n);   // (0,...,0,1,n-1), n >= 2
SlideSchedule schedule_first_heavy(int n);  // (0,...,0,n-1,1), n >= 2
SlideSchedule schedule_0022();
// The inductive step: the schedule for (k_1..k_{n-1}, 0, k_n + 1) built from
// the schedule `base` for k.
SlideSchedule extend_schedule(const SlideSchedule& base, const Composition& k);

// Executes the schedule from the tree (abc). Throws MalformedSchedule.
StrataSum run_schedule(const SlideSchedule& schedule, int n);

}  // namespace strata
