#include "strata/tournament.hpp"

#include <algorithm>

#include "strata/error.hpp"

namespace strata {

namespace {

// Explicit graph of a tree. Vertices 0..L-1 are the leaves (by index), the
// rest are internal vertices. Each edge carries the side not containing a.
struct TreeGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    LeafSet side = 0;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident;

  explicit TreeGraph(const StableTree& tree) {
    const int leaves = tree.leaf_count();
    const std::vector<LeafSet> clades = tree.vertex_clades();
    incident.resize(leaves + clades.size());
    auto vertex_of = [&](LeafSet clade) {
      return leaves + static_cast<int>(std::find(clades.begin(), clades.end(), clade) - clades.begin());
    };
    auto add = [&](int u, int v, LeafSet side) {
      incident[u].push_back(static_cast<int>(edges.size()));
      incident[v].push_back(static_cast<int>(edges.size()));
      edges.push_back({u, v, side});
    };
    add(Leaf::kA, vertex_of(tree.root_clade()), tree.root_clade());
    for (int index = 1; index < leaves; ++index) {
      add(index, vertex_of(tree.clade_at(Leaf::from_index(index))), bit(index));
    }
    for (LeafSet split : tree.splits()) {
      LeafSet parent = tree.root_clade();
      for (LeafSet other : tree.splits()) {
        if (other != split && is_subset(split, other) && size_of(other) < size_of(parent)) parent = other;
      }
      add(vertex_of(split), vertex_of(parent), split);
    }
  }

  int other_end(int edge, int vertex) const { return edges[edge].u == vertex ? edges[edge].v : edges[edge].u; }
};

}  // namespace

Composition TournamentResult::numbered_wins() const {
  Composition out;
  for (int i = 1; i <= tree.n(); ++i) out.push_back(wins(Leaf::numbered(i)));
  return out;
}

TournamentResult lazy_tournament(const StableTree& tree, TieBreak tie_break) {
  if (!tree.is_trivalent()) throw StrataError(ErrorCode::NotTrivalent, "lazy tournament needs a trivalent tree");
  const TreeGraph graph(tree);
  const int leaves = tree.leaf_count();
  std::vector<int> label(graph.edges.size(), -1);
  for (int index = 0; index < leaves; ++index) label[graph.incident[index].front()] = index;

  TournamentResult result{tree, {}, std::vector<int>(leaves, 0), {}, 0};
  while (true) {
    struct Candidate {
      int loser;
      int winner;
      int open_edge;
      int vertex;
    };
    std::vector<Candidate> eligible;
    for (int vertex = leaves; vertex < static_cast<int>(graph.incident.size()); ++vertex) {
      std::vector<int> known;
      int open = -1;
      for (int edge : graph.incident[vertex]) {
        if (label[edge] >= 0) {
          known.push_back(label[edge]);
        } else {
          open = edge;
        }
      }
      if (known.size() == 2 && open >= 0) {
        eligible.push_back({std::min(known[0], known[1]), std::max(known[0], known[1]), open, vertex});
      }
    }
    if (eligible.empty()) break;
    const int top = std::max_element(eligible.begin(), eligible.end(), [](const auto& x, const auto& y) {
                      return x.loser < y.loser;
                    })->loser;
    std::vector<Candidate> best;
    std::copy_if(eligible.begin(), eligible.end(), std::back_inserter(best),
                 [&](const Candidate& c) { return c.loser == top; });
    if (best.size() > 1) ++result.ties;
    const Candidate pick = *std::min_element(best.begin(), best.end(), [&](const auto& x, const auto& y) {
      return tie_break == TieBreak::SmallerWinner ? x.winner < y.winner : x.winner > y.winner;
    });

    const int far = graph.other_end(pick.open_edge, pick.vertex);
    bool lazy = false;
    for (int edge : graph.incident[far]) {
      if (edge != pick.open_edge && label[edge] >= 0 && label[edge] != pick.winner && label[edge] > pick.loser) {
        lazy = true;
      }
    }
    const int advanced = lazy ? pick.loser : pick.winner;
    label[pick.open_edge] = advanced;
    ++result.win_counts[pick.winner];
    result.match_log.push_back(
        {Leaf::from_index(pick.loser), Leaf::from_index(pick.winner), Leaf::from_index(advanced)});
  }
  for (std::size_t edge = 0; edge < graph.edges.size(); ++edge) {
    if (label[edge] < 0) throw std::logic_error("lazy tournament left an edge unlabeled");
    result.edge_labels.emplace(graph.edges[edge].side, Leaf::from_index(label[edge]));
  }
  return result;
}

bool ab_paired(const StableTree& tree) {
  return tree.clade_at(Leaf::b()) == tree.root_clade();
}

StrataSum tour_set(const Composition& k, int max_n) {
  check_composition(k);
  const int n = static_cast<int>(k.size());
  if (total(k) != n) throw StrataError(ErrorCode::BadComposition, "Tour(k) needs sum(k) = n");
  StrataSum out(n);
  for_each_ab_paired(
      n,
      [&](const StableTree& tree) {
        if (lazy_tournament(tree).numbered_wins() == k) out.add(tree);
      },
      max_n);
  return out;
}

std::map<Composition, StrataSum> tour_partition(int n, int max_n) {
  std::map<Composition, StrataSum> out;
  for_each_ab_paired(
      n,
      [&](const StableTree& tree) {
        auto [it, fresh] = out.try_emplace(lazy_tournament(tree).numbered_wins(), n);
        it->second.add(tree);
      },
      max_n);
  return out;
}

std::map<Composition, std::int64_t> tour_counts(int n, int max_n) {
  std::map<Composition, std::int64_t> out;
  for_each_ab_paired(
      n, [&](const StableTree& tree) { ++out[lazy_tournament(tree).numbered_wins()]; }, max_n);
  return out;
}

bool operator==(const Insert& x, const Insert& y) { return x.label == y.label; }
bool operator==(const GenSlide& x, const GenSlide& y) { return x.leaf == y.leaf && x.priority == y.priority; }
bool operator==(const SlideSchedule& x, const SlideSchedule& y) { return x.steps == y.steps; }

namespace {

PriorityOrder omega_priority(int i) {
  PriorityOrder order{Leaf::b(), Leaf::c()};
  for (int j = 1; j < i; ++j) order.push_back(Leaf::numbered(j));
  return order;
}

PriorityOrder labels(std::initializer_list<Leaf> leaves) { return PriorityOrder(leaves); }

Leaf num(int i) { return Leaf::numbered(i); }

bool zero_prefix(const Composition& k, std::size_t upto) {
  return std::all_of(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(upto), [](int v) { return v == 0; });
}

}  // namespace

SlideSchedule omega_schedule(const Composition& k) {
  check_composition(k);
  SlideSchedule out;
  for (int i = 1; i <= static_cast<int>(k.size()); ++i) {
    out.steps.push_back(Insert{i});
    for (int s = 0; s < k[i - 1]; ++s) out.steps.push_back(GenSlide{i, omega_priority(i)});
  }
  return out;
}

SlideSchedule schedule_last_two(int n) {
  if (n < 2) throw StrataError(ErrorCode::UnsupportedShape, "(0,...,0,1,n-1) needs n >= 2");
  SlideSchedule out;
  for (int i = 1; i < n; ++i) out.steps.push_back(Insert{i});
  out.steps.push_back(GenSlide{n - 1, labels({Leaf::b()})});
  out.steps.push_back(Insert{n});
  out.steps.push_back(GenSlide{n, labels({Leaf::b(), num(n - 1)})});
  if (n >= 3) out.steps.push_back(GenSlide{n, labels({Leaf::c(), num(1)})});
  for (int j = 1; j + 2 <= n - 1; ++j) out.steps.push_back(GenSlide{n, labels({num(j), num(j + 1)})});
  return out;
}

SlideSchedule schedule_first_heavy(int n) {
  if (n < 2) throw StrataError(ErrorCode::UnsupportedShape, "(0,...,0,n-1,1) needs n >= 2");
  Composition head(n - 1, 0);
  head.back() = n - 1;
  SlideSchedule out = omega_schedule(head);
  out.steps.push_back(Insert{n});
  out.steps.push_back(GenSlide{n, labels({Leaf::b(), num(n - 1)})});
  return out;
}

SlideSchedule schedule_0022() {
  SlideSchedule out;
  out.steps = {Insert{1},
               Insert{2},
               Insert{3},
               GenSlide{3, labels({Leaf::b()})},
               GenSlide{3, labels({Leaf::c(), num(1), num(2)})},
               Insert{4},
               GenSlide{4, labels({Leaf::b(), num(3)})},
               GenSlide{4, labels({Leaf::c(), num(1), num(2)})}};
  return out;
}

SlideSchedule extend_schedule(const SlideSchedule& base, const Composition& k) {
  const int n = static_cast<int>(k.size());
  const int tail = n == 0 ? 0 : k.back();
  if (n == 0 || static_cast<int>(base.steps.size()) < tail) {
    throw StrataError(ErrorCode::MalformedSchedule, "schedule too short to extend");
  }
  const auto cut = base.steps.end() - tail;
  SlideSchedule out;
  out.steps.assign(base.steps.begin(), cut);
  out.steps.push_back(Insert{n + 1});
  for (auto it = cut; it != base.steps.end(); ++it) {
    const auto* slide = std::get_if<GenSlide>(&*it);
    if (slide == nullptr || slide->leaf != n) {
      throw StrataError(ErrorCode::MalformedSchedule, "last k_n steps must be slides at n");
    }
    out.steps.push_back(GenSlide{n + 1, slide->priority});
  }
  out.steps.push_back(GenSlide{n + 1, omega_priority(n)});
  return out;
}

SlideSchedule family_schedule(const Composition& k) {
  check_composition(k);
  const int n = static_cast<int>(k.size());
  if (n == 0 || total(k) != n) {
    throw StrataError(ErrorCode::UnsupportedShape, "family schedules need a composition of n >= 1");
  }
  if (zero_prefix(k, n - 1)) return omega_schedule(k);
  if (n >= 2 && zero_prefix(k, n - 2)) {
    if (k[n - 2] == 1 && k[n - 1] == n - 1) return schedule_last_two(n);
    if (k[n - 2] == n - 1 && k[n - 1] == 1) return schedule_first_heavy(n);
  }
  if (k == Composition{0, 0, 2, 2}) return schedule_0022();
  if (n >= 3 && k[n - 2] == 0 && k[n - 1] >= 1) {
    Composition smaller(k.begin(), k.end() - 2);
    smaller.push_back(k[n - 1] - 1);
    return extend_schedule(family_schedule(smaller), smaller);
  }
  throw StrataError(ErrorCode::UnsupportedShape, "no hyperplane schedule for (" + composition_to_string(k) + ")");
}

StrataSum run_schedule(const SlideSchedule& schedule, int n) {
  if (n < 0 || n > kMaxN) throw StrataError(ErrorCode::MalformedSchedule, "bad n");
  // Validate first so that a bad schedule fails before any work.
  int inserted = 0;
  for (const Instruction& step : schedule.steps) {
    if (const auto* insert = std::get_if<Insert>(&step)) {
      if (insert->label != inserted + 1 || insert->label > n) {
        throw StrataError(ErrorCode::MalformedSchedule, "insertions must be 1, 2, ..., n in order");
      }
      ++inserted;
      continue;
    }
    const auto& slide = std::get<GenSlide>(step);
    if (slide.leaf < 1 || slide.leaf > inserted || slide.priority.empty()) {
      throw StrataError(ErrorCode::MalformedSchedule, "slide at a leaf not yet inserted");
    }
    LeafSet seen = 0;
    for (Leaf leaf : slide.priority) {
      const bool present = leaf == Leaf::b() || leaf == Leaf::c() ||
                           (leaf.is_numbered() && leaf.number() <= inserted);
      if (!present || leaf == Leaf::numbered(slide.leaf) || contains(seen, leaf)) {
        throw StrataError(ErrorCode::MalformedSchedule, "bad priority entry " + leaf.to_string());
      }
      seen |= bit(leaf);
    }
  }
  if (inserted != n) throw StrataError(ErrorCode::MalformedSchedule, "schedule does not insert every leaf");

  std::vector<StableTree> current{StableTree::interior(0)};
  for (std::size_t pos = 0; pos < schedule.steps.size(); ++pos) {
    std::vector<StableTree> next;
    if (const auto* insert = std::get_if<Insert>(&schedule.steps[pos])) {
      for (const StableTree& tree : current) {
        for (StableTree& grown : insert_leaf(tree, Leaf::numbered(insert->label))) next.push_back(std::move(grown));
      }
    } else {
      const auto& slide = std::get<GenSlide>(schedule.steps[pos]);
      for (const StableTree& tree : current) {
        for (StableTree& result : generalized_slide(tree, slide.leaf, slide.priority)) {
          next.push_back(std::move(result));
        }
      }
    }
    // Slides owed before the next insertion only shrink vertex degrees, so a
    // vertex that cannot absorb them is a dead end.
    std::vector<int> owed(kMaxLeaves, 0);
    for (std::size_t later = pos + 1; later < schedule.steps.size(); ++later) {
      const auto* slide = std::get_if<GenSlide>(&schedule.steps[later]);
      if (slide == nullptr) break;
      ++owed[Leaf::numbered(slide->leaf).index()];
    }
    std::erase_if(next, [&](const StableTree& tree) { return !vertices_can_absorb(tree, owed); });
    current = std::move(next);
  }
  StrataSum out(n);
  for (const StableTree& tree : current) out.add(tree);
  return out;
}

}  // namespace strata
