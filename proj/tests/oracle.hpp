#pragma once

// Reference implementations used only by the tests. They work on explicit
// adjacency lists rather than split sets, so they share no code path with the
// library beyond StableTree construction.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "strata/sum.hpp"
#include "strata/tree.hpp"

namespace oracle {

using strata::Composition;
using strata::LeafSet;
using strata::StableTree;

struct Graph {
  int n = 0;
  std::vector<std::set<int>> adj;
  std::vector<int> leaf;  // leaf index, or -1 for internal vertices
  std::vector<bool> alive;

  int add_vertex(int label) {
    adj.emplace_back();
    leaf.push_back(label);
    alive.push_back(true);
    return static_cast<int>(adj.size()) - 1;
  }
  void link(int u, int v) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  void unlink(int u, int v) {
    adj[u].erase(v);
    adj[v].erase(u);
  }
  int node_of_leaf(int index) const {
    for (std::size_t v = 0; v < leaf.size(); ++v) {
      if (alive[v] && leaf[v] == index) return static_cast<int>(v);
    }
    return -1;
  }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  // Leaves reachable from `start` without passing through `block`.
  LeafSet side(int start, int block) const {
    LeafSet out = 0;
    std::vector<int> stack{start};
    std::set<int> seen{block, start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (leaf[v] >= 0) out |= LeafSet{1} << leaf[v];
      for (int w : adj[v]) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    return out;
  }
};

inline Graph to_graph(const StableTree& tree) {
  Graph g;
  g.n = tree.n();
  for (int index = 0; index < tree.leaf_count(); ++index) g.add_vertex(index);
  std::vector<LeafSet> clades{tree.root_clade()};
  clades.insert(clades.end(), tree.splits().begin(), tree.splits().end());
  std::vector<int> node;
  for (std::size_t c = 0; c < clades.size(); ++c) node.push_back(g.add_vertex(-1));
  auto smallest_above = [&](LeafSet inner, bool strict) {
    std::size_t best = 0;
    for (std::size_t c = 0; c < clades.size(); ++c) {
      if ((inner & ~clades[c]) != 0 || (strict && clades[c] == inner)) continue;
      if (std::popcount(clades[c]) < std::popcount(clades[best])) best = c;
    }
    return best;
  };
  for (std::size_t c = 1; c < clades.size(); ++c) g.link(node[c], node[smallest_above(clades[c], true)]);
  g.link(0, node[0]);
  for (int index = 1; index < tree.leaf_count(); ++index) {
    g.link(index, node[smallest_above(LeafSet{1} << index, false)]);
  }
  return g;
}

inline StableTree to_tree(const Graph& g) {
  const LeafSet all = strata::leaves_of(g.n);
  std::vector<LeafSet> sides;
  for (std::size_t u = 0; u < g.adj.size(); ++u) {
    if (!g.alive[u] || g.leaf[u] >= 0) continue;
    for (int v : g.adj[u]) {
      if (g.leaf[v] >= 0 || v < static_cast<int>(u)) continue;
      LeafSet s = g.side(v, static_cast<int>(u));
      if (s & 1U) s = all & ~s;
      sides.push_back(s);
    }
  }
  return StableTree::from_splits(g.n, sides);
}

// The i-slide by vertex surgery: new vertex on the edge toward a, the branch
// holding the smallest label moves there with any proper subset of the other
// branches.
inline std::vector<StableTree> slide(const StableTree& tree, int i) {
  const Graph g = to_graph(tree);
  const int li = g.node_of_leaf(i + 2);
  const int v = *g.adj[li].begin();
  int toward_a = -1;
  std::vector<std::pair<int, LeafSet>> branches;
  for (int w : g.adj[v]) {
    if (w == li) continue;
    const LeafSet s = g.side(w, v);
    if (s & 1U) {
      toward_a = w;
    } else {
      branches.emplace_back(w, s);
    }
  }
  LeafSet everything = 0;
  for (const auto& [w, s] : branches) everything |= s;
  const int m = std::countr_zero(everything);
  int m_root = -1;
  std::vector<int> rest;
  for (const auto& [w, s] : branches) {
    if ((s >> m) & 1U) {
      m_root = w;
    } else {
      rest.push_back(w);
    }
  }
  std::vector<StableTree> out;
  const std::uint32_t limit = (1U << rest.size()) - 1;  // excludes moving all of rest
  for (std::uint32_t pick = 0; pick < limit; ++pick) {
    Graph h = g;
    const int bar = h.add_vertex(-1);
    h.unlink(v, toward_a);
    h.link(v, bar);
    h.link(bar, toward_a);
    h.unlink(v, m_root);
    h.link(bar, m_root);
    for (std::size_t r = 0; r < rest.size(); ++r) {
      if ((pick >> r) & 1U) {
        h.unlink(v, rest[r]);
        h.link(bar, rest[r]);
      }
    }
    out.push_back(to_tree(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<StableTree> insert_everywhere(const StableTree& tree) {
  const Graph g = to_graph(tree);
  std::vector<StableTree> out;
  for (std::size_t v = 0; v < g.adj.size(); ++v) {
    if (g.leaf[v] >= 0) continue;
    Graph h = g;
    h.n = g.n + 1;
    const int fresh = h.add_vertex(g.n + 3);
    h.link(static_cast<int>(v), fresh);
    out.push_back(to_tree(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int degree_at_leaf(const StableTree& tree, int index) {
  const Graph g = to_graph(tree);
  return g.degree(*g.adj[g.node_of_leaf(index)].begin());
}

// Deletes the largest numbered leaf and suppresses a resulting degree-2 vertex.
inline StableTree forget_last(const StableTree& tree) {
  Graph g = to_graph(tree);
  const int x = g.node_of_leaf(tree.n() + 2);
  const int v = *g.adj[x].begin();
  g.unlink(x, v);
  g.alive[x] = false;
  if (g.degree(v) == 2) {
    const int p = *g.adj[v].begin();
    const int q = *std::next(g.adj[v].begin());
    g.unlink(v, p);
    g.unlink(v, q);
    g.link(p, q);
    g.alive[v] = false;
  }
  g.n = tree.n() - 1;
  return to_tree(g);
}

inline std::set<StableTree> slide_set(const Composition& k, strata::Flavor flavor) {
  const int n = static_cast<int>(k.size());
  std::set<StableTree> current;
  current.insert(StableTree::interior(flavor == strata::Flavor::Psi ? n : 0));
  for (int i = 1; i <= n; ++i) {
    if (flavor == strata::Flavor::Omega) {
      std::set<StableTree> grown;
      for (const StableTree& t : current) {
        for (const StableTree& u : insert_everywhere(t)) grown.insert(u);
      }
      current = std::move(grown);
    }
    for (int step = 0; step < k[i - 1]; ++step) {
      std::set<StableTree> next;
      for (const StableTree& t : current) {
        for (const StableTree& u : slide(t, i)) next.insert(u);
      }
      current = std::move(next);
    }
  }
  return current;
}

inline std::set<StableTree> to_set(const strata::StrataSum& sum) {
  std::set<StableTree> out;
  for (const auto& [tree, mult] : sum.terms()) out.insert(tree);
  return out;
}

// Every stable tree on {a,b,c,1..n}: all pairwise compatible families of
// admissible sides.
inline std::vector<StableTree> all_stable(int n) {
  const LeafSet all = strata::leaves_of(n);
  std::vector<LeafSet> candidates;
  for (LeafSet s = 1; s <= all; ++s) {
    if ((s & 1U) || (s & ~all)) continue;
    const int size = std::popcount(s);
    if (size >= 2 && size <= n + 1) candidates.push_back(s);
  }
  std::vector<StableTree> out;
  std::vector<LeafSet> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    out.push_back(StableTree::from_splits(n, chosen));
    for (std::size_t c = from; c < candidates.size(); ++c) {
      const LeafSet s = candidates[c];
      const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](LeafSet t) {
        return (s & t) == 0 || (s & ~t) == 0 || (t & ~s) == 0;
      });
      if (!fits) continue;
      chosen.push_back(s);
      grow(c + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end());
  return out;
}

struct Tournament {
  std::vector<int> wins;  // by leaf index
  int matches = 0;
};

// Lazy tournament on the explicit graph; ties go to the smaller winner.
inline Tournament tournament(const StableTree& tree) {
  const Graph g = to_graph(tree);
  std::map<std::pair<int, int>, int> label;
  auto key = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };
  for (std::size_t v = 0; v < g.adj.size(); ++v) {
    if (g.leaf[v] >= 0) label[key(static_cast<int>(v), *g.adj[v].begin())] = g.leaf[v];
  }
  Tournament result;
  result.wins.assign(tree.leaf_count(), 0);
  while (true) {
    int best_loser = -1;
    int best_winner = -1;
    std::pair<int, int> best_edge;
    int far_end = -1;
    for (std::size_t v = 0; v < g.adj.size(); ++v) {
      if (g.leaf[v] >= 0) continue;
      std::vector<int> labels;
      int open = -1;
      int open_count = 0;
      for (int w : g.adj[v]) {
        auto it = label.find(key(static_cast<int>(v), w));
        if (it == label.end()) {
          open = w;
          ++open_count;
        } else {
          labels.push_back(it->second);
        }
      }
      if (open_count != 1 || labels.size() != 2) continue;
      const int lo = std::min(labels[0], labels[1]);
      const int hi = std::max(labels[0], labels[1]);
      if (lo > best_loser || (lo == best_loser && hi < best_winner)) {
        best_loser = lo;
        best_winner = hi;
        best_edge = key(static_cast<int>(v), open);
        far_end = open;
      }
    }
    if (best_loser < 0) break;
    bool lazy = false;
    for (int w : g.adj[far_end]) {
      auto it = label.find(key(far_end, w));
      if (it != label.end() && it->second != best_winner && it->second > best_loser) lazy = true;
    }
    label[best_edge] = lazy ? best_loser : best_winner;
    ++result.wins[best_winner];
    ++result.matches;
  }
  return result;
}

inline bool ab_share_vertex(const StableTree& tree) {
  const Graph g = to_graph(tree);
  return *g.adj[0].begin() == *g.adj[1].begin();
}

inline std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int j = 2; j <= n; ++j) out *= static_cast<std::uint64_t>(j);
  return out;
}

inline std::uint64_t multinomial(const Composition& k) {
  int n = 0;
  std::uint64_t denominator = 1;
  for (int part : k) {
    n += part;
    denominator *= factorial(part);
  }
  return factorial(n) / denominator;
}

inline std::uint64_t odd_double_factorial(int n) {
  std::uint64_t out = 1;
  for (int j = 2 * n - 1; j > 1; j -= 2) out *= static_cast<std::uint64_t>(j);
  return out;
}

// Sum of Stirling numbers of the second kind.
inline std::uint64_t bell(int n) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= r; ++c) s[r][c] = s[r - 1][c - 1] + static_cast<std::uint64_t>(c) * s[r - 1][c];
  }
  std::uint64_t out = 0;
  for (int c = 0; c <= n; ++c) out += s[n][c];
  return out;
}

// Literal reading of the pattern definition.
inline bool avoids_23_1(const std::vector<int>& w) {
  const int len = static_cast<int>(w.size());
  for (int i = 0; i + 1 < len; ++i) {
    for (int j = i + 2; j < len; ++j) {
      if (w[j] < w[i] && w[i] < w[i + 1]) return false;
    }
  }
  return true;
}

// Prefix form of the suffix condition: k_n + ... + k_{n-i+1} >= i - slack.
inline bool suffix_condition(const Composition& k, int slack) {
  const int n = static_cast<int>(k.size());
  for (int i = 1; i <= n; ++i) {
    int sum = 0;
    for (int j = n - i; j < n; ++j) sum += k[j];
    if (sum < i - slack) return false;
  }
  return true;
}

// The path tree with edges e_c, e_1, ..., e_{n-1}.
inline StableTree common_tree(int n) {
  std::vector<LeafSet> sides;
  for (int j = 1; j < n; ++j) {
    LeafSet s = 0;
    for (int x = j; x <= n; ++x) s |= LeafSet{1} << (x + 2);
    sides.push_back(s);
  }
  if (n >= 1) sides.push_back(strata::leaves_of(n) & ~LeafSet{3});
  return StableTree::from_splits(n, sides);
}

}  // namespace oracle
