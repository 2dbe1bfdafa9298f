#include "strata/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "strata/error.hpp"

namespace strata {

void LinearForm::add(int coordinate, const Rational& coefficient) {
  if (coefficient == 0) return;
  Rational& slot = terms_[coordinate];
  slot += coefficient;
  if (slot == 0) terms_.erase(coordinate);
}

Rational LinearForm::coefficient(int coordinate) const {
  auto it = terms_.find(coordinate);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinearFormPoly::add(int exponent, int coordinate, const Rational& coefficient) {
  if (exponent < 0) throw StrataError(ErrorCode::BadLeaf, "negative exponent");
  LinearForm& form = terms_[exponent];
  form.add(coordinate, coefficient);
  if (form.is_zero()) terms_.erase(exponent);
}

std::optional<int> LinearFormPoly::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

LinearFormPoly operator+(const LinearFormPoly& x, const LinearFormPoly& y) {
  LinearFormPoly out = x;
  for (const auto& [exponent, form] : y.terms_) {
    for (const auto& [coordinate, coefficient] : form.terms()) out.add(exponent, coordinate, coefficient);
  }
  return out;
}

LinearFormPoly operator*(const Rational& scale, const LinearFormPoly& x) {
  LinearFormPoly out;
  for (const auto& [exponent, form] : x.terms_) {
    for (const auto& [coordinate, coefficient] : form.terms()) out.add(exponent, coordinate, scale * coefficient);
  }
  return out;
}

int psi_exponent(Leaf r, int i) {
  if (r == Leaf::b()) return 0;
  if (r == Leaf::c()) return 1;
  return r.number() < i ? r.number() + 1 : r.number();
}

LinearFormPoly hyperplane_psi(int i, int n) {
  if (i < 1 || i > n) throw StrataError(ErrorCode::BadLeaf, "psi_" + std::to_string(i) + " on n=" + std::to_string(n));
  LinearFormPoly h;
  for (int index = Leaf::kB; index < n + 3; ++index) {
    const Leaf r = Leaf::from_index(index);
    if (r == Leaf::numbered(i)) continue;
    h.add(psi_exponent(r, i), index, 1);
  }
  return h;
}

LinearFormPoly hyperplane_omega(int i) { return hyperplane_psi(i, i); }

LinearFormPoly hyperplane_from_priority(const PriorityOrder& priority) {
  LinearFormPoly h;
  for (std::size_t e = 0; e < priority.size(); ++e) h.add(static_cast<int>(e), priority[e].index(), 1);
  return h;
}

int PSigma::part_of(Leaf leaf) const {
  const auto part = partition.block_of(leaf);
  if (!part) throw StrataError(ErrorCode::BadLeaf, leaf.to_string() + " is not in any branch");
  return static_cast<int>(*part);
}

std::vector<int> PSigma::coordinate_pattern(int n) const {
  std::vector<int> out;
  for (int index = Leaf::kB; index < n + 3; ++index) {
    if (index == partition.leaf.index()) continue;
    out.push_back(part_of(Leaf::from_index(index)));
  }
  return out;
}

PSigma p_sigma(const StableTree& tree, int i) {
  if (i < 1 || i > tree.n()) throw StrataError(ErrorCode::BadLeaf, "no leaf " + std::to_string(i));
  return PSigma{branches_at(tree, Leaf::numbered(i))};
}

LinearFormPoly restrict_to_stratum(const LinearFormPoly& h, const StableTree& tree, int i) {
  const PSigma sigma = p_sigma(tree, i);
  LinearFormPoly out;
  for (const auto& [exponent, form] : h.terms()) {
    for (const auto& [coordinate, coefficient] : form.terms()) {
      if (coordinate <= Leaf::kA || coordinate >= tree.leaf_count() || coordinate == Leaf::numbered(i).index()) {
        throw StrataError(ErrorCode::BadLeaf, "coordinate " + std::to_string(coordinate) + " not available");
      }
      const int part = sigma.part_of(Leaf::from_index(coordinate));
      if (part != 0) out.add(exponent, part, coefficient);
    }
  }
  return out;
}

LimitCondition limit_condition(const LinearFormPoly& restricted) {
  if (restricted.is_zero()) return {};
  const auto& [exponent, form] = *restricted.terms().begin();
  if (form.size() != 1) return {};
  return LimitCondition{false, form.terms().begin()->first, exponent};
}

namespace {

bool nested_or_disjoint(LeafSet x, LeafSet y) { return (x & y) == 0 || is_subset(x, y) || is_subset(y, x); }

// Trees T' = T + one split in which a and m share a branch at i.
std::vector<StableTree> refinements_joining(const StableTree& tree, int i, Leaf m) {
  const Leaf leaf = Leaf::numbered(i);
  const LeafSet universe = tree.root_clade();
  std::vector<StableTree> out;
  // Sub-masks of the non-a leaves; a is bit 0, so shift by one.
  const std::uint32_t count = std::uint32_t{1} << (tree.leaf_count() - 1);
  for (std::uint32_t raw = 0; raw < count; ++raw) {
    const LeafSet side = static_cast<LeafSet>(raw) << 1;
    if (size_of(side) < 2 || side == universe || tree.has_split(side)) continue;
    if (!std::all_of(tree.splits().begin(), tree.splits().end(),
                     [&](LeafSet s) { return nested_or_disjoint(s, side); })) {
      continue;
    }
    std::vector<LeafSet> splits = tree.splits();
    splits.push_back(side);
    StableTree refined = make_unchecked(tree.n(), std::move(splits));
    const SetPartitionAtLeaf branches = branches_at(refined, leaf);
    if (branches.block_of(Leaf::a()) == branches.block_of(m)) out.push_back(std::move(refined));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Leaf limiting_leaf(const StableTree& tree, int i, const LinearFormPoly& hyperplane, LimitCondition* seen) {
  const LimitCondition limit = limit_condition(restrict_to_stratum(hyperplane, tree, i));
  if (limit.degenerate) {
    throw StrataError(ErrorCode::DegenerateRestriction, "hyperplane restricts to a degenerate form");
  }
  if (seen) *seen = limit;
  const PSigma sigma = p_sigma(tree, i);
  return Leaf::from_index(min_index(sigma.partition.blocks[limit.coordinate]));
}

}  // namespace

std::vector<StableTree> oracle_slide(const StableTree& tree, int i) {
  LimitCondition limit;
  const Leaf m = limiting_leaf(tree, i, hyperplane_psi(i, tree.n()), &limit);
  if (limit.exponent != psi_exponent(m, i)) {
    throw std::logic_error("leading exponent " + std::to_string(limit.exponent) + " does not match leaf " +
                           m.to_string());
  }
  return refinements_joining(tree, i, m);
}

std::vector<StableTree> oracle_slide_with(const StableTree& tree, int i, const LinearFormPoly& hyperplane) {
  return refinements_joining(tree, i, limiting_leaf(tree, i, hyperplane, nullptr));
}

StrataSum iterated_limit(const Composition& k, Flavor flavor, int* degenerate) {
  check_composition(k);
  const int n = static_cast<int>(k.size());
  int skipped = 0;
  auto limit_step = [&](const StrataSum& current, int i, const LinearFormPoly& hyperplane) {
    StrataSum next(current.n());
    for (const auto& [tree, mult] : current.terms()) {
      try {
        for (const StableTree& limit : oracle_slide_with(tree, i, hyperplane)) next.add(limit, mult);
      } catch (const StrataError& error) {
        if (error.code() != ErrorCode::DegenerateRestriction) throw;
        ++skipped;
      }
    }
    return next;
  };

  StrataSum current(flavor == Flavor::Psi ? n : 0);
  current.add(StableTree::interior(current.n()));
  for (int i = 1; i <= n; ++i) {
    if (flavor == Flavor::Omega) {
      StrataSum grown(i);
      for (const auto& [tree, mult] : current.terms()) {
        for (const StableTree& bigger : insert_leaf(tree, Leaf::numbered(i))) grown.add(bigger, mult);
      }
      current = std::move(grown);
    }
    const LinearFormPoly hyperplane = flavor == Flavor::Psi ? hyperplane_psi(i, n) : hyperplane_omega(i);
    for (int copy = 0; copy < k[i - 1]; ++copy) current = limit_step(current, i, hyperplane);
  }
  if (degenerate) *degenerate = skipped;
  return current;
}

namespace {

Rational det(const ProjectivePoint& p, const ProjectivePoint& q) { return p.x * q.w - q.x * p.w; }

}  // namespace

std::vector<Rational> normalize_projective(std::vector<Rational> coords) {
  auto pivot = std::find_if(coords.begin(), coords.end(), [](const Rational& v) { return v != 0; });
  if (pivot == coords.end()) throw StrataError(ErrorCode::BadParametrization, "all coordinates vanish");
  const Rational scale = *pivot;
  for (Rational& v : coords) v /= scale;
  return coords;
}

std::vector<Rational> kapranov_coords(const StratumPoint& point, int i) {
  const StableTree& tree = point.tree;
  if (i < 1 || i > tree.n()) throw StrataError(ErrorCode::BadParametrization, "no leaf " + std::to_string(i));
  const std::vector<LeafSet> clades = tree.vertex_clades();
  if (std::find(clades.begin(), clades.end(), point.vertex) == clades.end()) {
    throw StrataError(ErrorCode::BadParametrization, "vertex is not an internal vertex of the tree");
  }
  std::vector<LeafSet> branches = tree.children_of(point.vertex);
  branches.push_back(tree.all_leaves() & ~point.vertex);
  const LeafSet own = bit(Leaf::numbered(i));
  if (std::find(branches.begin(), branches.end(), own) == branches.end()) {
    throw StrataError(ErrorCode::BadParametrization, "leaf " + std::to_string(i) + " is not on this component");
  }
  if (point.positions.size() != branches.size()) {
    throw StrataError(ErrorCode::BadParametrization, "need one position per branch");
  }
  for (LeafSet branch : branches) {
    if (!point.positions.count(branch)) {
      throw StrataError(ErrorCode::BadParametrization, "no position for branch " + set_to_string(branch));
    }
  }
  for (auto x = point.positions.begin(); x != point.positions.end(); ++x) {
    if (x->second.x == 0 && x->second.w == 0) throw StrataError(ErrorCode::BadParametrization, "[0:0] position");
    for (auto y = std::next(x); y != point.positions.end(); ++y) {
      if (det(x->second, y->second) == 0) throw StrataError(ErrorCode::BadParametrization, "branches collide");
    }
  }
  auto position_of = [&](int index) -> const ProjectivePoint& {
    for (LeafSet branch : branches) {
      if (contains(branch, index)) return point.positions.at(branch);
    }
    throw std::logic_error("leaf outside every branch");
  };
  const ProjectivePoint& at_a = position_of(Leaf::kA);
  const ProjectivePoint& at_i = position_of(Leaf::numbered(i).index());
  std::vector<Rational> coords;
  for (int index = Leaf::kB; index < tree.leaf_count(); ++index) {
    if (index == Leaf::numbered(i).index()) continue;
    const ProjectivePoint& at_r = position_of(index);
    coords.push_back(det(at_a, at_r) / det(at_i, at_r));
  }
  return normalize_projective(std::move(coords));
}

std::vector<Rational> kapranov_coords_trivalent(const StableTree& tree, int i) {
  if (i < 1 || i > tree.n()) throw StrataError(ErrorCode::BadParametrization, "no leaf " + std::to_string(i));
  const LeafSet vertex = tree.clade_at(Leaf::numbered(i));
  if (tree.degree_of(vertex) != 3) {
    throw StrataError(ErrorCode::BadParametrization, "v_" + std::to_string(i) + " is not trivalent");
  }
  StratumPoint point{tree, vertex, {}};
  point.positions[tree.all_leaves() & ~vertex] = {0, 1};
  for (LeafSet child : tree.children_of(vertex)) {
    point.positions[child] = child == bit(Leaf::numbered(i)) ? ProjectivePoint{1, 0} : ProjectivePoint{1, 1};
  }
  return kapranov_coords(point, i);
}

}  // namespace strata
