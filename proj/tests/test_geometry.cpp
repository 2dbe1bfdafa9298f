#include <doctest.h>

#include "oracle.hpp"
#include "strata/geometry.hpp"
#include "support.hpp"

using namespace strata;
using support::code_of;
using support::tree;

namespace {

LeafSet set_of(std::initializer_list<const char*> labels) {
  LeafSet out = 0;
  for (const char* label : labels) out |= bit(Leaf::parse(label));
  return out;
}

int z(const char* label) { return Leaf::parse(label).index(); }

LinearFormPoly poly(std::initializer_list<std::pair<int, int>> exponent_coordinate) {
  LinearFormPoly out;
  for (const auto& [e, c] : exponent_coordinate) out.add(e, c, 1);
  return out;
}

// Rewrites part indices of the partition at i on `fine` into part indices of
// the partition at i on `coarse`.
LinearFormPoly merge_parts(const LinearFormPoly& h, const StableTree& fine, const StableTree& coarse, int i) {
  const PSigma from = p_sigma(fine, i);
  const PSigma to = p_sigma(coarse, i);
  LinearFormPoly out;
  for (const auto& [e, form] : h.terms()) {
    for (const auto& [part, coefficient] : form.terms()) {
      const Leaf representative = members(from.partition.blocks[part]).front();
      const int target = to.part_of(representative);
      if (target != 0) out.add(e, target, coefficient);
    }
  }
  return out;
}

const StableTree kBranchesTree =
    StableTree::from_splits(4, {set_of({"1", "3"}), set_of({"1", "2", "3", "4"}), set_of({"c", "1", "2", "3", "4"})});

}  // namespace

TEST_CASE("psi hyperplanes") {
  CHECK(hyperplane_psi(1, 2) == poly({{0, z("b")}, {1, z("c")}, {2, z("2")}}));
  CHECK(hyperplane_psi(2, 2) == poly({{0, z("b")}, {1, z("c")}, {2, z("1")}}));
  const LinearFormPoly last = hyperplane_psi(4, 4);
  CHECK(last == poly({{0, z("b")}, {1, z("c")}, {2, z("1")}, {3, z("2")}, {4, z("3")}}));
  CHECK(code_of([] { hyperplane_psi(0, 2); }) == ErrorCode::BadLeaf);
  CHECK(code_of([] { hyperplane_psi(3, 2); }) == ErrorCode::BadLeaf);
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      if (j != i) CHECK(psi_exponent(Leaf::numbered(j), i) == (j < i ? j + 1 : j));
    }
  }
}

TEST_CASE("omega hyperplanes") {
  CHECK(hyperplane_omega(1) == poly({{0, z("b")}, {1, z("c")}}));
  CHECK(hyperplane_omega(3) == poly({{0, z("b")}, {1, z("c")}, {2, z("1")}, {3, z("2")}}));
  CHECK(hyperplane_omega(3).leading_exponent() == 0);
  CHECK(hyperplane_from_priority({Leaf::b(), Leaf::numbered(3)}) == poly({{0, z("b")}, {1, z("3")}}));
}

TEST_CASE("coordinate pattern of a branch partition") {
  // Branches at 2: {a,b,c}, {1,3}, {4}.
  const StableTree t = StableTree::from_splits(4, {set_of({"1", "3"}), set_of({"1", "2", "3", "4"})});
  const PSigma sigma = p_sigma(t, 2);
  CHECK(sigma.coordinate_pattern(4) == std::vector<int>{0, 0, 1, 1, 2});
  CHECK(sigma.part_of(Leaf::a()) == 0);
  CHECK(sigma.part_of(Leaf::numbered(3)) == 1);
}

TEST_CASE("restriction to the interior is the identity substitution") {
  for (int n = 1; n <= 5; ++n) {
    const StableTree interior = StableTree::interior(n);
    for (int i = 1; i <= n; ++i) {
      const LinearFormPoly h = hyperplane_psi(i, n);
      const LinearFormPoly restricted = restrict_to_stratum(h, interior, i);
      const PSigma sigma = p_sigma(interior, i);
      LinearFormPoly renamed;
      for (const auto& [e, form] : h.terms()) {
        for (const auto& [coordinate, coefficient] : form.terms()) {
          renamed.add(e, sigma.part_of(Leaf::from_index(coordinate)), coefficient);
        }
      }
      CHECK(restricted == renamed);
      CHECK(restricted.terms().size() == h.terms().size());
    }
  }
}

TEST_CASE("restriction on D(ab|c12) at 1") {
  const StableTree d = tree(2, "D(ab|c12)");
  const LinearFormPoly restricted = restrict_to_stratum(hyperplane_psi(1, 2), d, 1);
  const PSigma sigma = p_sigma(d, 1);
  CHECK(restricted.leading_exponent() == 1);
  const LimitCondition limit = limit_condition(restricted);
  CHECK_FALSE(limit.degenerate);
  CHECK(limit.exponent == 1);
  CHECK(limit.coordinate == sigma.part_of(Leaf::c()));
}

TEST_CASE("limit conditions") {
  CHECK(limit_condition(LinearFormPoly{}).degenerate);
  CHECK(limit_condition(poly({{0, 1}, {0, 2}})).degenerate);
  const LimitCondition single = limit_condition(poly({{2, 3}, {3, 1}}));
  CHECK_FALSE(single.degenerate);
  CHECK(single.coordinate == 3);
  CHECK(single.exponent == 2);

  // b and c sit on the a-branch, so the t^2 term leads.
  const StableTree t = tree(2, "D(abc|12)");
  const LinearFormPoly h = hyperplane_from_priority({Leaf::b(), Leaf::c(), Leaf::numbered(1)});
  const LimitCondition limit = limit_condition(restrict_to_stratum(h, t, 2));
  CHECK_FALSE(limit.degenerate);
  CHECK(limit.exponent == 2);
}

TEST_CASE("leading exponent tracks the i-minimal point") {
  for (int n = 1; n <= 4; ++n) {
    for_each_stable(n, [&](const StableTree& t) {
      for (int i = 1; i <= n; ++i) {
        const LimitCondition limit = limit_condition(restrict_to_stratum(hyperplane_psi(i, n), t, i));
        REQUIRE_FALSE(limit.degenerate);
        const Leaf m = i_minimal_point(t, i);
        CHECK(limit.exponent == psi_exponent(m, i));
        CHECK(limit.coordinate == p_sigma(t, i).part_of(m));
      }
    });
  }
}

TEST_CASE("restriction is linear") {
  const LinearFormPoly x = hyperplane_psi(2, 4);
  const LinearFormPoly y = hyperplane_from_priority({Leaf::c(), Leaf::numbered(4), Leaf::numbered(1)});
  for_each_stable(4, [&](const StableTree& t) {
    const LinearFormPoly sum = restrict_to_stratum(x + y, t, 2);
    CHECK(sum == restrict_to_stratum(x, t, 2) + restrict_to_stratum(y, t, 2));
    CHECK(restrict_to_stratum(Rational(3, 2) * x, t, 2) == Rational(3, 2) * restrict_to_stratum(x, t, 2));
  });
}

TEST_CASE("restricting to a refinement is merging blocks of the coarse partition") {
  for (int n = 2; n <= 4; ++n) {
    for_each_stable(n, [&](const StableTree& t) {
      for (LeafSet side : t.splits()) {
        const StableTree coarse = contract_split(t, side);
        for (int i = 1; i <= n; ++i) {
          const LinearFormPoly h = hyperplane_psi(i, n);
          CHECK(restrict_to_stratum(h, t, i) == merge_parts(restrict_to_stratum(h, coarse, i), coarse, t, i));
        }
      }
    });
  }
}

TEST_CASE("oracle slides") {
  SUBCASE("trivalent v_i gives nothing") {
    for (const StableTree& t : enumerate_trivalent(3)) {
      for (int i = 1; i <= 3; ++i) CHECK(oracle_slide(t, i).empty());
    }
    CHECK(oracle_slide(tree(2, "D(abc|12)"), 2).empty());
  }
  SUBCASE("D(ab|c12) at 2") {
    const auto out = oracle_slide(tree(2, "D(ab|c12)"), 2);
    CHECK(out == std::vector<StableTree>{tree(2, "(ab)-(c)-(12)")});
  }
  SUBCASE("agreement with slide_i up to n = 4") {
    for (int n = 1; n <= 4; ++n) {
      for_each_stable(n, [&](const StableTree& t) {
        for (int i = 1; i <= n; ++i) CHECK(oracle_slide(t, i) == slide_i(t, i));
      });
    }
  }
  SUBCASE("priority hyperplanes match generalized slides") {
    const PriorityOrder order{Leaf::numbered(1), Leaf::b(), Leaf::numbered(4), Leaf::numbered(2)};
    for_each_stable(4, [&](const StableTree& t) {
      const LinearFormPoly h = hyperplane_from_priority(order);
      LimitCondition limit = limit_condition(restrict_to_stratum(h, t, 3));
      if (limit.degenerate) return;
      CHECK(oracle_slide_with(t, 3, h) == generalized_slide(t, 3, order));
    });
  }
}

TEST_CASE("iterated limits") {
  SUBCASE("psi_1 psi_2 is two points") {
    int degenerate = 0;
    const StrataSum limit = iterated_limit({1, 1}, Flavor::Psi, &degenerate);
    CHECK(limit.size() == 2);
    CHECK(limit.multiplicity_free());
    CHECK(degenerate == 0);
  }
  SUBCASE("the (1,0,2) examples") {
    CHECK(iterated_limit({1, 0, 2}, Flavor::Psi) == slide_set_psi({1, 0, 2}));
    CHECK(iterated_limit({1, 0, 2}, Flavor::Omega) == slide_set_omega({1, 0, 2}));
    CHECK(iterated_limit({1, 0, 2}, Flavor::Psi).size() == 3);
    CHECK(iterated_limit({1, 0, 2}, Flavor::Omega).size() == 2);
  }
  SUBCASE("agreement with slide sets up to n = 4") {
    for (int n = 1; n <= 4; ++n) {
      for (int sum = 0; sum <= n; ++sum) {
        for (const Composition& k : weak_compositions(sum, n)) {
          CHECK(iterated_limit(k, Flavor::Psi) == slide_set_psi(k, {false}));
          CHECK(iterated_limit(k, Flavor::Omega) == slide_set_omega(k, {false}));
        }
      }
    }
  }
  SUBCASE("bad compositions") {
    CHECK(code_of([] { iterated_limit({2, 1}, Flavor::Psi); }) == ErrorCode::BadComposition);
  }
}

TEST_CASE("Kapranov coordinates on the branches curve") {
  const Rational s = 3;
  const Rational t = 5;
  StratumPoint point{kBranchesTree, set_of({"1", "2", "3", "4"}), {}};
  point.positions[set_of({"a", "b", "c"})] = {0, 1};
  point.positions[set_of({"2"})] = {t, 1};
  point.positions[set_of({"1", "3"})] = {s, 1};
  point.positions[set_of({"4"})] = {1, 0};
  // [0:0:s:t:s] and [0:0:s:s:s-t], scaled to lead with 1.
  CHECK(kapranov_coords(point, 4) == std::vector<Rational>{0, 0, 1, t / s, 1});
  CHECK(kapranov_coords(point, 2) == std::vector<Rational>{0, 0, 1, 1, (s - t) / s});

  SUBCASE("moving the parameters") {
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) {
        if (a == b) continue;
        point.positions[set_of({"2"})] = {b, 1};
        point.positions[set_of({"1", "3"})] = {a, 1};
        CHECK(kapranov_coords(point, 4) == normalize_projective({0, 0, a, b, a}));
      }
    }
  }
  SUBCASE("bad parametrizations") {
    CHECK(code_of([&] { kapranov_coords(point, 1); }) == ErrorCode::BadParametrization);
    StratumPoint collide = point;
    collide.positions[set_of({"2"})] = {s, 1};
    CHECK(code_of([&] { kapranov_coords(collide, 4); }) == ErrorCode::BadParametrization);
    StratumPoint missing = point;
    missing.positions.erase(set_of({"2"}));
    CHECK(code_of([&] { kapranov_coords(missing, 4); }) == ErrorCode::BadParametrization);
    StratumPoint elsewhere = point;
    elsewhere.vertex = set_of({"1", "3", "c"});
    CHECK(code_of([&] { kapranov_coords(elsewhere, 4); }) == ErrorCode::BadParametrization);
  }
}

TEST_CASE("trivalent components have constant coordinates") {
  for (const StableTree& t : enumerate_trivalent(3)) {
    for (int i = 1; i <= 3; ++i) {
      const auto coords = kapranov_coords_trivalent(t, i);
      const SetPartitionAtLeaf at = branches_at(t, Leaf::numbered(i));
      std::size_t slot = 0;
      for (int index = Leaf::kB; index < t.leaf_count(); ++index) {
        if (index == Leaf::numbered(i).index()) continue;
        CHECK(coords[slot++] == (contains(at.blocks[0], index) ? 0 : 1));
      }
    }
  }
  CHECK(code_of([] { kapranov_coords_trivalent(StableTree::interior(2), 1); }) == ErrorCode::BadParametrization);
}

TEST_CASE("normalize_projective") {
  CHECK(normalize_projective({0, 2, 4}) == std::vector<Rational>{0, 1, 2});
  CHECK(normalize_projective({0, -3, 1}) == std::vector<Rational>{0, 1, Rational(-1, 3)});
}
