#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <vector>

#include "strata/slide.hpp"
#include "strata/sum.hpp"
#include "strata/tree.hpp"

namespace strata {

using Rational = boost::multiprecision::cpp_rational;

// Sparse formal linear combination of projective coordinates. Before
// restriction to a stratum a coordinate is a leaf index (z_b is index 1, z_j is
// index j+2); after restriction it is a part index of the branch partition.
class LinearForm {
 public:
  void add(int coordinate, const Rational& coefficient);
  Rational coefficient(int coordinate) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<int, Rational>& terms() const { return terms_; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::map<int, Rational> terms_;
};

// sum_e t^e * L_e with every L_e nonzero.
class LinearFormPoly {
 public:
  void add(int exponent, int coordinate, const Rational& coefficient);
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, LinearForm>& terms() const { return terms_; }
  std::optional<int> leading_exponent() const;

  friend bool operator==(const LinearFormPoly&, const LinearFormPoly&) = default;
  friend LinearFormPoly operator+(const LinearFormPoly& x, const LinearFormPoly& y);
  friend LinearFormPoly operator*(const Rational& scale, const LinearFormPoly& x);

 private:
  std::map<int, LinearForm> terms_;
};

// Exponent of z_r in the psi_i hyperplane: b -> 0, c -> 1, j < i -> j + 1,
// j > i -> j.
int psi_exponent(Leaf r, int i);

// z_b + t z_c + t^2 z_1 + ... with z_i skipped. Throws BadLeaf unless
// 1 <= i <= n.
LinearFormPoly hyperplane_psi(int i, int n);
// w_b + t w_c + t^2 w_1 + ... + t^i w_{i-1}.
LinearFormPoly hyperplane_omega(int i);
// The first listed coordinate with t^0, the next with t^1, and so on.
LinearFormPoly hyperplane_from_priority(const PriorityOrder& priority);

// Branch partition at leaf i, with part 0 holding a.
struct PSigma {
  SetPartitionAtLeaf partition;

  int part_of(Leaf leaf) const;
  // For each coordinate b, c, 1, ..., n (i skipped), the part index it copies;
  // 0 means the coordinate is identically zero.
  std::vector<int> coordinate_pattern(int n) const;
};

PSigma p_sigma(const StableTree& tree, int i);

// Substitutes z_r -> y_{sigma(r)} with y_0 = 0 and collects like terms.
LinearFormPoly restrict_to_stratum(const LinearFormPoly& h, const StableTree& tree, int i);

struct LimitCondition {
  bool degenerate = true;
  int coordinate = -1;  // part index m with limiting equation y_m = 0
  int exponent = -1;
};

// Reads off the minimal t-power term. Degenerate when the form is zero or the
// leading form involves more than one coordinate.
LimitCondition limit_condition(const LinearFormPoly& restricted);

// The limiting strata of X_T under the psi_i hyperplane, computed from the
// leading term and a brute-force search over one-edge refinements of T.
// Throws DegenerateRestriction.
std::vector<StableTree> oracle_slide(const StableTree& tree, int i);
// Same with an arbitrary hyperplane over leaf-index coordinates.
std::vector<StableTree> oracle_slide_with(const StableTree& tree, int i, const LinearFormPoly& hyperplane);

// Iterated one-parameter limits: for psi, oracle slides from the interior
// tree; for omega, leaf insertions interleaved with omega-hyperplane limits.
// Degenerate strata contribute nothing and are counted in `degenerate`.
StrataSum iterated_limit(const Composition& k, Flavor flavor, int* degenerate = nullptr);

// A point of P^1 written [x : w]; w = 0 is infinity.
struct ProjectivePoint {
  Rational x;
  Rational w = 1;
};

// A curve in X_T given by the positions of the branches around one internal
// vertex (identified by its clade).
struct StratumPoint {
  StableTree tree;
  LeafSet vertex = 0;
  std::map<LeafSet, ProjectivePoint> positions;
};

// |psi_i| at the point, as coordinates [z_b : z_c : z_1 : ... ] with z_i
// skipped, scaled so the first nonzero entry is 1. Throws BadParametrization.
std::vector<Rational> kapranov_coords(const StratumPoint& point, int i);

// For v_i trivalent: a-branch at 0, i at infinity, the remaining branch at 1.
std::vector<Rational> kapranov_coords_trivalent(const StableTree& tree, int i);

std::vector<Rational> normalize_projective(std::vector<Rational> coords);

}  // namespace strata
