#ifndef KUMMER_GENUS2_HPP
#define KUMMER_GENUS2_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kummer/factor_gf2.hpp"
#include "kummer/quad_ring.hpp"
#include "kummer/rational.hpp"

namespace kummer {

// y^2 + g(x) y = f(x), deg f <= 6, deg g <= 3.
template <class K>
struct Genus2Curve {
  std::array<K, 7> f{};
  std::array<K, 4> g{};

  K eval_f(const K& x) const {
    K acc = f[6];
    for (int i = 5; i >= 0; --i) acc = acc * x + f[i];
    return acc;
  }
  K eval_g(const K& x) const {
    K acc = g[3];
    for (int i = 2; i >= 0; --i) acc = acc * x + g[i];
    return acc;
  }
  bool on_curve(const K& x, const K& y) const {
    return (y * y + eval_g(x) * y - eval_f(x)).is_zero();
  }
};

using CurveQ = Genus2Curve<Rational>;
using CurveQw = Genus2Curve<QuadElem>;

struct CurveF2 : Genus2Curve<F2k> {
  const BinaryField* F = nullptr;

  CurveF2() = default;
  CurveF2(const BinaryField* field, std::array<F2k, 7> ff, std::array<F2k, 4> gg)
      : Genus2Curve<F2k>{ff, gg}, F(field) {}

  UPoly f_poly() const {
    UPoly p(f.begin(), f.end());
    upoly::trim(p);
    return p;
  }
  UPoly g_poly() const {
    UPoly p(g.begin(), g.end());
    upoly::trim(p);
    return p;
  }
  CurveF2 lift_to(const BinaryField* target) const;  // coefficient-wise embedding
};

// ---- validity --------------------------------------------------------------

// char != 2: f + g^2/4 must be separable of degree six. Throws on failure.
void validate_char0(const CurveQ& c);
void validate_charQw(const CurveQw& c);

// char 2: geometric smoothness of the projective model (affine chart at the
// roots of g plus the chart at infinity), checked over the splitting field.
bool is_smooth_char2(const CurveF2& c, std::string* why = nullptr);

struct NormalizedCurve {
  CurveF2 curve;
  // the substitution x -> u0 + 1/x, y -> y/x^3 used, when one was needed
  std::optional<F2k> inversion_center;
};

// Returns an isomorphic model with deg g = 3 (the identity when already so).
// Throws "not smooth / not genus 2" or "insufficient field".
NormalizedCurve validate_and_normalize(const CurveF2& c);

// number of points of the smooth projective model over the base field
std::size_t count_points(const CurveF2& c);

// ---- p-rank and Weierstrass points ----------------------------------------

// requires deg g = 3; 2 = ordinary, 1 = almost ordinary, 0 = supersingular
int p_rank(const CurveF2& c);

struct WeierstrassPointC2 {
  F2k alpha, beta;  // g(alpha) = 0, beta^2 = f(alpha)
  int multiplicity;
};

// One point per distinct root of g, over GF(2^(k*d)) where d is the minimal
// splitting degree. Throws "extension required: degree d" when d exceeds
// allowed_ext.
std::vector<WeierstrassPointC2> weierstrass_points_char2(const CurveF2& c, int allowed_ext = 1);

int splitting_degree_of_g(const CurveF2& c);

// ---- 2-torsion combinatorics ------------------------------------------------

// Unordered pair of root indices, or the identity O (empty).
struct TwoTorsionClass {
  std::vector<int> pair;  // sorted, size 0 or 2

  static TwoTorsionClass O() { return {}; }
  static TwoTorsionClass ij(int i, int j);
  bool is_identity() const { return pair.empty(); }
  friend bool operator==(const TwoTorsionClass& a, const TwoTorsionClass& b) {
    return a.pair == b.pair;
  }
  friend bool operator<(const TwoTorsionClass& a, const TwoTorsionClass& b) {
    return a.pair < b.pair;
  }
};

// group law on even-cardinality subsets modulo complement (n = 6) or the
// Klein four group on pairs from {1..3} (n = 3)
TwoTorsionClass torsion_sum(const TwoTorsionClass& a, const TwoTorsionClass& b, int n);

// all classes: O plus the C(n,2) pairs
std::vector<TwoTorsionClass> all_torsion_classes(int n);

// ---- structure counts table --------------------------------------------------

struct StructureCounts {
  int tropes_ti = 0;
  int tropes_tijk = 0;           // primary alternative
  std::optional<int> tropes_tijk_alt;  // second alternative for ambiguous rows
  int singular_points = 0;
  std::string condition;  // discriminating condition for ambiguous rows
};

// `partition` = multiset of irreducible factor degrees (sum 6 for char 0,
// sum 3 for char 2)
StructureCounts rational_structure_counts(std::vector<int> partition, int characteristic);

}  // namespace kummer

#endif
