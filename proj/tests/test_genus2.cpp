#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kummer/genus2.hpp"
#include "kummer/textio.hpp"

using namespace kummer;

namespace {

CurveF2 curve_f2(const BinaryField* F, const char* f_text, const char* g_text) {
  CurveF2 c;
  c.F = F;
  for (auto& z : c.f) z = F->zero();
  for (auto& z : c.g) z = F->zero();
  for (auto& [m, coeff] : parse_f2poly(f_text, F).t) c.f[m.exp(var::x)] = coeff;
  for (auto& [m, coeff] : parse_f2poly(g_text, F).t) c.g[m.exp(var::x)] = coeff;
  return c;
}

CurveQ curve_q(const char* f_text, const char* g_text) {
  CurveQ c;
  for (auto& [m, coeff] : parse_qpoly(f_text).t) c.f[m.exp(var::x)] = coeff;
  for (auto& [m, coeff] : parse_qpoly(g_text).t) c.g[m.exp(var::x)] = coeff;
  return c;
}

}  // namespace

TEST_CASE("characteristic zero validity") {
  CHECK_NOTHROW(validate_char0(curve_q("1*x^6 + -1", "0")));
  CHECK_THROWS(validate_char0(curve_q("1*x^6", "0")));
}

TEST_CASE("p-rank from the roots of g") {
  const BinaryField* F2 = BinaryField::get_default(1);
  CHECK(p_rank(curve_f2(F2, "1*x^6 + 1*x^2 + 1*x", "1*x^3 + 1*x^2 + 1")) == 2);
  CHECK(p_rank(curve_f2(F2, "1*x^5 + 1", "1*x^3 + 1*x^2")) == 1);
  CHECK(p_rank(curve_f2(F2, "1*x^5 + 1", "1*x^3")) == 0);
}

TEST_CASE("weierstrass points in characteristic two") {
  const BinaryField* F2 = BinaryField::get_default(1);
  // g = x^3, f with f0 = 1: single point (0,1) of multiplicity 3
  auto pts = weierstrass_points_char2(curve_f2(F2, "1*x^5 + 1", "1*x^3"));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].alpha.is_zero());
  CHECK(pts[0].beta.is_one());
  CHECK(pts[0].multiplicity == 3);

  // g = x^3+x^2+1 irreducible over F2: roots {t, t^2, t^2+t+1} in F8
  auto c = curve_f2(F2, "1*x^6 + 1*x^2 + 1*x", "1*x^3 + 1*x^2 + 1");
  CHECK_THROWS_WITH(weierstrass_points_char2(c, 1), "extension required: degree 3");
  auto pts8 = weierstrass_points_char2(c, 3);
  REQUIRE(pts8.size() == 3);
  const BinaryField* F8 = BinaryField::get_default(3);
  std::vector<std::uint32_t> alphas;
  for (auto& p : pts8) {
    CHECK(p.alpha.F == F8);
    CHECK(p.multiplicity == 1);
    CHECK(p.beta * p.beta == CurveF2(curve_f2(F2, "1*x^6 + 1*x^2 + 1*x",
                                              "1*x^3 + 1*x^2 + 1"))
                                 .lift_to(F8)
                                 .eval_f(p.alpha));
    alphas.push_back(p.alpha.bits);
  }
  // t, t^2, t^2+t+1 in the t^3 = t^2+1 representation
  std::vector<std::uint32_t> expect{0b010, 0b100, 0b111};
  CHECK(alphas == expect);

  // point count equals the number of distinct roots of g
  CHECK(weierstrass_points_char2(curve_f2(F2, "1*x^5 + 1", "1*x^3 + 1*x^2"), 1).size() == 2);
}

TEST_CASE("char-2 validity and normalization") {
  const BinaryField* F2 = BinaryField::get_default(1);
  // y^2 + x^3 y = x and the Theorem-7.2 reduction are smooth
  CHECK(is_smooth_char2(curve_f2(F2, "1*x", "1*x^3")));
  CHECK(is_smooth_char2(curve_f2(F2, "1*x^6 + 1*x^2 + 1*x", "1*x^3 + 1*x^2 + 1")));
  // g = 0 is never a genus-2 model in characteristic two
  CHECK(!is_smooth_char2(curve_f2(F2, "1*x^5 + 1", "0")));
  // y^2 + y = x^3 is elliptic: the normalized model must come out singular
  CHECK_THROWS(validate_and_normalize(curve_f2(F2, "1*x^3", "1")));

  // deg g = 1 model y^2 + y = x^5 normalizes to deg g = 3 over F2
  auto norm = validate_and_normalize(curve_f2(F2, "1*x^5", "1"));
  CHECK(!norm.curve.g[3].is_zero());
  CHECK(is_smooth_char2(norm.curve));
  CHECK(count_points(norm.curve) == count_points(curve_f2(F2, "1*x^5", "1")));

  // ordinary over F2 with the insufficient-field obstruction:
  // g = x^2 + x vanishes on all of F2
  CHECK_THROWS_WITH(validate_and_normalize(curve_f2(F2, "1*x^5 + 1*x^3 + 1", "1*x^2 + 1*x")),
                    "insufficient field: no substitution reaches deg g = 3");

  // the same shape over F4 has room
  const BinaryField* F4 = BinaryField::get_default(2);
  auto c4 = curve_f2(F4, "1*x^5 + 1*x^3 + 1", "1*x^2 + 1*x");
  if (is_smooth_char2(c4)) {
    auto n4 = validate_and_normalize(c4);
    CHECK(!n4.curve.g[3].is_zero());
    CHECK(count_points(n4.curve) == count_points(c4));
  }
}

TEST_CASE("2-torsion group law") {
  auto O = TwoTorsionClass::O();
  auto t12 = TwoTorsionClass::ij(1, 2), t13 = TwoTorsionClass::ij(1, 3);
  CHECK(torsion_sum(t12, t13, 6) == TwoTorsionClass::ij(2, 3));
  CHECK(torsion_sum(t12, t12, 6) == O);
  CHECK(torsion_sum(t12, TwoTorsionClass::ij(3, 4), 6) == TwoTorsionClass::ij(5, 6));

  // group axioms, exhaustively, for n = 6 and n = 3
  for (int n : {3, 6}) {
    auto all = all_torsion_classes(n);
    CHECK(all.size() == (n == 6 ? 16u : 4u));
    for (auto& a : all) {
      CHECK(torsion_sum(a, O, n) == a);
      CHECK(torsion_sum(a, a, n) == O);
      for (auto& b : all) {
        CHECK(torsion_sum(a, b, n) == torsion_sum(b, a, n));
        for (auto& c : all)
          CHECK(torsion_sum(torsion_sum(a, b, n), c, n) == torsion_sum(a, torsion_sum(b, c, n), n));
      }
    }
  }
}

TEST_CASE("structure count tables") {
  auto r = rational_structure_counts({1, 5}, 0);
  CHECK(r.tropes_ti == 1);
  CHECK(r.tropes_tijk == 0);
  CHECK(r.singular_points == 1);

  r = rational_structure_counts({3, 3}, 0);
  CHECK(r.tropes_ti == 0);
  CHECK(r.tropes_tijk == 1);
  CHECK(r.singular_points == 1);

  r = rational_structure_counts({1, 1, 1}, 2);
  CHECK(r.tropes_ti == 3);
  CHECK(r.tropes_tijk == 1);
  CHECK(r.singular_points == 4);

  // ambiguous rows report both alternatives and the discriminating condition
  r = rational_structure_counts({2, 2, 2}, 0);
  CHECK(r.tropes_tijk == 0);
  REQUIRE(r.tropes_tijk_alt);
  CHECK(*r.tropes_tijk_alt == 4);
  CHECK(!r.condition.empty());
  r = rational_structure_counts({6}, 0);
  CHECK(r.tropes_tijk == 0);
  REQUIRE(r.tropes_tijk_alt);
  CHECK(*r.tropes_tijk_alt == 1);

  CHECK_THROWS(rational_structure_counts({4, 4}, 0));

  // full table coverage
  CHECK(rational_structure_counts({1, 1, 1, 1, 1, 1}, 0).singular_points == 16);
  CHECK(rational_structure_counts({1, 1, 1, 1, 2}, 0).tropes_ti == 4);
  CHECK(rational_structure_counts({1, 1, 1, 3}, 0).singular_points == 4);
  CHECK(rational_structure_counts({1, 1, 2, 2}, 0).tropes_tijk == 2);
  CHECK(rational_structure_counts({1, 1, 4}, 0).tropes_ti == 2);
  CHECK(rational_structure_counts({1, 2, 3}, 0).singular_points == 2);
  CHECK(rational_structure_counts({2, 4}, 0).singular_points == 2);
  CHECK(rational_structure_counts({1, 2}, 2).tropes_ti == 1);
  CHECK(rational_structure_counts({3}, 2).tropes_tijk == 1);
}
