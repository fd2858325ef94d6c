#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kummer/curve_reduce.hpp"
#include "kummer/rational_function.hpp"
#include "kummer/textio.hpp"
#include "kummer/weights.hpp"

using namespace kummer;

TEST_CASE("polynomial arithmetic and evaluation") {
  QPoly p = parse_qpoly("1*x1 + 1*x2");
  std::map<Var, Rational> a{{var::x1, Rational(3)}, {var::x2, Rational(5)}};
  CHECK(p.eval(a, Rational(0)) == Rational(8));

  QPoly q = parse_qpoly("2*x1^2 + -3/4*x2");
  CHECK((p * q).eval(a, Rational(0)) == p.eval(a, Rational(0)) * q.eval(a, Rational(0)));
  CHECK((p + q).eval(a, Rational(0)) == p.eval(a, Rational(0)) + q.eval(a, Rational(0)));
  CHECK_THROWS(p.eval({{var::x1, Rational(1)}}, Rational(0)));

  // evaluate is a ring homomorphism on a slightly larger sample
  QPoly r = parse_qpoly("1*x1^3*x2 + 7*x1 + -2");
  CHECK((q * r).eval(a, Rational(0)) == q.eval(a, Rational(0)) * r.eval(a, Rational(0)));
}

TEST_CASE("text format round trip") {
  const std::string texts[] = {
      "1*k2^2*k4^2",
      "3/4*x1^2 + -2*x1*x2 + 5",
      "1*f3*k11*k12 + 2*g1^2",
  };
  for (auto& s : texts) {
    QPoly p = parse_qpoly(s);
    CHECK(parse_qpoly(to_text(p)) == p);
  }
  const BinaryField* F8 = BinaryField::get_default(3);
  F2Poly p2 = parse_f2poly("[5]*x1^2*y2 + [1]*x2 + [7]", F8);
  CHECK(parse_f2poly(to_text(p2), F8) == p2);
  CHECK(to_text(parse_qpoly("0")) == "0");
}

TEST_CASE("rational function pole detection") {
  // 1/(x1+x2) has a pole on the diagonal
  QRat f(parse_qpoly("1"), parse_qpoly("1*x1 + -1*x2"));
  std::map<Var, Rational> diag{{var::x1, Rational(2)}, {var::x2, Rational(2)}};
  CHECK_THROWS_AS(eval_ratfun(f, diag, Rational(0)), std::domain_error);
  std::map<Var, Rational> off{{var::x1, Rational(2)}, {var::x2, Rational(3)}};
  CHECK(eval_ratfun(f, off, Rational(0)) == Rational(-1));
}

TEST_CASE("curve ideal reduction") {
  const BinaryField* F2 = BinaryField::get_default(1);
  // g = x^3, f = 1 in characteristic two: y1^2 -> x1^3 y1 + 1
  std::array<F2Poly, 7> f{};
  std::array<F2Poly, 4> g{};
  f[0] = F2Poly::constant(F2->one());
  g[3] = F2Poly::constant(F2->one());
  auto red = CurveIdealReducer<F2k>::from_coeffs(f, g, F2->one());

  F2Poly y1 = F2Poly::var(var::y1, F2->one());
  CHECK(red.reduce(y1) == y1);

  F2Poly y1sq = F2Poly::var(var::y1, F2->one(), 2);
  F2Poly expect = parse_f2poly("[1]*x1^3*y1 + [1]", F2);
  CHECK(red.reduce(y1sq) == expect);

  // idempotent
  CHECK(red.reduce(red.reduce(y1sq)) == red.reduce(y1sq));

  // reduce_mod_curve(p) - p vanishes at curve points: y^2 + x^3 y = 1
  const BinaryField* F16 = BinaryField::get_default(4);
  std::array<F2Poly, 7> f16{};
  std::array<F2Poly, 4> g16{};
  f16[0] = F2Poly::constant(F16->one());
  g16[3] = F2Poly::constant(F16->one());
  auto red16 = CurveIdealReducer<F2k>::from_coeffs(f16, g16, F16->one());
  int checked = 0;
  for (std::uint32_t xb = 0; xb < 16 && checked < 4; ++xb)
    for (std::uint32_t yb = 0; yb < 16 && checked < 4; ++yb) {
      F2k x = F16->elem(xb), y = F16->elem(yb);
      if (!(y * y + x * x * x * y + F16->one()).is_zero()) continue;
      ++checked;
      std::map<Var, F2k> a{{var::x1, x}, {var::y1, y}, {var::x2, x}, {var::y2, y}};
      F2Poly p = parse_f2poly("[1]*y1^3*x1 + [1]*y1^2*y2^2 + [1]*x2", F16);
      CHECK(red16.reduce(p).eval(a, F16->zero()) == p.eval(a, F16->zero()));
    }
  CHECK(checked > 0);
}

TEST_CASE("weights of basis elements") {
  const auto& ws = WeightSystem::standard();
  CHECK(ws.weight(Monomial::var(var::k(4))) == WeightPair{2, 4});
  CHECK(ws.weight(Monomial::var(var::x1)) == WeightPair{0, 1});
  Monomial m = Monomial::var(var::f(3)) * Monomial::var(var::krs(1, 1)) *
               Monomial::var(var::krs(1, 2));
  CHECK(ws.weight(m) == WeightPair{2, 4});
  // additivity
  Monomial m1 = Monomial::var(var::g(1), 2), m2 = Monomial::var(var::b(6));
  auto w1 = ws.weight(m1), w2 = ws.weight(m2), w12 = ws.weight(m1 * m2);
  CHECK(w12 == WeightPair{w1.first + w2.first, w1.second + w2.second});

  // homogeneous / inhomogeneous polynomials
  QPoly h = parse_qpoly("1*f3*k1^2*k1*k2 + 2*g1*g2*k1^3*k2");
  CHECK(*ws.weight(h) == WeightPair{2, 4});
  QPoly ih = parse_qpoly("1*f3 + 1*g1");
  CHECK(!ws.weight(ih));
}

TEST_CASE("weighted monomial enumeration") {
  const auto& ws = WeightSystem::standard();

  // target (0,0) over the f/g pool with quartic k-part of weight zero: {k1^4}
  auto zero = enumerate_weighted_monomials(ws, {0, 0}, fg_k_pool(4), {k_group(4)});
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == Monomial::var(var::k(1), 4));

  // the 23 monomials of weight (2,4): compare against the printed list
  auto m24 = enumerate_weighted_monomials(ws, {2, 4}, fg_k_pool(4), {k_group(4)});
  CHECK(m24.size() == 23);
  const char* printed[] = {
      "g1^2*k1^4",     "g0*g2*k1^4",    "f2*k1^4",       "g1*g2*k1^3*k2", "g0*g3*k1^3*k2",
      "f3*k1^3*k2",    "g2^2*k1^3*k3",  "g1*g3*k1^3*k3", "f4*k1^3*k3",    "k1^3*k4",
      "g2^2*k1^2*k2^2", "g1*g3*k1^2*k2^2", "f4*k1^2*k2^2", "g2*g3*k1^2*k2*k3", "f5*k1^2*k2*k3",
      "g3^2*k1^2*k3^2", "f6*k1^2*k3^2",  "g2*g3*k1*k2^3", "f5*k1*k2^3",    "g3^2*k1*k2^2*k3",
      "f6*k1*k2^2*k3", "g3^2*k2^4",     "f6*k2^4"};
  std::vector<Monomial> expect;
  for (auto* s : printed) expect.push_back(parse_qpoly(std::string("1*") + s).t.front().first);
  std::sort(expect.begin(), expect.end(), mono_less);
  auto got = m24;
  std::sort(got.begin(), got.end(), mono_less);
  CHECK(got == expect);

  // canonical k_rs pairing: sorted indices split in half
  CHECK(to_krs_pairs(parse_qpoly("1*k1^2*k2*k3").t.front().first) ==
        Monomial::var(var::krs(1, 1)) * Monomial::var(var::krs(2, 3)));
  CHECK(to_krs_pairs(parse_qpoly("1*k1*k2^2*k3").t.front().first) ==
        Monomial::var(var::krs(1, 2)) * Monomial::var(var::krs(2, 3)));
  CHECK(from_krs_pairs(Monomial::var(var::krs(1, 4))) ==
        Monomial::var(var::k(1)) * Monomial::var(var::k(4)));

  // count for the weight of b6^2 = (10,14)
  auto big = enumerate_weighted_monomials(ws, {10, 14}, fg_k_pool(4), {k_group(4)});
  CHECK(big.size() == 8374);

  // exhaustiveness cross-check against naive bounded enumeration on (2,4)
  std::vector<Monomial> naive;
  {
    // iterate all f/g monomials of degree <= 2 and k-deg-4 monomials
    std::vector<Monomial> fgs{Monomial::one()};
    std::vector<Var> pool;
    for (int i = 0; i <= 6; ++i) pool.push_back(var::f(i));
    for (int j = 0; j <= 3; ++j) pool.push_back(var::g(j));
    for (Var a : pool) {
      fgs.push_back(Monomial::var(a));
      for (Var b : pool)
        if (b >= a) fgs.push_back(Monomial::var(a) * Monomial::var(b));
    }
    for (auto& fg : fgs)
      for (int e1 = 0; e1 <= 4; ++e1)
        for (int e2 = 0; e2 + e1 <= 4; ++e2)
          for (int e3 = 0; e1 + e2 + e3 <= 4; ++e3) {
            int e4 = 4 - e1 - e2 - e3;
            Monomial m = fg * Monomial::var(var::k(1), e1) * Monomial::var(var::k(2), e2) *
                         Monomial::var(var::k(3), e3) * Monomial::var(var::k(4), e4);
            if (WeightSystem::standard().weight(m) == WeightPair{2, 4}) naive.push_back(m);
          }
    std::sort(naive.begin(), naive.end(), mono_less);
    naive.erase(std::unique(naive.begin(), naive.end()), naive.end());
  }
  CHECK(naive == got);
}
