#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kummer/binary_field.hpp"
#include "kummer/factor_gf2.hpp"
#include "kummer/linalg.hpp"
#include "kummer/quad_ring.hpp"
#include "kummer/rational.hpp"

using namespace kummer;

TEST_CASE("rational arithmetic stays canonical") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK((a + Rational(1, 2)).is_one());
  CHECK((Rational(3, 7) * Rational(7, 3)).is_one());
  CHECK_THROWS(Rational(1) / Rational(0));

  // associativity / commutativity on a few fixed triples
  Rational x(3, 5), y(-7, 11), z(13, 2);
  CHECK((x + y) + z == x + (y + z));
  CHECK((x * y) * z == x * (y * z));
  CHECK(x + y == y + x);
  CHECK(x * y == y * x);
}

TEST_CASE("2-adic valuation and reduction") {
  CHECK(*v2(Rational(12)) == 2);
  CHECK(*v2(Rational(3, 8)) == -3);
  CHECK(!v2(Rational(0)));
  CHECK(mod2(Rational(5, 3)) == 1);
  CHECK(mod2(Rational(4, 7)) == 0);
  CHECK_THROWS(mod2(Rational(1, 2)));
}

TEST_CASE("binary field basics") {
  CHECK_THROWS(BinaryField::get(3, 0xf));  // x^3+x^2+x+1 = (x+1)(x^2+x+1)
  const BinaryField* F8 = BinaryField::get_default(3);
  CHECK(F8->modulus() == 0xd);  // t^3 + t^2 + 1
  F2k t = F8->gen();
  CHECK(t * t * t == t * t + F8->one());  // t^3 = t^2 + 1
  for (std::uint32_t i = 1; i < 8; ++i) {
    F2k a = F8->elem(i);
    CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("sqrt in characteristic two") {
  const BinaryField* F4 = BinaryField::get_default(2);
  CHECK(sqrt_char2(F4->zero()).is_zero());
  CHECK(sqrt_char2(F4->one()).is_one());
  // t in F4 (modulus t^2+t+1): sqrt(t) = t+1 since (t+1)^2 = t^2+1 = t
  F2k t = F4->gen();
  CHECK(sqrt_char2(t) == t + F4->one());
  // Frobenius bijectivity on a larger field
  const BinaryField* F64 = BinaryField::get_default(6);
  for (std::uint32_t i = 0; i < 64; ++i) {
    F2k a = F64->elem(i);
    CHECK(sqrt_char2(a) * sqrt_char2(a) == a);
    CHECK(sqrt_char2(a * a) == a);
  }
}

TEST_CASE("embedding F8 into F64") {
  const BinaryField* F8 = BinaryField::get_default(3);
  const BinaryField* F64 = BinaryField::get_default(6);
  F2k t = F8->gen();
  F2k im = F8->embed(t, F64);
  // the image satisfies the F8 modulus
  CHECK(im * im * im + im * im + F64->one() == F64->zero());
  // embedding is a field homomorphism on a sample
  F2k a = F8->elem(5), b = F8->elem(7);
  CHECK(F8->embed(a * b, F64) == F8->embed(a, F64) * F8->embed(b, F64));
  CHECK(F8->embed(a + b, F64) == F8->embed(a, F64) + F8->embed(b, F64));
}

TEST_CASE("univariate factorization over F2") {
  const BinaryField* F2 = BinaryField::get_default(1);
  // x^3+x^2+1 irreducible
  UPoly p = upoly::make(F2, {1, 0, 1, 1});
  CHECK(is_irreducible(p));
  auto fac = factor_over_binary_field(p);
  CHECK(fac.factors.size() == 1);
  CHECK(fac.factors[0].multiplicity == 1);

  // x^3+1 = (x+1)(x^2+x+1)
  auto fac2 = factor_over_binary_field(upoly::make(F2, {1, 0, 0, 1}));
  REQUIRE(fac2.factors.size() == 2);
  CHECK(upoly::degree(fac2.factors[0].factor) == 1);
  CHECK(upoly::degree(fac2.factors[1].factor) == 2);

  // x^2 = x * x
  auto fac3 = factor_over_binary_field(upoly::make(F2, {0, 0, 1}));
  REQUIRE(fac3.factors.size() == 1);
  CHECK(fac3.factors[0].multiplicity == 2);
  CHECK(upoly::degree(fac3.factors[0].factor) == 1);
}

TEST_CASE("factorization reproduces its input") {
  const BinaryField* F8 = BinaryField::get_default(3);
  // a few fixed polynomials over F8
  std::vector<UPoly> cases = {
      upoly::make(F8, {3, 1, 4, 1, 5}),
      upoly::make(F8, {1, 2, 3, 4, 5, 6, 7}),
      upoly::make(F8, {2, 0, 0, 0, 0, 0, 1}),
  };
  for (auto& p : cases) {
    auto fac = factor_over_binary_field(p, 42);
    UPoly prod = {fac.leading_unit};
    for (auto& [f, m] : fac.factors) {
      CHECK(is_irreducible(f));
      for (int i = 0; i < m; ++i) prod = upoly::mul(prod, f);
    }
    CHECK(prod == p);
  }
}

TEST_CASE("kernel of exact matrices") {
  // 2x2 identity over Q: full rank, empty kernel
  Matrix<Rational> id(2, 2, Rational(0));
  id.at(0, 0) = id.at(1, 1) = Rational(1);
  CHECK(kernel_basis(id, Rational(0), Rational(1)).empty());

  // [1 1] over F2 -> basis {(1,1)}
  const BinaryField* F2 = BinaryField::get_default(1);
  Matrix<F2k> m(1, 2, F2->zero());
  m.at(0, 0) = m.at(0, 1) = F2->one();
  auto ker = kernel_basis(m, F2->zero(), F2->one());
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0].is_one());
  CHECK(ker[0][1].is_one());

  // kernel vectors annihilate the matrix exactly over Q
  Matrix<Rational> a(2, 4, Rational(0));
  long vals[2][4] = {{1, 2, 3, 4}, {2, 4, 6, 9}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) a.at(i, j) = Rational(vals[i][j]);
  auto kq = kernel_basis(a, Rational(0), Rational(1));
  CHECK(kq.size() == 2);
  for (auto& v : kq)
    for (int i = 0; i < 2; ++i) {
      Rational dot(0);
      for (int j = 0; j < 4; ++j) dot += a.at(i, j) * v[j];
      CHECK(dot.is_zero());
    }
}

TEST_CASE("two-adic normalization") {
  using Vec = std::vector<Rational>;
  // already normalized
  auto b1 = two_adic_normalize({Vec{Rational(1), Rational(0)}, Vec{Rational(0), Rational(1)}});
  CHECK(b1[0] == Vec{Rational(1), Rational(0)});
  CHECK(b1[1] == Vec{Rational(0), Rational(1)});

  // {(2,0),(0,1)} -> {(1,0),(0,1)}
  auto b2 = two_adic_normalize({Vec{Rational(2), Rational(0)}, Vec{Rational(0), Rational(1)}});
  CHECK(b2[0] == Vec{Rational(1), Rational(0)});

  // {(1,1),(1,-1)}: reductions coincide; the fixed basis is {(1,1),(0,1)}
  auto b3 = two_adic_normalize({Vec{Rational(1), Rational(1)}, Vec{Rational(1), Rational(-1)}});
  CHECK(b3[0] == Vec{Rational(1), Rational(1)});
  CHECK(b3[1] == Vec{Rational(0), Rational(1)});

  CHECK_THROWS_AS(two_adic_normalize({Vec{Rational(1), Rational(1)}, Vec{Rational(2), Rational(2)}}),
                  std::invalid_argument);

  // span preserved and mod-2 reductions independent on a fixed sample
  std::vector<Vec> in = {Vec{Rational(4), Rational(6), Rational(2)},
                         Vec{Rational(2), Rational(3), Rational(5)},
                         Vec{Rational(1, 3), Rational(0), Rational(2, 3)}};
  auto out = two_adic_normalize(in);
  const BinaryField* F2 = BinaryField::get_default(1);
  Matrix<F2k> red(3, 3, F2->zero());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) red.at(i, j) = F2->elem(mod2(out[i][j]));
  CHECK(rank(red) == 3);
  // mutual containment of spans
  for (auto& v : in) {
    Matrix<Rational> m(3, 3, Rational(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = out[i][j];
    CHECK(in_row_span(out, v, Rational(0)));
  }
  for (auto& v : out) CHECK(in_row_span(in, v, Rational(0)));
}

TEST_CASE("quadratic ring arithmetic") {
  // w^2 = w + 88 in Z[(1+sqrt(353))/2]
  QuadElem w = quad(0, 1, 88);
  CHECK(w * w == w + quad(88, 0, 88));
  QuadElem a = quad(3, -2, 88);
  CHECK((a * a.inverse()).is_one());
}
