#ifndef KUMMER_RATIONAL_HPP
#define KUMMER_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace kummer {

using Integer = mpz_class;

// Arbitrary-precision rational, backed by GMP. mpq_class keeps values
// canonical (gcd(num, den) = 1, den > 0) through arithmetic.
struct Rational {
  mpq_class v;

  Rational() : v(0) {}
  Rational(long n) : v(n) {}
  Rational(long n, long d) : v(n, d) { v.canonicalize(); }
  Rational(const Integer& n) : v(n) {}
  Rational(const Integer& n, const Integer& d) : v(n, d) {
    if (sgn(d) == 0) throw std::domain_error("zero denominator");
    v.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v(q) {}

  const Integer num() const { return v.get_num(); }
  const Integer den() const { return v.get_den(); }

  bool is_zero() const { return sgn(v) == 0; }
  bool is_one() const { return v == 1; }
  bool is_integer() const { return v.get_den() == 1; }
  Rational make_zero() const { return Rational(); }
  Rational make_one() const { return Rational(1); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v);
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v + b.v)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v - b.v)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v * b.v)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(a.v / b.v));
  }
  Rational operator-() const { return Rational(mpq_class(-v)); }
  Rational& operator+=(const Rational& o) { v += o.v; return *this; }
  Rational& operator-=(const Rational& o) { v -= o.v; return *this; }
  Rational& operator*=(const Rational& o) { v *= o.v; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v == b.v; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v != b.v; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v < b.v; }

  std::string str() const { return v.get_str(); }
};

inline long v2(const Integer& n) {
  if (sgn(n) == 0) throw std::domain_error("v2(0)");
  return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

// 2-adic valuation; nullopt for 0.
inline std::optional<long> v2(const Rational& q) {
  if (q.is_zero()) return std::nullopt;
  return v2(q.num()) - v2(q.den());
}

// Reduction mod 2 of a 2-integral rational (odd denominator).
inline int mod2(const Rational& q) {
  if (mpz_even_p(q.den().get_mpz_t())) throw std::domain_error("mod2: even denominator");
  return mpz_odd_p(q.num().get_mpz_t()) ? 1 : 0;
}

inline Rational pow2(long e) {
  Integer b = 1;
  b <<= (e >= 0 ? e : -e);
  return e >= 0 ? Rational(b) : Rational(Integer(1), b);
}

inline Rational parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return Rational(q);
}

}  // namespace kummer

#endif
