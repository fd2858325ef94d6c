#ifndef KUMMER_QUAD_RING_HPP
#define KUMMER_QUAD_RING_HPP

#include <stdexcept>

#include "kummer/rational.hpp"

namespace kummer {

// a + b*w in the quadratic order with w^2 = w + c. Components are rationals
// so that models with odd denominators can still be reduced at two.
struct QuadElem {
  Rational a, b;
  long c = 0;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_one() const { return a.is_one() && b.is_zero(); }
  QuadElem make_zero() const { return {Rational(0), Rational(0), c}; }
  QuadElem make_one() const { return {Rational(1), Rational(0), c}; }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.a == y.a && x.b == y.b && (x.is_zero() || y.is_zero() || x.c == y.c);
  }
  friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

  QuadElem operator+(const QuadElem& o) const { check(o); return {a + o.a, b + o.b, tag(o)}; }
  QuadElem operator-(const QuadElem& o) const { check(o); return {a - o.a, b - o.b, tag(o)}; }
  QuadElem operator-() const { return {-a, -b, c}; }
  QuadElem operator*(const QuadElem& o) const {
    check(o);
    // (a1 + b1 w)(a2 + b2 w), w^2 = w + c
    return {a * o.a + b * o.b * c, a * o.b + b * o.a + b * o.b, tag(o)};
  }
  QuadElem operator/(const QuadElem& o) const { return *this * o.inverse(); }
  QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
  QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }
  QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }

  // norm (a + bw)(a + b(1-w)) = a^2 + ab - b^2 c
  Rational norm() const { return a * a + a * b - b * b * c; }

  QuadElem inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("inverse of zero divisor");
    // conjugate is (a+b) - b*w
    return {(a + b) / n, -b / n, c};
  }

 private:
  void check(const QuadElem& o) const {
    if (!is_zero() && !o.is_zero() && c != o.c)
      throw std::invalid_argument("quadratic ring mismatch");
  }
  long tag(const QuadElem& o) const { return is_zero() ? o.c : c; }
};

inline QuadElem quad(long a, long b, long c) {
  return {Rational(a), Rational(b), c};
}

}  // namespace kummer

#endif
