#ifndef KUMMER_RATIONAL_FUNCTION_HPP
#define KUMMER_RATIONAL_FUNCTION_HPP

#include "kummer/poly.hpp"

namespace kummer {

// Quotient of sparse polynomials. Only cheap normalization is performed:
// common monomial factors are cancelled; no multivariate gcd.
template <class K>
struct RatFun {
  Poly<K> num, den;

  RatFun() = default;
  RatFun(Poly<K> n, Poly<K> d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    strip_common_monomial();
  }
  static RatFun of(Poly<K> p, const K& one) {
    return RatFun(std::move(p), Poly<K>::constant(one));
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const {
    return den.n_terms() == 1 && den.t.front().first.is_one();
  }

  RatFun make_zero() const { return RatFun(Poly<K>::zero(), den_one()); }
  RatFun make_one() const {
    return RatFun(Poly<K>::constant(one_coeff()), den_one());
  }

  RatFun operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den == o.den) return RatFun(num + o.num, den);
    return RatFun(num * o.den + o.num * den, den * o.den);
  }
  RatFun operator-(const RatFun& o) const { return *this + (-o); }
  RatFun operator-() const {
    RatFun r = *this;
    r.num = -r.num;
    return r;
  }
  RatFun operator*(const RatFun& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    return RatFun(num * o.num, den * o.den);
  }
  RatFun operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return RatFun(num * o.den, den * o.num);
  }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return (a.num * b.den - b.num * a.den).is_zero();
  }

 private:
  K one_coeff() const {
    return den.t.front().second.make_one();
  }
  Poly<K> den_one() const { return Poly<K>::constant(one_coeff()); }

  void strip_common_monomial() {
    if (num.is_zero()) {
      den = den_one();
      return;
    }
    Monomial g = num.t.front().first;
    auto meet = [](const Monomial& a, const Monomial& b) {
      Monomial r;
      for (auto& [v, e] : a.vp) {
        std::uint16_t eb = b.exp(v);
        std::uint16_t m = std::min(e, eb);
        if (m) r.vp.push_back({v, m});
      }
      return r;
    };
    for (auto& [m, c] : num.t) g = meet(g, m);
    for (auto& [m, c] : den.t) g = meet(g, m);
    if (!g.is_one()) {
      for (auto& [m, c] : num.t) m = m.divide(g);
      for (auto& [m, c] : den.t) m = m.divide(g);
    }
  }
};

using QRat = RatFun<Rational>;
using F2Rat = RatFun<F2k>;

template <class K>
K eval_ratfun(const RatFun<K>& f, const std::map<Var, K>& a, const K& zero) {
  K d = f.den.eval(a, zero);
  if (d.is_zero()) throw std::domain_error("pole at assignment");
  return f.num.eval(a, zero) / d;
}

}  // namespace kummer

#endif
