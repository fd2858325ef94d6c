#ifndef KUMMER_POLY_HPP
#define KUMMER_POLY_HPP

#include <map>
#include <unordered_map>
#include <vector>

#include "kummer/binary_field.hpp"
#include "kummer/monomial.hpp"
#include "kummer/quad_ring.hpp"
#include "kummer/rational.hpp"

namespace kummer {

// n * c for small integers n, in whatever field K is.
inline Rational mul_int(const Rational& c, long n) { return c * Rational(n); }
inline F2k mul_int(const F2k& c, long n) { return (n % 2) ? c : c.make_zero(); }
inline QuadElem mul_int(const QuadElem& c, long n) { return {c.a * n, c.b * n, c.c}; }

// Sparse multivariate polynomial over an exact field K. Terms are kept in
// descending graded-lex order with nonzero coefficients.
template <class K>
struct Poly {
  using Term = std::pair<Monomial, K>;
  std::vector<Term> t;

  Poly() = default;

  static Poly zero() { return {}; }
  static Poly constant(const K& c) {
    Poly p;
    if (!c.is_zero()) p.t.push_back({Monomial::one(), c});
    return p;
  }
  static Poly var(Var v, const K& one, std::uint16_t e = 1) {
    Poly p;
    p.t.push_back({Monomial::var(v, e), one});
    return p;
  }
  static Poly term(const Monomial& m, const K& c) {
    Poly p;
    if (!c.is_zero()) p.t.push_back({m, c});
    return p;
  }

  bool is_zero() const { return t.empty(); }
  std::size_t n_terms() const { return t.size(); }
  int deg() const { return t.empty() ? -1 : t.front().first.deg(); }
  int deg_in(Var v) const {
    int d = 0;
    for (auto& [m, c] : t) d = std::max<int>(d, m.exp(v));
    return d;
  }
  const Term& leading() const { return t.front(); }

  K coeff(const Monomial& m) const {
    for (auto& [mm, c] : t)
      if (mm == m) return c;
    return t.empty() ? K{} : t.front().second.make_zero();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.t == b.t; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.t) c = -c;
    return r;
  }

  Poly operator+(const Poly& o) const {
    Poly r;
    r.t.reserve(t.size() + o.t.size());
    auto i = t.begin(), j = o.t.begin();
    while (i != t.end() || j != o.t.end()) {
      if (j == o.t.end() || (i != t.end() && mono_less(j->first, i->first)))
        r.t.push_back(*i++);
      else if (i == t.end() || mono_less(i->first, j->first))
        r.t.push_back(*j++);
      else {
        K c = i->second + j->second;
        if (!c.is_zero()) r.t.push_back({i->first, c});
        ++i, ++j;
      }
    }
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::unordered_map<Monomial, K, MonoHash> acc;
    acc.reserve(t.size() * o.t.size() / 2 + 8);
    for (auto& [m1, c1] : t)
      for (auto& [m2, c2] : o.t) {
        K c = c1 * c2;
        if (c.is_zero()) continue;
        Monomial m = m1 * m2;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), std::move(c));
        else {
          it->second = it->second + c;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    return from_map(acc);
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const K& c) const {
    if (c.is_zero()) return {};
    Poly r = *this;
    for (auto& [m, cc] : r.t) cc = cc * c;
    return r;
  }

  Poly times_mono(const Monomial& m) const {
    Poly r = *this;
    for (auto& [mm, c] : r.t) mm = mm * m;
    return r;
  }

  Poly pow(unsigned e) const {
    if (e == 0) {
      if (is_zero()) throw std::domain_error("0^0");
      return constant(t.front().second.make_one());
    }
    Poly r = *this, acc;
    bool first = true;
    unsigned ee = e;
    while (ee) {
      if (ee & 1) {
        acc = first ? r : acc * r;
        first = false;
      }
      ee >>= 1;
      if (ee) r = r * r;
    }
    return acc;
  }

  // Formal partial derivative. Characteristic is respected through mul_int.
  Poly derivative(Var v) const {
    Poly r;
    for (auto& [m, c] : t) {
      std::uint16_t e = m.exp(v);
      if (!e) continue;
      K cc = mul_int(c, e);
      if (cc.is_zero()) continue;
      r.t.push_back({m.divide(Monomial::var(v)), cc});
    }
    std::sort(r.t.begin(), r.t.end(),
              [](const Term& a, const Term& b) { return mono_less(b.first, a.first); });
    return r;
  }

  // Evaluate with values of type L; conv turns a K coefficient into an L.
  template <class L, class Conv>
  L eval_conv(const std::map<Var, L>& a, Conv conv, const L& zero) const {
    L acc = zero;
    for (auto& [m, c] : t) {
      L v = conv(c);
      for (auto& [var, e] : m.vp) {
        auto it = a.find(var);
        if (it == a.end()) throw std::invalid_argument("unassigned variable: " + var_name(var));
        for (int i = 0; i < e; ++i) v = v * it->second;
      }
      acc = acc + v;
    }
    return acc;
  }

  K eval(const std::map<Var, K>& a, const K& zero) const {
    return eval_conv<K>(a, [](const K& c) { return c; }, zero);
  }

  // Substitute polynomials for a subset of variables; untouched variables
  // stay symbolic.
  Poly subst(const std::map<Var, Poly>& sub) const {
    Poly acc;
    for (auto& [m, c] : t) {
      Poly term = constant(c);
      for (auto& [var, e] : m.vp) {
        auto it = sub.find(var);
        if (it == sub.end())
          term = term.times_mono(Monomial::var(var, e));
        else
          term = term * it->second.pow(e);
      }
      acc += term;
    }
    return acc;
  }

  // Exact division; throws if the division leaves a remainder.
  Poly divide_exact(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero poly");
    Poly r = *this, q;
    while (!r.is_zero()) {
      auto& [lm, lc] = r.t.front();
      if (!lm.divisible_by(d.t.front().first))
        throw std::domain_error("inexact polynomial division");
      Monomial qm = lm.divide(d.t.front().first);
      K qc = lc / d.t.front().second;
      q.t.push_back({qm, qc});
      r -= d.times_mono(qm).scaled(qc);
    }
    std::sort(q.t.begin(), q.t.end(),
              [](const Term& a, const Term& b) { return mono_less(b.first, a.first); });
    return q;
  }

  static Poly from_map(const std::unordered_map<Monomial, K, MonoHash>& acc) {
    Poly r;
    r.t.reserve(acc.size());
    for (auto& [m, c] : acc) r.t.push_back({m, c});
    std::sort(r.t.begin(), r.t.end(),
              [](const Term& a, const Term& b) { return mono_less(b.first, a.first); });
    return r;
  }
};

using QPoly = Poly<Rational>;
using F2Poly = Poly<F2k>;

// Univariate view helpers (polynomials in a single variable).
template <class K>
std::vector<K> coeff_vector(const Poly<K>& p, Var v, const K& zero) {
  std::vector<K> c(p.deg_in(v) + 1, zero);
  for (auto& [m, cc] : p.t) {
    if (m.vp.size() > 1 || (m.vp.size() == 1 && m.vp[0].first != v))
      throw std::invalid_argument("not univariate in " + var_name(v));
    c[m.exp(v)] = cc;
  }
  return c;
}

}  // namespace kummer

#endif
