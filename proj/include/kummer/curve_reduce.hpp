#ifndef KUMMER_CURVE_REDUCE_HPP
#define KUMMER_CURVE_REDUCE_HPP

#include "kummer/poly.hpp"

namespace kummer {

// Rewrite rules y_i^2 = f(x_i) - g(x_i) y_i from the curve relations
// y_i^2 + g(x_i) y_i - f(x_i) = 0, i = 1,2.
template <class K>
struct CurveIdealReducer {
  Poly<K> fx1, gx1, fx2, gx2;

  // f(x_i), g(x_i) built from coefficient polynomials (which may be symbolic
  // f_j / g_j variables or concrete constants)
  static CurveIdealReducer from_coeffs(const std::array<Poly<K>, 7>& f,
                                       const std::array<Poly<K>, 4>& g, const K& one) {
    CurveIdealReducer r;
    auto build = [&](Var xv, const auto& cs) {
      Poly<K> acc;
      for (std::size_t i = 0; i < cs.size(); ++i)
        acc += cs[i] * Poly<K>::var(xv, one, static_cast<std::uint16_t>(i));
      return acc;
    };
    r.fx1 = build(var::x1, f);
    r.gx1 = build(var::x1, g);
    r.fx2 = build(var::x2, f);
    r.gx2 = build(var::x2, g);
    return r;
  }

  // fully symbolic curve: f_i, g_j stay variables
  static CurveIdealReducer symbolic(const K& one) {
    std::array<Poly<K>, 7> f;
    std::array<Poly<K>, 4> g;
    for (int i = 0; i <= 6; ++i) f[i] = Poly<K>::var(var::f(i), one);
    for (int j = 0; j <= 3; ++j) g[j] = Poly<K>::var(var::g(j), one);
    return from_coeffs(f, g, one);
  }

  Poly<K> reduce(Poly<K> p) const {
    p = reduce_var(std::move(p), var::y1, fx1, gx1);
    p = reduce_var(std::move(p), var::y2, fx2, gx2);
    // reducing y2 cannot reintroduce y1 powers
    return p;
  }

 private:
  static Poly<K> reduce_var(Poly<K> p, Var y, const Poly<K>& f, const Poly<K>& g) {
    Monomial y2 = Monomial::var(y, 2);
    for (;;) {
      Poly<K> low, rest;
      for (auto& [m, c] : p.t) {
        if (m.exp(y) >= 2)
          rest.t.push_back({m.divide(y2), c});
        else
          low.t.push_back({m, c});
      }
      if (rest.is_zero()) return low;
      Poly<K> one_y = Poly<K>::var(y, rest.t.front().second.make_one());
      p = low + rest * (f - g * one_y);
    }
  }
};

}  // namespace kummer

#endif
