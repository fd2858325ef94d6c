#include "kummer/models.hpp"
#include "kummer/textio.hpp"

namespace kummer {

namespace {

// g(x_i) with symbolic coefficient variables
F2Poly g_at(const BinaryField* F, Var xv) {
  F2Poly acc;
  for (int j = 0; j <= 3; ++j)
    acc += F2Poly::term(Monomial::var(var::g(j)) * Monomial::var(xv, j), F->one());
  return acc;
}

}  // namespace

ThetaBasisC2 theta_basis_char2_symbolic(const BinaryField* F) {
  ThetaBasisC2 tb;
  tb.F = F;
  const F2k one = F->one();
  auto P = [&](const char* s) { return parse_f2poly(s, F); };
  F2Poly s = P("x1 + x2");
  F2Poly s2 = s * s;
  F2Poly one_p = F2Poly::constant(one);

  F2Poly gx1 = g_at(F, var::x1), gx2 = g_at(F, var::x2);
  F2Poly w4 = F2Poly::var(var::y2, one) * gx1 + F2Poly::var(var::y1, one) * gx2;

  // S(u,v) = f1 (u+v) + f3 uv (u+v) + f5 u^2 v^2 (u+v)
  F2Poly S = P("f1*x1 + f1*x2 + f3*x1^2*x2 + f3*x1*x2^2 + f5*x1^3*x2^2 + f5*x1^2*x2^3");

  tb.k[0] = F2Rat(one_p, one_p);
  tb.k[1] = F2Rat(s, one_p);
  tb.k[2] = F2Rat(P("x1*x2"), one_p);
  tb.k[3] = F2Rat(S + w4, s2);

  tb.b[0] = F2Rat(gx1 + gx2, s);
  tb.b[1] = F2Rat(F2Poly::var(var::x2, one) * gx1 + F2Poly::var(var::x1, one) * gx2, s);
  tb.b[2] = F2Rat(F2Poly::var(var::x2, one, 2) * gx1 + F2Poly::var(var::x1, one, 2) * gx2, s);
  tb.b[3] = F2Rat(w4, s);

  // b5 = (g1 + g2(x1+x2) + g3 x1 x2) w4 / s^2 + T / s
  F2Poly G5 = P("g1 + g2*x1 + g2*x2 + g3*x1*x2");
  F2Poly T = P(
      "f1*g1 + f3*g1*x1*x2 + f1*g3*x1*x2 + f5*g1*x1^2*x2^2 + f3*g3*x1^2*x2^2 +"
      "f5*g3*x1^3*x2^3 + f3*g0*x1 + f3*g0*x2 + f1*g2*x1 + f1*g2*x2 +"
      "g0*g2*g3*x1^2*x2 + g0*g2*g3*x1*x2^2 +"
      "f5*g2*x1^3*x2^2 + f5*g2*x1^2*x2^3 + g2^2*g3*x1^3*x2^2 + g2^2*g3*x1^2*x2^3 +"
      "f1*g3*x1^2 + f1*g3*x2^2 +"
      "f5*g1*x1^3*x2 + f5*g1*x1*x2^3 + g1*g2*g3*x1^3*x2 + g1*g2*g3*x1*x2^3 +"
      "f5*g0*x1^3 + f5*g0*x2^3 + f5*g0*x1^2*x2 + f5*g0*x1*x2^2 +"
      "g0*g2*g3*x1^3 + g0*g2*g3*x2^3 + g0*g2*g3*x1^2*x2 + g0*g2*g3*x1*x2^2");
  tb.b[4] = F2Rat(G5 * w4 + s * T, s2);

  // b6 = g3 (g0 g3 + g2^2 (x1+x2) + g2 g3 x1 x2) w4 / s^2 + g3^2 R / s
  F2Poly G6 = P("g0*g3 + g2^2*x1 + g2^2*x2 + g2*g3*x1*x2").scaled(one) *
              F2Poly::var(var::g(3), one);
  F2Poly R = P(
      "f1*g0 + f3*g0*x1*x2 + f1*g2*x1*x2 + f5*g0*x1^2*x2^2 + f3*g2*x1^2*x2^2 +"
      "f5*g2*x1^3*x2^3 + f1*g1*x1 + f1*g1*x2 + g0^2*g2*x1 + g0^2*g2*x2 +"
      "g0*g2^2*x1^2*x2 + g0*g2^2*x1*x2^2 + g0*g1*g3*x1^2*x2 + g0*g1*g3*x1*x2^2 +"
      "f5*g1*x1^3*x2^2 + f5*g1*x1^2*x2^3 + f3*g3*x1^3*x2^2 + f3*g3*x1^2*x2^3 +"
      "g1*g2*g3*x1^3*x2^2 + g1*g2*g3*x1^2*x2^3 +"
      "f1*g2*x1^2 + f1*g2*x2^2 +"
      "f5*g0*x1^3*x2 + f5*g0*x1*x2^3 + g1^2*g3*x1^3*x2 + g1^2*g3*x1*x2^3 +"
      "g0*g2*g3*x1^3*x2 + g0*g2*g3*x1*x2^3 +"
      "f1*g3*x1^3 + f1*g3*x2^3 + f1*g3*x1^2*x2 + f1*g3*x1*x2^2 +"
      "g0*g1*g3*x1^3 + g0*g1*g3*x2^3 + g0*g1*g3*x1^2*x2 + g0*g1*g3*x1*x2^2");
  tb.b[5] = F2Rat(G6 * w4 + s * R.scaled(one) * F2Poly::var(var::g(3), one, 2), s2);
  return tb;
}

ThetaBasisC2 theta_basis_char2(const CurveF2& c) {
  ThetaBasisC2 tb = theta_basis_char2_symbolic(c.F);
  for (auto& r : tb.k) r = F2Rat(subst_curve_coeffs(r.num, c), subst_curve_coeffs(r.den, c));
  for (auto& r : tb.b) r = F2Rat(subst_curve_coeffs(r.num, c), subst_curve_coeffs(r.den, c));
  return tb;
}

F2Poly subst_curve_coeffs(const F2Poly& p, const CurveF2& c) {
  std::map<Var, F2Poly> sub;
  for (int i = 0; i <= 6; ++i) sub[var::f(i)] = F2Poly::constant(c.f[i]);
  for (int j = 0; j <= 3; ++j) sub[var::g(j)] = F2Poly::constant(c.g[j]);
  return p.subst(sub);
}

}  // namespace kummer
