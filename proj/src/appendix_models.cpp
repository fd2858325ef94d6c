#include "kummer/models.hpp"
#include "kummer/textio.hpp"

namespace kummer {

namespace {

const char* kQuarticText =
    "f1^2*k1^4 + f2*g0^2*k1^4 + f1*g0*g1*k1^4 + f0*g1^2*k1^4 +"
    "f3*g0^2*k1^3*k2 + f1*g0*g2*k1^3*k2 +"
    "f4*g0^2*k1^2*k2^2 + f0*g2^2*k1^2*k2^2 + f1*g0*g3*k1^2*k2^2 +"
    "f5*g0^2*k1*k2^3 +"
    "f6*g0^2*k2^4 + f0*g3^2*k2^4 +"
    "f3*g0*g1*k1^3*k3 + f1*g1*g2*k1^3*k3 + f1*g0*g3*k1^3*k3 +"
    "f5*g0^2*k1^2*k2*k3 + f3*g0*g2*k1^2*k2*k3 + f1*g2^2*k1^2*k2*k3 + f1*g1*g3*k1^2*k2*k3 +"
    "f3*g0*g3*k1*k2^2*k3 +"
    "f1*g3^2*k2^3*k3 +"
    "f3^2*k1^2*k3^2 + f6*g0^2*k1^2*k3^2 + f5*g0*g1*k1^2*k3^2 + f4*g1^2*k1^2*k3^2 +"
    "f3*g1*g2*k1^2*k3^2 + f2*g2^2*k1^2*k3^2 + f3*g0*g3*k1^2*k3^2 + f1*g2*g3*k1^2*k3^2 +"
    "f0*g3^2*k1^2*k3^2 +"
    "f5*g1^2*k1*k2*k3^2 + f5*g0*g2*k1*k2*k3^2 + f3*g1*g3*k1*k2*k3^2 + f1*g3^2*k1*k2*k3^2 +"
    "f6*g1^2*k2^2*k3^2 + f5*g0*g3*k2^2*k3^2 + f2*g3^2*k2^2*k3^2 +"
    "f5*g1*g2*k1*k3^3 + f5*g0*g3*k1*k3^3 + f3*g2*g3*k1*k3^3 +"
    "f5*g1*g3*k2*k3^3 + f3*g3^2*k2*k3^3 +"
    "f5^2*k3^4 + f6*g2^2*k3^4 + f5*g2*g3*k3^4 + f4*g3^2*k3^4 +"
    "g0^2*k1^3*k4 + g0*g1*k1^2*k2*k4 + g0*g2*k1*k2^2*k4 + g0*g3*k2^3*k4 +"
    "g1^2*k1^2*k3*k4 + g1*g2*k1*k2*k3*k4 + g0*g3*k1*k2*k3*k4 + g1*g3*k2^2*k3*k4 +"
    "g2^2*k1*k3^2*k4 + g2*g3*k2*k3^2*k4 + g3^2*k3^3*k4 + k2^2*k4^2";

const char* kDesingText[3] = {
    "f1*g3^2*b1^2 + g0*g1*g3^2*b1^2 + g1^2*g3^2*b1*b2 + f3*g3^2*b2^2 + g1*g2*g3^2*b2^2 +"
    "g1*g2*g3^2*b1*b3 + g2^2*g3^2*b2*b3 + f5*g3^2*b3^2 + g2^2*g3*b1*b4 + g3^3*b3*b4 +"
    "g3^2*b2*b5 + b1*b6",

    "f6*g0^2*b1^2 + f0*g3^2*b1^2 + g0*g1*g3^2*b1*b2 + f6*g1^2*b2^2 + f2*g3^2*b2^2 +"
    "g1^2*g3^2*b2^2 + g0*g2*g3^2*b2^2 + g0*g2*g3^2*b1*b3 + f6*g2^2*b3^2 + f4*g3^2*b3^2 +"
    "g2^2*g3^2*b3^2 + g0*g3^2*b1*b4 + g2^2*g3*b2*b4 + g1*g3^2*b2*b4 + g2*g3^2*b3*b4 +"
    "g3^2*b4^2 + g3^2*b3*b5 + b2*b6",

    "f5*g0^2*b1^2 + g0^2*g2*g3*b1^2 + f5*g1^2*b2^2 + g1^2*g2*g3*b2^2 + f1*g3^2*b2^2 +"
    "g0*g1*g3^2*b1*b3 + g1^2*g3^2*b2*b3 + g0*g2*g3^2*b2*b3 + f5*g2^2*b3^2 + g2^3*g3*b3^2 +"
    "f3*g3^2*b3^2 + g1*g2*g3^2*b3^2 + g0*g2*g3*b1*b4 + g1*g2*g3*b2*b4 + g0*g3^2*b2*b4 +"
    "g1*g3^2*b3*b4 + g0*g3*b1*b5 + g1*g3*b2*b5 + g2*g3*b3*b5 + b3*b6"};

const char* kBbarQuadricText[6] = {
    "g1*k1^2 + g2*k1*k2 + g3*k2^2 + g3*k1*k3",
    "g0*k1^2 + g2*k1*k3 + g3*k2*k3",
    "g0*k1*k2 + g1*k1*k3 + g3*k3^2",
    "f1*k1^2 + f3*k1*k3 + f5*k3^2 + k2*k4",
    "f3*g0*k1^2 + f1*g3*k1*k2 + f5*g0*k2^2 + g0*g2*g3*k2^2 + f3*g2*k1*k3 + g0*g2*g3*k1*k3 +"
    "f5*g1*k2*k3 + g1*g2*g3*k2*k3 + g2^2*g3*k3^2 + g1*k1*k4 + g2*k2*k4 + g3*k3*k4",
    "f1*g2^2*g3*k1^2 + f1*g1*g3^2*k1^2 + g0^2*g2*g3^2*k1^2 + f1*g2*g3^2*k1*k2 +"
    "f1*g3^3*k2^2 + g0*g1*g3^3*k2^2 + f3*g2^2*g3*k1*k3 + g0*g2^2*g3^2*k1*k3 +"
    "g0*g1*g3^3*k1*k3 + f5*g0*g3^2*k2*k3 + g1^2*g3^3*k2*k3 + g0*g2*g3^3*k2*k3 +"
    "f5*g2^2*g3*k3^2 + f5*g1*g3^2*k3^2 + f3*g3^3*k3^2 + g1*g2*g3^3*k3^2 +"
    "g0*g3^2*k1*k4 + g2^2*g3*k2*k4 + g2*g3^2*k3*k4"};

const char* kInverseText[4] = {
    "g3^2*b2^2 + g3^2*b1*b3",
    "g0*g3*b1^2 + g1*g3*b1*b2 + g2*g3*b1*b3 + g3^2*b2*b3",
    "g1*g3*b2^2 + g0*g3*b1*b2 + g2*g3*b2*b3 + g3^2*b3^2",
    "f0*g3^2*b1^2 + f2*g3^2*b2^2 + f4*g3^2*b3^2 + f1*g3^2*b1*b2 + f3*g3^2*b2*b3 +"
    "f5*g2*g3*b3^2 + f5*g0*g3*b1*b3 + f5*g1*g3*b2*b3 + f6*g0^2*b1^2 + f6*g1^2*b2^2 +"
    "f6*g2^2*b3^2 + g3^2*b4^2"};

const char* kWeddleText =
    "f6*g0^3*b1^4 + f0*g0*g3^2*b1^4 +"
    "f6*g0^2*g1*b1^3*b2 + f1*g0*g3^2*b1^3*b2 + f0*g1*g3^2*b1^3*b2 +"
    "f6*g0*g1^2*b1^2*b2^2 + f5*g0^2*g3*b1^2*b2^2 + f2*g0*g3^2*b1^2*b2^2 + f1*g1*g3^2*b1^2*b2^2 +"
    "f6*g1^3*b1*b2^3 + f3*g0*g3^2*b1*b2^3 + f2*g1*g3^2*b1*b2^3 +"
    "f5*g1^2*g3*b2^4 + f3*g1*g3^2*b2^4 + f1*g3^3*b2^4 +"
    "f6*g0^2*g2*b1^3*b3 + f5*g0^2*g3*b1^3*b3 + f0*g2*g3^2*b1^3*b3 +"
    "f6*g0^2*g3*b1^2*b2*b3 + f1*g2*g3^2*b1^2*b2*b3 + f0*g3^3*b1^2*b2*b3 +"
    "f6*g1^2*g2*b1*b2^2*b3 + f5*g1^2*g3*b1*b2^2*b3 + f2*g2*g3^2*b1*b2^2*b3 + f1*g3^3*b1*b2^2*b3 +"
    "f6*g1^2*g3*b2^3*b3 + f3*g2*g3^2*b2^3*b3 + f2*g3^3*b2^3*b3 +"
    "f6*g0*g2^2*b1^2*b3^2 + f4*g0*g3^2*b1^2*b3^2 + f1*g3^3*b1^2*b3^2 +"
    "f6*g1*g2^2*b1*b2*b3^2 + f5*g0*g3^2*b1*b2*b3^2 + f4*g1*g3^2*b1*b2*b3^2 +"
    "f5*g2^2*g3*b2^2*b3^2 + f5*g1*g3^2*b2^2*b3^2 +"
    "f6*g2^3*b1*b3^3 + f5*g2^2*g3*b1*b3^3 + f4*g2*g3^2*b1*b3^3 + f3*g3^3*b1*b3^3 +"
    "f6*g2^2*g3*b2*b3^3 + f5*g2*g3^2*b2*b3^3 + f4*g3^3*b2*b3^3 +"
    "f5*g3^3*b3^4 +"
    "g0^2*g3^2*b1^3*b4 +"
    "g1^2*g3^2*b1*b2^2*b4 + g0*g2*g3^2*b1*b2^2*b4 +"
    "g1*g2*g3^2*b2^3*b4 + g0*g3^3*b2^3*b4 +"
    "g0*g2*g3^2*b1^2*b3*b4 +"
    "g1*g2*g3^2*b1*b2*b3*b4 + g0*g3^3*b1*b2*b3*b4 +"
    "g2^2*g3^2*b2^2*b3*b4 + g1*g3^3*b2^2*b3*b4 +"
    "g1*g3^3*b1*b3^2*b4 +"
    "g3^4*b3^3*b4 +"
    "g0*g3^2*b1^2*b4^2 + g1*g3^2*b1*b2*b4^2 + g2*g3^2*b1*b3*b4^2 + g3^3*b2*b3*b4^2";

}  // namespace

ModelBundle models_symbolic(const BinaryField* F) {
  ModelBundle mb;
  mb.F = F;
  mb.quartic = parse_f2poly(kQuarticText, F);
  for (int i = 0; i < 3; ++i) mb.desing[i] = parse_f2poly(kDesingText[i], F);
  for (int i = 0; i < 6; ++i) mb.bbar_quadrics[i] = parse_f2poly(kBbarQuadricText[i], F);
  for (int i = 0; i < 4; ++i) mb.inverse[i] = parse_f2poly(kInverseText[i], F);
  mb.weddle = parse_f2poly(kWeddleText, F);
  return mb;
}

ModelBundle models_for_curve(const CurveF2& c) {
  ModelBundle mb = models_symbolic(c.F);
  mb.quartic = subst_curve_coeffs(mb.quartic, c);
  for (auto& p : mb.desing) p = subst_curve_coeffs(p, c);
  for (auto& p : mb.bbar_quadrics) p = subst_curve_coeffs(p, c);
  for (auto& p : mb.inverse) p = subst_curve_coeffs(p, c);
  mb.weddle = subst_curve_coeffs(mb.weddle, c);
  return mb;
}

F2Poly kummer_quartic(const CurveF2& c) { return subst_curve_coeffs(parse_f2poly(kQuarticText, c.F), c); }
std::array<F2Poly, 3> desing_quadrics(const CurveF2& c) { return models_for_curve(c).desing; }
std::array<F2Poly, 6> bbar_as_kquadrics(const CurveF2& c) { return models_for_curve(c).bbar_quadrics; }
std::array<F2Poly, 4> inverse_map(const CurveF2& c) { return models_for_curve(c).inverse; }
F2Poly weddle_quartic(const CurveF2& c) { return models_for_curve(c).weddle; }

namespace {

// substitute rational functions for the k/b variables; every other variable
// maps to itself
F2Rat subst_ratfuns(const F2Poly& p, const std::map<Var, F2Rat>& partial, const BinaryField* F) {
  std::map<Var, F2Rat> full = partial;
  for (auto& [m, c] : p.t)
    for (auto& [v, e] : m.vp)
      if (!full.count(v))
        full.emplace(v, F2Rat(F2Poly::var(v, F->one()), F2Poly::constant(F->one())));
  auto conv = [&](const F2k& c) {
    return F2Rat(F2Poly::constant(c), F2Poly::constant(F->one()));
  };
  return p.eval_conv<F2Rat>(full, conv, F2Rat(F2Poly::zero(), F2Poly::constant(F->one())));
}

}  // namespace

std::optional<std::string> check_model_identities(const BinaryField* F,
                                                  const std::optional<CurveF2>& curve) {
  ThetaBasisC2 tb = curve ? theta_basis_char2(*curve) : theta_basis_char2_symbolic(F);
  ModelBundle mb = curve ? models_for_curve(*curve) : models_symbolic(F);

  CurveIdealReducer<F2k> red;
  if (curve) {
    std::array<F2Poly, 7> fc;
    std::array<F2Poly, 4> gc;
    for (int i = 0; i <= 6; ++i) fc[i] = F2Poly::constant(curve->f[i]);
    for (int j = 0; j <= 3; ++j) gc[j] = F2Poly::constant(curve->g[j]);
    red = CurveIdealReducer<F2k>::from_coeffs(fc, gc, F->one());
  } else {
    red = CurveIdealReducer<F2k>::symbolic(F->one());
  }

  auto vanishes = [&](const F2Rat& r) { return red.reduce(r.num).is_zero(); };

  std::map<Var, F2Rat> at_k, at_b;
  for (int i = 0; i < 4; ++i) at_k[var::k(i + 1)] = tb.k[i];
  for (int i = 0; i < 6; ++i) at_b[var::b(i + 1)] = tb.b[i];

  if (!vanishes(subst_ratfuns(mb.quartic, at_k, F))) return "kummer quartic";

  for (int j = 0; j < 3; ++j)
    if (!vanishes(subst_ratfuns(mb.desing[j], at_b, F)))
      return "desingularization quadric c" + std::to_string(j + 1);

  for (int i = 0; i < 6; ++i)
    if (!vanishes(subst_ratfuns(mb.bbar_quadrics[i], at_k, F) - tb.b[i]))
      return "b" + std::to_string(i + 1) + " as k-quadric";

  // p_i = g3^2 g(x1) g(x2) k_i
  {
    F2Poly gx1, gx2;
    for (int j = 0; j <= 3; ++j) {
      F2Poly cj = curve ? F2Poly::constant(curve->g[j]) : F2Poly::var(var::g(j), F->one());
      gx1 += cj * F2Poly::var(var::x1, F->one(), j);
      gx2 += cj * F2Poly::var(var::x2, F->one(), j);
    }
    F2Poly g3sq = curve ? F2Poly::constant(curve->g[3] * curve->g[3])
                        : F2Poly::var(var::g(3), F->one(), 2);
    F2Rat factor = F2Rat(g3sq * gx1 * gx2, F2Poly::constant(F->one()));
    for (int i = 0; i < 4; ++i)
      if (!vanishes(subst_ratfuns(mb.inverse[i], at_b, F) - factor * tb.k[i]))
        return "inverse map p" + std::to_string(i + 1);
  }

  if (!vanishes(subst_ratfuns(mb.weddle, at_b, F))) return "weddle quartic";

  return std::nullopt;
}

}  // namespace kummer
