#include "kummer/genus2.hpp"

#include "kummer/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kummer {

CurveF2 CurveF2::lift_to(const BinaryField* target) const {
  CurveF2 r;
  r.F = target;
  for (int i = 0; i < 7; ++i) r.f[i] = f[i].is_zero() ? target->zero() : F->embed(f[i], target);
  for (int j = 0; j < 4; ++j) r.g[j] = g[j].is_zero() ? target->zero() : F->embed(g[j], target);
  return r;
}

// generic univariate gcd over a field, dense low-to-high coefficients
template <class K>
static std::vector<K> ugcd(std::vector<K> a, std::vector<K> b) {
  auto trim = [](std::vector<K>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    K inv = b.back().inverse();
    while (a.size() >= b.size()) {
      K q = a.back() * inv;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - q * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

template <class K>
static void validate_char0_impl(const std::array<K, 7>& f, const std::array<K, 4>& g) {
  // F = f + g^2/4 separable of degree six
  std::vector<K> F(7, f[0].make_zero());
  for (int i = 0; i <= 6; ++i) F[i] = f[i];
  K quarter = (f[0].make_one() + f[0].make_one() + f[0].make_one() + f[0].make_one()).inverse();
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) F[i + j] += g[i] * g[j] * quarter;
  if (F[6].is_zero()) throw std::invalid_argument("not smooth / not genus 2: deg(f + g^2/4) < 6");
  std::vector<K> dF;
  for (int i = 1; i <= 6; ++i) dF.push_back(mul_int(F[i], i));
  auto gcd = ugcd(F, dF);
  if (gcd.size() > 1) throw std::invalid_argument("not smooth / not genus 2: f + g^2/4 not separable");
}

void validate_char0(const CurveQ& c) { validate_char0_impl(c.f, c.g); }
void validate_charQw(const CurveQw& c) { validate_char0_impl(c.f, c.g); }

bool is_smooth_char2(const CurveF2& c, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  UPoly g = c.g_poly(), f = c.f_poly();
  if (upoly::is_zero(g)) return fail("g = 0 (inseparable model)");

  // affine chart: singular points need g(a) = 0, y^2 = f(a), y g'(a) = f'(a)
  auto factors = factor_over_binary_field(g);
  UPoly dg = upoly::derivative(g), df = upoly::derivative(f);
  for (auto& [fac, mult] : factors.factors) {
    int d = upoly::degree(fac);
    const BinaryField* ext =
        d == 1 ? c.F : BinaryField::get_default(c.F->degree() * d);
    UPoly fac_e = upoly::map_field(fac, ext);
    for (auto& alpha : roots_in_field(fac_e)) {
      F2k beta = upoly::eval(upoly::map_field(f, ext), alpha).sqrt();
      F2k lhs = upoly::eval(upoly::map_field(dg, ext), alpha) * beta;
      F2k rhs = upoly::eval(upoly::map_field(df, ext), alpha);
      if (lhs == rhs) return fail("singular affine point above root of g");
    }
  }

  // chart at infinity: v^2 + (g0 u^3 + g1 u^2 + g2 u + g3) v = u^6 f(1/u).
  // The v-partial at u = 0 is g3, so deg g = 3 models are smooth there;
  // otherwise v = sqrt(f6) and the u-partial is g2 v + f5.
  F2k g2 = c.g[2], g3 = c.g[3], f5 = c.f[5], f6 = c.f[6];
  if (g3.is_zero()) {
    F2k v = f6.sqrt();
    if (g2 * v == f5) return fail("singular point at infinity");
  }
  return true;
}

std::size_t count_points(const CurveF2& c) {
  std::size_t n = 0;
  for (std::uint64_t xb = 0; xb < c.F->order(); ++xb)
    for (std::uint64_t yb = 0; yb < c.F->order(); ++yb)
      if (c.on_curve(c.F->elem(static_cast<std::uint32_t>(xb)),
                     c.F->elem(static_cast<std::uint32_t>(yb))))
        ++n;
  // points at infinity: v^2 + g3 v = f6
  for (std::uint64_t vb = 0; vb < c.F->order(); ++vb) {
    F2k v = c.F->elem(static_cast<std::uint32_t>(vb));
    if ((v * v + c.g[3] * v + c.f[6]).is_zero()) ++n;
  }
  return n;
}

NormalizedCurve validate_and_normalize(const CurveF2& c) {
  if (!c.g[3].is_zero()) {
    std::string why;
    if (!is_smooth_char2(c, &why)) throw std::invalid_argument("not smooth / not genus 2: " + why);
    return {c, std::nullopt};
  }
  // move the Weierstrass point at infinity into the affine chart:
  // x -> u0 + 1/x, y -> y/x^3 with g(u0) != 0
  for (std::uint64_t ub = 0; ub < c.F->order(); ++ub) {
    F2k u0 = c.F->elem(static_cast<std::uint32_t>(ub));
    if (c.eval_g(u0).is_zero()) continue;
    CurveF2 r;
    r.F = c.F;
    for (auto& z : r.f) z = c.F->zero();
    for (auto& z : r.g) z = c.F->zero();
    // G(X) = X^3 g(u0 + 1/X), F(X) = X^6 f(u0 + 1/X): expand (u0 + 1/X)^i
    // via binomials of u0-powers
    auto add_shifted = [&](std::array<F2k, 7>& dst, int top, int i, const F2k& coeff) {
      // coeff * X^top * (u0 + 1/X)^i = sum_j C(i,j) u0^(i-j) coeff X^(top-j),
      // with C(i,j) mod 2 from Lucas
      for (int j = 0; j <= i; ++j) {
        if ((j & i) != j) continue;
        F2k term = coeff;
        for (int e = 0; e < i - j; ++e) term = term * u0;
        dst[top - j] += term;
      }
    };
    std::array<F2k, 7> Fc{};
    std::array<F2k, 7> Gc{};
    for (auto& z : Fc) z = c.F->zero();
    for (auto& z : Gc) z = c.F->zero();
    for (int i = 0; i <= 6; ++i) add_shifted(Fc, 6, i, c.f[i]);
    for (int i = 0; i <= 3; ++i) add_shifted(Gc, 3, i, c.g[i]);
    r.f = Fc;
    for (int j = 0; j <= 3; ++j) r.g[j] = Gc[j];
    if (r.g[3].is_zero()) continue;
    if (!is_smooth_char2(r)) continue;
    return {r, u0};
  }
  std::string why;
  if (!is_smooth_char2(c, &why)) throw std::invalid_argument("not smooth / not genus 2: " + why);
  throw std::invalid_argument("insufficient field: no substitution reaches deg g = 3");
}

int splitting_degree_of_g(const CurveF2& c) {
  auto fac = factor_over_binary_field(c.g_poly());
  int l = 1;
  for (auto& [f, m] : fac.factors) l = std::lcm(l, upoly::degree(f));
  return l;
}

int p_rank(const CurveF2& c) {
  if (c.g[3].is_zero()) throw std::invalid_argument("p_rank needs a normalized curve (deg g = 3)");
  // gcd(g, g') has degree 0 (three distinct roots) or 2; in the latter case
  // it is the square of a linear h, and g has one distinct root iff the
  // squarefree cofactor equals h.
  UPoly g = c.g_poly();
  UPoly d = upoly::derivative(g);
  UPoly gc = upoly::gcd(g, d);
  if (upoly::degree(gc) == 0) return 2;
  UPoly h = upoly::perfect_sqrt(gc);
  UPoly s = upoly::monic(upoly::divexact(g, gc));
  return s == h ? 0 : 1;
}

std::vector<WeierstrassPointC2> weierstrass_points_char2(const CurveF2& c, int allowed_ext) {
  if (c.g[3].is_zero())
    throw std::invalid_argument("weierstrass points need a normalized curve (deg g = 3)");
  int l = splitting_degree_of_g(c);
  if (l > allowed_ext)
    throw std::runtime_error("extension required: degree " + std::to_string(l));
  const BinaryField* ext = l == 1 ? c.F : BinaryField::get_default(c.F->degree() * l);
  CurveF2 ce = l == 1 ? c : c.lift_to(ext);
  auto fac = factor_over_binary_field(c.g_poly());
  std::vector<WeierstrassPointC2> pts;
  for (auto& [f, m] : fac.factors) {
    UPoly fe = upoly::map_field(f, ext);
    for (auto& alpha : roots_in_field(fe))
      pts.push_back({alpha, ce.eval_f(alpha).sqrt(), m});
  }
  std::sort(pts.begin(), pts.end(), [](const WeierstrassPointC2& a, const WeierstrassPointC2& b) {
    return a.alpha.bits < b.alpha.bits;
  });
  return pts;
}

TwoTorsionClass TwoTorsionClass::ij(int i, int j) {
  if (i == j) throw std::invalid_argument("degenerate pair");
  TwoTorsionClass t;
  t.pair = {std::min(i, j), std::max(i, j)};
  return t;
}

TwoTorsionClass torsion_sum(const TwoTorsionClass& a, const TwoTorsionClass& b, int n) {
  if (n != 3 && n != 6) throw std::invalid_argument("n must be 3 or 6");
  for (int i : a.pair)
    if (i < 1 || i > n) throw std::invalid_argument("index out of range");
  for (int i : b.pair)
    if (i < 1 || i > n) throw std::invalid_argument("index out of range");
  std::vector<int> sym;
  std::set_symmetric_difference(a.pair.begin(), a.pair.end(), b.pair.begin(), b.pair.end(),
                                std::back_inserter(sym));
  if (sym.size() == 4) {
    // complement among {1..6}
    std::vector<int> comp;
    for (int i = 1; i <= n; ++i)
      if (std::find(sym.begin(), sym.end(), i) == sym.end()) comp.push_back(i);
    sym = comp;
  }
  TwoTorsionClass r;
  r.pair = sym;
  return r;
}

std::vector<TwoTorsionClass> all_torsion_classes(int n) {
  std::vector<TwoTorsionClass> r{TwoTorsionClass::O()};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) r.push_back(TwoTorsionClass::ij(i, j));
  return r;
}

StructureCounts rational_structure_counts(std::vector<int> partition, int characteristic) {
  std::sort(partition.begin(), partition.end());
  int total = std::accumulate(partition.begin(), partition.end(), 0);
  auto is = [&](std::initializer_list<int> l) {
    return partition == std::vector<int>(l);
  };
  StructureCounts r;
  if (characteristic == 2) {
    if (total != 3) throw std::invalid_argument("char-2 partition must sum to 3");
    if (is({1, 1, 1})) return {3, 1, std::nullopt, 4, ""};
    if (is({1, 2})) return {1, 1, std::nullopt, 2, ""};
    if (is({3})) return {0, 1, std::nullopt, 1, ""};
    throw std::invalid_argument("invalid partition");
  }
  if (total != 6) throw std::invalid_argument("partition must sum to 6");
  if (is({1, 1, 1, 1, 1, 1})) return {6, 10, std::nullopt, 16, ""};
  if (is({1, 1, 1, 1, 2})) return {4, 4, std::nullopt, 8, ""};
  if (is({1, 1, 1, 3})) return {3, 1, std::nullopt, 4, ""};
  if (is({1, 1, 2, 2})) return {2, 2, std::nullopt, 4, ""};
  if (is({1, 1, 4})) return {2, 0, std::nullopt, 2, ""};
  if (is({1, 2, 3})) return {1, 1, std::nullopt, 2, ""};
  if (is({1, 5})) return {1, 0, std::nullopt, 1, ""};
  if (is({2, 2, 2}))
    return {0, 0, 4, 4, "4 T_ijk tropes iff all three quadrics split over the same quadratic extension"};
  if (is({2, 4})) return {0, 0, std::nullopt, 2, ""};
  if (is({3, 3})) return {0, 1, std::nullopt, 1, ""};
  if (is({6}))
    return {0, 0, 1, 1, "1 T_ijk trope iff the Galois group of the sextic is C6 or S3"};
  throw std::invalid_argument("invalid partition");
}

}  // namespace kummer
