#include <algorithm>

#include "kummer/linalg.hpp"
#include "kummer/models.hpp"
#include "kummer/textio.hpp"

namespace kummer {

ProjPoint normalize_point(ProjPoint p) {
  for (auto& c : p)
    if (!c.is_zero()) {
      F2k inv = c.inverse();
      for (auto& d : p) d = d * inv;
      return p;
    }
  throw std::invalid_argument("zero projective point");
}

bool proj_equal(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != b.size()) return false;
  return normalize_point(a) == normalize_point(b);
}

F2k eval_form(const F2Poly& form, const ProjPoint& p, Var first_var, int n_vars) {
  std::map<Var, F2k> a;
  for (int i = 0; i < n_vars; ++i) a[static_cast<Var>(first_var + i)] = p[i];
  return form.eval(a, p[0].make_zero());
}

namespace {

// Weierstrass data over the splitting field, ordered with the simple roots
// first (so al1 is the simple root in the almost ordinary case).
struct SplitData {
  const BinaryField* ext;
  CurveF2 lifted;
  std::vector<WeierstrassPointC2> pts;  // sorted by (multiplicity, bits)
};

SplitData split_data(const CurveF2& c, int allowed_ext) {
  if (c.g[3].is_zero()) throw std::invalid_argument("curve not normalized (deg g < 3)");
  auto pts = weierstrass_points_char2(c, allowed_ext);
  std::sort(pts.begin(), pts.end(), [](const WeierstrassPointC2& a, const WeierstrassPointC2& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return a.alpha.bits < b.alpha.bits;
  });
  const BinaryField* ext = pts.front().alpha.F;
  return {ext, ext == c.F ? c : c.lift_to(ext), std::move(pts)};
}

F2k pij_last_coord(const CurveF2& ce, const F2k& ai, const F2k& aj) {
  // (f1 + ai aj f3 + ai^2 aj^2 f5) / (ai + aj)
  F2k p = ai * aj;
  return (ce.f[1] + p * ce.f[3] + p * p * ce.f[5]) / (ai + aj);
}

}  // namespace

SingularPointsC2 singular_points_closed_form(const CurveF2& c, int allowed_ext) {
  auto sd = split_data(c, allowed_ext);
  SingularPointsC2 out;
  out.ext = sd.ext;
  out.p_o = {sd.ext->zero(), sd.ext->zero(), sd.ext->zero(), sd.ext->one()};
  for (std::size_t i = 0; i < sd.pts.size(); ++i)
    for (std::size_t j = i + 1; j < sd.pts.size(); ++j) {
      F2k ai = sd.pts[i].alpha, aj = sd.pts[j].alpha;
      ProjPoint p{sd.ext->one(), ai + aj, ai * aj, pij_last_coord(sd.lifted, ai, aj)};
      out.p_ij.push_back({{static_cast<int>(i + 1), static_cast<int>(j + 1)}, std::move(p)});
    }
  return out;
}

TropeSet trope_planes(const CurveF2& c, int allowed_ext) {
  auto sd = split_data(c, allowed_ext);
  TropeSet ts;
  ts.ext = sd.ext;
  for (std::size_t i = 0; i < sd.pts.size(); ++i) {
    F2k a = sd.pts[i].alpha;
    ts.planes.push_back({"T" + std::to_string(i + 1),
                         {a * a, a, sd.ext->one(), sd.ext->zero()}});
  }
  if (sd.pts.size() == 3) {
    // pi_123 = (f1+f3+f5) g2^2 k1 + g2 (f5 g1 + f1 g3 + f3 g3) k2
    //        + (f5 g1^2 + f3 g1 g3 + f1 g3^2) k3 + g2 (g1 + g3) k4
    const CurveF2& ce = sd.lifted;
    F2k f1 = ce.f[1], f3 = ce.f[3], f5 = ce.f[5];
    F2k g1 = ce.g[1], g2 = ce.g[2], g3 = ce.g[3];
    std::vector<F2k> pl{(f1 + f3 + f5) * g2 * g2,
                        g2 * (f5 * g1 + f1 * g3 + f3 * g3),
                        f5 * g1 * g1 + f3 * g1 * g3 + f1 * g3 * g3,
                        g2 * (g1 + g3)};
    bool zero = true;
    for (auto& z : pl) zero = zero && z.is_zero();
    auto sing = singular_points_closed_form(c, allowed_ext);
    auto passes = [&](const std::vector<F2k>& plane) {
      for (auto& [ij, p] : sing.p_ij) {
        F2k dot = sd.ext->zero();
        for (int t = 0; t < 4; ++t) dot += plane[t] * p[t];
        if (!dot.is_zero()) return false;
      }
      return true;
    };
    if (zero || !passes(pl)) {
      // plane through P12, P13, P23 by exact null space
      Matrix<F2k> m(3, 4, sd.ext->zero());
      for (int r = 0; r < 3; ++r)
        for (int t = 0; t < 4; ++t) m.at(r, t) = sing.p_ij[r].second[t];
      auto ker = kernel_basis(m, sd.ext->zero(), sd.ext->one());
      if (ker.size() != 1) throw std::runtime_error("trope T123 not a unique plane");
      pl = ker[0];
    }
    ts.planes.push_back({"T123", pl});
  }
  return ts;
}

EmbeddedDivisor evaluate_embedding(const CurveF2& c, const F2k& x1, const F2k& y1,
                                   const F2k& x2, const F2k& y2) {
  if (x1 == x2) throw std::invalid_argument("degenerate pair");
  if (!c.on_curve(x1, y1) || !c.on_curve(x2, y2))
    throw std::invalid_argument("point not on curve");
  auto tb = theta_basis_char2(c);
  std::map<Var, F2k> a{{var::x1, x1}, {var::x2, x2}, {var::y1, y1}, {var::y2, y2}};
  EmbeddedDivisor out;
  for (int i = 0; i < 4; ++i) out.k_vec.push_back(eval_ratfun(tb.k[i], a, c.F->zero()));
  for (int i = 0; i < 6; ++i) out.b_vec.push_back(eval_ratfun(tb.b[i], a, c.F->zero()));
  out.k_vec = normalize_point(out.k_vec);
  bool bz = true;
  for (auto& z : out.b_vec) bz = bz && z.is_zero();
  if (!bz) out.b_vec = normalize_point(out.b_vec);
  return out;
}

std::vector<F2k> trope_hyperplane_p5(const CurveF2& c, int allowed_ext) {
  auto sd = split_data(c, allowed_ext);
  if (sd.pts.size() != 3) throw std::invalid_argument("hyperplane needs an ordinary curve");
  F2k a1 = sd.pts[0].alpha, a2 = sd.pts[1].alpha, a3 = sd.pts[2].alpha;
  F2k b1 = sd.pts[0].beta, b2 = sd.pts[1].beta, b3 = sd.pts[2].beta;
  F2k z = sd.ext->zero();
  std::vector<F2k> h(6, z);
  h[0] = a2 * a2 * a3 * b1 + a2 * a3 * a3 * b1 + a1 * a1 * a3 * b2 + a1 * a3 * a3 * b2 +
         a1 * a1 * a2 * b3 + a1 * a2 * a2 * b3;
  h[1] = a2 * a2 * b1 + a3 * a3 * b1 + a1 * a1 * b2 + a3 * a3 * b2 + a1 * a1 * b3 + a2 * a2 * b3;
  h[2] = a2 * b1 + a3 * b1 + a1 * b2 + a3 * b2 + a1 * b3 + a2 * b3;
  h[3] = (a1 + a2) * (a1 + a3) * (a2 + a3);
  return h;
}

WeddleMarkers weddle_markers(const CurveF2& c, int allowed_ext) {
  auto sd = split_data(c, allowed_ext);
  WeddleMarkers out;
  out.ext = sd.ext;
  F2k z = sd.ext->zero(), o = sd.ext->one();
  out.q_o = {z, z, z, o};
  for (auto& p : sd.pts) out.q_i.push_back({o, p.alpha, p.alpha * p.alpha, p.beta});
  if (sd.pts.size() == 3) {
    auto h = trope_hyperplane_p5(c, allowed_ext);
    out.singular_plane = std::vector<F2k>{h[0], h[1], h[2], h[3]};
  } else if (sd.pts.size() == 2) {
    F2k a1 = sd.pts[0].alpha, a2 = sd.pts[1].alpha;
    out.singular_plane = std::vector<F2k>{a1 * a2, a1 + a2, o, z};
  } else {
    F2k a1 = sd.pts[0].alpha;
    out.singular_line = std::make_pair(std::vector<F2k>{a1, o, z, z},
                                       std::vector<F2k>{a1 * a1, z, o, z});
  }
  return out;
}

}  // namespace kummer
