#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kummer/linalg.hpp"
#include "kummer/models.hpp"
#include "kummer/scanner.hpp"

using namespace kummer;

namespace {

// deterministic search for a smooth curve with the requested p-rank and a
// splitting field of degree at most max_split
CurveF2 find_curve(const BinaryField* F, int want_rank, int max_split, int skip = 0) {
  for (std::uint64_t gbits = 0; gbits < (1ull << (3 * F->degree())); ++gbits) {
    CurveF2 c;
    c.F = F;
    for (int j = 0; j < 3; ++j)
      c.g[j] = F->elem(static_cast<std::uint32_t>((gbits >> (j * F->degree())) &
                                                  (F->order() - 1)));
    c.g[3] = F->one();
    for (std::uint64_t fbits = 0; fbits < (1ull << std::min<unsigned>(7 * F->degree(), 28));
         ++fbits) {
      for (int i = 0; i < 7; ++i)
        c.f[i] = F->elem(static_cast<std::uint32_t>((fbits >> (i * F->degree())) &
                                                    (F->order() - 1)));
      if (!is_smooth_char2(c)) continue;
      if (p_rank(c) != want_rank) continue;
      if (splitting_degree_of_g(c) > max_split) continue;
      if (skip-- > 0) continue;
      return c;
    }
  }
  throw std::runtime_error("no curve found");
}

F2k dot(const std::vector<F2k>& a, const ProjPoint& p) {
  F2k acc = a[0].make_zero();
  for (std::size_t i = 0; i < a.size() && i < p.size(); ++i) acc += a[i] * p[i];
  return acc;
}

}  // namespace

TEST_CASE("singular scan matches closed forms per stratum") {
  struct Want {
    int rank, x_count, y_count;
  };
  for (Want w : {Want{2, 4, 12}, Want{1, 2, 4}, Want{0, 1, 1}}) {
    const BinaryField* F2 = BinaryField::get_default(1);
    CurveF2 c = find_curve(F2, w.rank, 3);
    auto sing = singular_points_closed_form(c);
    CHECK(static_cast<int>(sing.p_ij.size()) + 1 == w.x_count);

    const BinaryField* ext = sing.ext;
    CurveF2 ce = ext == c.F ? c : c.lift_to(ext);

    // X: quartic in P^3 over the splitting field
    auto xrep = singular_scan({kummer_quartic(ce)}, 3, ext, var::k1);
    CHECK(static_cast<int>(xrep.singular_points.size()) == w.x_count);
    // locations match the closed forms
    auto matches = [&](const ProjPoint& p) {
      if (proj_equal(p, sing.p_o)) return true;
      for (auto& [ij, q] : sing.p_ij)
        if (proj_equal(p, q)) return true;
      return false;
    };
    for (auto& p : xrep.singular_points) CHECK(matches(p));

    // Y: three quadrics in P^5 over the splitting field
    auto yrep = singular_scan(
        {desing_quadrics(ce)[0], desing_quadrics(ce)[1], desing_quadrics(ce)[2]}, 5, ext,
        var::b1);
    CHECK(static_cast<int>(yrep.singular_points.size()) == w.y_count);
  }
}

TEST_CASE("trope incidence and the P^5 hyperplane") {
  const BinaryField* F2 = BinaryField::get_default(1);
  CurveF2 c = find_curve(F2, 2, 3);
  auto sing = singular_points_closed_form(c);
  auto tropes = trope_planes(c);
  REQUIRE(tropes.planes.size() == 4);

  auto point_of = [&](int i, int j) -> const ProjPoint& {
    for (auto& [ij, p] : sing.p_ij)
      if (ij == std::make_pair(i, j)) return p;
    throw std::runtime_error("missing point");
  };

  // T_i contains P_O, P_ij, P_ik; T123 contains P_12, P_13, P_23
  for (int i = 1; i <= 3; ++i) {
    auto& plane = tropes.planes[i - 1].second;
    CHECK(dot(plane, sing.p_o).is_zero());
    for (int j = 1; j <= 3; ++j)
      if (j != i) CHECK(dot(plane, point_of(std::min(i, j), std::max(i, j))).is_zero());
  }
  auto& t123 = tropes.planes[3].second;
  CHECK(dot(t123, point_of(1, 2)).is_zero());
  CHECK(dot(t123, point_of(1, 3)).is_zero());
  CHECK(dot(t123, point_of(2, 3)).is_zero());
  CHECK(!dot(t123, sing.p_o).is_zero());

  // b-images of >= 10 points of the trope conic T1 span a line of P^5 and
  // lie in the printed hyperplane
  const BinaryField* ext = sing.ext;
  CurveF2 ce = c.lift_to(ext);
  auto mb = models_for_curve(ce);
  auto xpts = variety_points({mb.quartic}, 3, ext, var::k1);
  std::vector<ProjPoint> on_t1;
  for (auto& p : xpts)
    if (dot(tropes.planes[0].second, p).is_zero()) on_t1.push_back(p);
  std::vector<F2Poly> bmap(mb.bbar_quadrics.begin(), mb.bbar_quadrics.end());
  auto rep = membership_scan(on_t1, bmap, var::k1, {mb.desing[0], mb.desing[1], mb.desing[2]},
                             var::b1);
  CHECK(rep.failures.empty());
  CHECK(rep.mapped >= 10);

  // collect the images and check rank 2 plus hyperplane containment
  auto h = trope_hyperplane_p5(c);
  std::vector<ProjPoint> images;
  for (auto& p : on_t1) {
    std::map<Var, F2k> a;
    for (int i = 0; i < 4; ++i) a[var::k(i + 1)] = p[i];
    ProjPoint img;
    bool zero = true;
    for (auto& q : bmap) {
      F2k v = q.eval(a, ext->zero());
      zero = zero && v.is_zero();
      img.push_back(v);
    }
    if (!zero) images.push_back(img);
  }
  REQUIRE(images.size() >= 10);
  Matrix<F2k> m(images.size(), 6, ext->zero());
  for (std::size_t i = 0; i < images.size(); ++i)
    for (int j = 0; j < 6; ++j) m.at(i, j) = images[i][j];
  CHECK(rank(m) == 2);
  for (auto& img : images) CHECK(dot(h, img).is_zero());
}

TEST_CASE("indeterminacy of the b-map is the singular locus") {
  const BinaryField* F2 = BinaryField::get_default(1);
  CurveF2 c = find_curve(F2, 2, 3);
  auto sing = singular_points_closed_form(c);
  const BinaryField* ext = sing.ext;
  CurveF2 ce = c.lift_to(ext);
  auto mb = models_for_curve(ce);
  auto xpts = variety_points({mb.quartic}, 3, ext, var::k1);
  std::vector<F2Poly> bmap(mb.bbar_quadrics.begin(), mb.bbar_quadrics.end());
  auto rep = membership_scan(xpts, bmap, var::k1, {mb.desing[0], mb.desing[1], mb.desing[2]},
                             var::b1);
  CHECK(rep.failures.empty());
  REQUIRE(rep.indeterminacy.size() == 4);
  auto xrep = singular_scan({mb.quartic}, 3, ext, var::k1);
  REQUIRE(xrep.singular_points.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    bool found = false;
    for (auto& q : xrep.singular_points)
      if (proj_equal(rep.indeterminacy[i], q)) found = true;
    CHECK(found);
  }
}

TEST_CASE("embedding evaluation lands on the models") {
  const BinaryField* F8 = BinaryField::get_default(3);
  CurveF2 c = find_curve(F8, 2, 1);  // split g over F8
  auto mb = models_for_curve(c);
  int tried = 0, used = 0;
  for (std::uint32_t xa = 0; xa < 8 && used < 6; ++xa)
    for (std::uint32_t ya = 0; ya < 8 && used < 6; ++ya) {
      F2k x1 = F8->elem(xa), y1 = F8->elem(ya);
      if (!c.on_curve(x1, y1)) continue;
      for (std::uint32_t xb = xa + 1; xb < 8 && used < 6; ++xb)
        for (std::uint32_t yb = 0; yb < 8 && used < 6; ++yb) {
          F2k x2 = F8->elem(xb), y2 = F8->elem(yb);
          if (!c.on_curve(x2, y2)) continue;
          ++tried;
          auto d = evaluate_embedding(c, x1, y1, x2, y2);
          CHECK(eval_form(mb.quartic, d.k_vec, var::k1, 4).is_zero());
          bool bz = true;
          for (auto& z : d.b_vec) bz = bz && z.is_zero();
          if (!bz) {
            for (auto& q : mb.desing) CHECK(eval_form(q, d.b_vec, var::b1, 6).is_zero());
            ++used;
          }
        }
    }
  CHECK(used >= 4);

  // a pair of distinct Weierstrass points maps to the singular point P_ij
  auto wp = weierstrass_points_char2(c, 1);
  REQUIRE(wp.size() == 3);
  auto d = evaluate_embedding(c, wp[0].alpha, wp[0].beta, wp[1].alpha, wp[1].beta);
  auto sing = singular_points_closed_form(c);
  bool is_sing = proj_equal(d.k_vec, sing.p_o);
  for (auto& [ij, p] : sing.p_ij) is_sing = is_sing || proj_equal(d.k_vec, p);
  CHECK(is_sing);
  // and its b-vector vanishes identically (2-torsion)
  bool bz = true;
  for (auto& z : d.b_vec) bz = bz && z.is_zero();
  CHECK(bz);

  CHECK_THROWS_WITH(evaluate_embedding(c, wp[0].alpha, wp[0].beta, wp[0].alpha, wp[0].beta),
                    "degenerate pair");
}
