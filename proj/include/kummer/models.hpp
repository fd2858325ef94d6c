#ifndef KUMMER_MODELS_HPP
#define KUMMER_MODELS_HPP

#include <optional>

#include "kummer/curve_reduce.hpp"
#include "kummer/genus2.hpp"
#include "kummer/rational_function.hpp"

namespace kummer {

// ---- theta basis -----------------------------------------------------------

// The ten coordinate functions on the Jacobian in characteristic two, as
// rational functions of x1, x2, y1, y2 (denominators are powers of x1 + x2).
// With no curve attached the coefficients stay symbolic f_i / g_j variables.
struct ThetaBasisC2 {
  const BinaryField* F = nullptr;
  std::array<F2Rat, 4> k;
  std::array<F2Rat, 6> b;
};

ThetaBasisC2 theta_basis_char2_symbolic(const BinaryField* F);
ThetaBasisC2 theta_basis_char2(const CurveF2& c);

// ---- the explicit models ---------------------------------------------------

struct ModelBundle {
  const BinaryField* F = nullptr;
  F2Poly quartic;                      // Kummer quartic in k1..k4
  std::array<F2Poly, 3> desing;        // c1..c3 in b1..b6
  std::array<F2Poly, 6> bbar_quadrics; // b_i as quadrics in k1..k4
  std::array<F2Poly, 4> inverse;       // p1..p4 in b1..b6
  F2Poly weddle;                       // quartic in b1..b4
};

// f_i / g_j left symbolic
ModelBundle models_symbolic(const BinaryField* F);
// coefficients substituted from the (normalized) curve
ModelBundle models_for_curve(const CurveF2& c);

F2Poly kummer_quartic(const CurveF2& c);
std::array<F2Poly, 3> desing_quadrics(const CurveF2& c);
std::array<F2Poly, 6> bbar_as_kquadrics(const CurveF2& c);
std::array<F2Poly, 4> inverse_map(const CurveF2& c);
F2Poly weddle_quartic(const CurveF2& c);

// substitute curve coefficients for the symbolic f_i / g_j variables
F2Poly subst_curve_coeffs(const F2Poly& p, const CurveF2& c);

// ---- identity suite ---------------------------------------------------------

// The five exact identities modulo the curve ideal: quartic, three desing
// quadrics, b_i = Q_i(k), inverse-map proportionality, Weddle. Either fully
// symbolic (generic f, g) or for a concrete curve. Returns the name of the
// first failing identity, or nullopt when all hold.
std::optional<std::string> check_model_identities(const BinaryField* F,
                                                  const std::optional<CurveF2>& curve);

// ---- projective geometry helpers -------------------------------------------

using ProjPoint = std::vector<F2k>;  // normalized: first nonzero coordinate 1

ProjPoint normalize_point(ProjPoint p);
bool proj_equal(const ProjPoint& a, const ProjPoint& b);

// evaluate a polynomial in the P^3 variables k1..k4 (or b1..b6 for P^5) at a
// point
F2k eval_form(const F2Poly& form, const ProjPoint& p, Var first_var, int n_vars);

// ---- singular points, tropes, embeddings ------------------------------------

struct SingularPointsC2 {
  const BinaryField* ext = nullptr;          // splitting field used
  ProjPoint p_o;                             // [0:0:0:1]
  std::vector<std::pair<std::pair<int, int>, ProjPoint>> p_ij;  // by root indices
};

SingularPointsC2 singular_points_closed_form(const CurveF2& c, int allowed_ext = 8);

struct TropeSet {
  const BinaryField* ext = nullptr;
  // linear forms in k1..k4 over the splitting field, with labels
  std::vector<std::pair<std::string, std::vector<F2k>>> planes;
};

TropeSet trope_planes(const CurveF2& c, int allowed_ext = 8);

// [k1:...:k4] and [b1:...:b6] coordinates of the divisor class of
// (P1) + (P2) - K. Throws "degenerate pair" when x1 = x2.
struct EmbeddedDivisor {
  ProjPoint k_vec;  // on the Kummer quartic
  ProjPoint b_vec;  // on the three quadrics
};

EmbeddedDivisor evaluate_embedding(const CurveF2& c, const F2k& x1, const F2k& y1,
                                   const F2k& x2, const F2k& y2);

// hyperplane containing all trope lines and exceptional lines of Y (ordinary)
std::vector<F2k> trope_hyperplane_p5(const CurveF2& c, int allowed_ext = 8);

// Weddle surface markers: Q_O = [0:0:0:1] and Q_i = [1:a_i:a_i^2:beta_i];
// for the supersingular stratum the singular line al1*b1+b2 = al1^2*b1+b3 = 0.
struct WeddleMarkers {
  const BinaryField* ext = nullptr;
  ProjPoint q_o;
  std::vector<ProjPoint> q_i;
  std::optional<std::pair<std::vector<F2k>, std::vector<F2k>>> singular_line;
  std::optional<std::vector<F2k>> singular_plane;  // plane through all Q != Q_O
};

WeddleMarkers weddle_markers(const CurveF2& c, int allowed_ext = 8);

}  // namespace kummer

#endif
