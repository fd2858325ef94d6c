#ifndef KUMMER_VARS_HPP
#define KUMMER_VARS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kummer {

// Fixed variable universe. The order of the ids is the canonical variable
// order used by the graded-lex term order and by all serialization.
using Var = std::uint8_t;

namespace var {
// f0..f6
inline constexpr Var f0 = 0;
// g0..g3
inline constexpr Var g0 = 7;
// k1..k4 (P^3 coordinates)
inline constexpr Var k1 = 11;
// k11,k12,k13,k14,k22,k23,k24,k33,k34,k44 (P^15 even coordinates)
inline constexpr Var k11 = 15;
// b1..b6 (P^5 / odd coordinates)
inline constexpr Var b1 = 25;
// v1..v6 (2-adically normalized odd basis)
inline constexpr Var v1 = 31;
inline constexpr Var x1 = 37;
inline constexpr Var x2 = 38;
inline constexpr Var y1 = 39;
inline constexpr Var y2 = 40;
inline constexpr Var x = 41;   // univariate curve polynomials
inline constexpr Var w = 42;   // quadratic ring generator in curve files
// al1..al3, be1..be3: Weierstrass coordinates used symbolically
inline constexpr Var al1 = 43;
inline constexpr Var be1 = 46;
inline constexpr Var t = 49;   // scratch / deformation parameter
// Katsura-Kondo P^3 coordinates
inline constexpr Var kx = 50;
inline constexpr Var ky = 51;
inline constexpr Var kz = 52;
inline constexpr Var kt = 53;
// Katsura-Kondo P^5 coordinates X1,X2,X3,Y1,Y2,Y3
inline constexpr Var KX1 = 54;
inline constexpr Var KY1 = 57;

inline constexpr Var count = 60;

inline constexpr Var f(int i) { return static_cast<Var>(f0 + i); }
inline constexpr Var g(int j) { return static_cast<Var>(g0 + j); }
inline constexpr Var k(int i) { return static_cast<Var>(k1 + i - 1); }
inline constexpr Var b(int i) { return static_cast<Var>(b1 + i - 1); }
inline constexpr Var v(int i) { return static_cast<Var>(v1 + i - 1); }
inline constexpr Var al(int i) { return static_cast<Var>(al1 + i - 1); }
inline constexpr Var be(int i) { return static_cast<Var>(be1 + i - 1); }
inline constexpr Var KX(int i) { return static_cast<Var>(KX1 + i - 1); }
inline constexpr Var KY(int i) { return static_cast<Var>(KY1 + i - 1); }

// k_rs with 1 <= r <= s <= 4, in the canonical order k11,k12,...,k44.
Var krs(int r, int s);
// Inverse of krs: the pair (r,s) of a k_rs id.
std::pair<int, int> krs_pair(Var id);
}  // namespace var

const std::string& var_name(Var id);
std::optional<Var> var_from_name(std::string_view name);

}  // namespace kummer

#endif
