#ifndef KUMMER_FACTOR_GF2_HPP
#define KUMMER_FACTOR_GF2_HPP

#include <cstdint>
#include <vector>

#include "kummer/binary_field.hpp"

namespace kummer {

// Dense univariate polynomials over GF(2^k), least significant coefficient
// first, no trailing zeros.
using UPoly = std::vector<F2k>;

namespace upoly {

UPoly make(const BinaryField* F, std::initializer_list<std::uint32_t> coeffs);
void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for zero
bool is_zero(const UPoly& p);
UPoly add(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly mod(UPoly a, const UPoly& m);
UPoly divexact(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);
UPoly derivative(const UPoly& p);
UPoly monic(UPoly p, F2k* unit = nullptr);
F2k eval(const UPoly& p, const F2k& x);
UPoly powmod_frobenius(const UPoly& base, unsigned squarings, const UPoly& m);
// coefficient-wise square root; valid when the derivative vanishes
UPoly perfect_sqrt(const UPoly& p);
UPoly map_field(const UPoly& p, const BinaryField* target);

}  // namespace upoly

struct FactorUnit {
  UPoly factor;   // monic irreducible
  int multiplicity;
};

// Complete factorization over the coefficient field: squarefree split,
// distinct-degree, then equal-degree splitting with char-2 trace maps.
// `seed` drives the equal-degree randomness; results are seed-reproducible
// and canonically ordered.
struct Factorization {
  F2k leading_unit;
  std::vector<FactorUnit> factors;
};

Factorization factor_over_binary_field(const UPoly& p, std::uint64_t seed = 1);

bool is_irreducible(const UPoly& p);

// Roots of p in its coefficient field (no multiplicities), sorted by bits.
std::vector<F2k> roots_in_field(const UPoly& p, std::uint64_t seed = 1);

// Degrees of the irreducible factors with multiplicity, ascending.
std::vector<int> factor_degree_partition(const UPoly& p, std::uint64_t seed = 1);

// Smallest root (by bit value) in `target` of an irreducible F2-polynomial
// `modulus`; used for canonical subfield embeddings.
std::uint32_t find_embedding_root(std::uint64_t modulus, const BinaryField* target);

}  // namespace kummer

#endif
