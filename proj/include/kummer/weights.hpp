#ifndef KUMMER_WEIGHTS_HPP
#define KUMMER_WEIGHTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "kummer/monomial.hpp"
#include "kummer/poly.hpp"

namespace kummer {

using WeightPair = std::pair<int, int>;

// The two weight functions w1, w2 on the relation-mining variables.
struct WeightSystem {
  std::vector<std::optional<WeightPair>> w;  // indexed by Var

  // Standard system: w1(x) = 0, w1(y) = 1, w1(f_i) = 2, w1(g_j) = 1;
  // w2(x) = 1, w2(y) = 3, w2(f_i) = 6-i, w2(g_j) = 3-j; k and b/v weights
  // derived from the basis functions.
  static const WeightSystem& standard();

  WeightPair weight(const Monomial& m) const;
  // Common weight of all terms, or nullopt when inhomogeneous.
  template <class K>
  std::optional<WeightPair> weight(const Poly<K>& p) const {
    if (p.is_zero()) return WeightPair{0, 0};
    std::optional<WeightPair> r;
    for (auto& [m, c] : p.t) {
      WeightPair wm = weight(m);
      if (!r)
        r = wm;
      else if (*r != wm)
        return std::nullopt;
    }
    return r;
  }
};

// A pool entry: variable plus exponent cap (-1 = unbounded; the variable
// weights must then make the target enforce a bound).
struct PoolVar {
  Var v;
  int cap = -1;
};

// Exact-total-degree constraint over a subset of the pool.
struct DegreeGroup {
  std::vector<Var> vars;
  int exact_degree;
};

// All monomials over the pool with weight exactly `target`, subject to the
// caps and group constraints, in canonical (descending graded-lex) order.
std::vector<Monomial> enumerate_weighted_monomials(const WeightSystem& ws, WeightPair target,
                                                   const std::vector<PoolVar>& pool,
                                                   const std::vector<DegreeGroup>& groups = {});

// Convenience pools.
std::vector<PoolVar> fg_pool();                   // f0..f6, g0..g3
std::vector<PoolVar> fg_k_pool(int k_cap);        // plus k1..k4 capped
DegreeGroup k_group(int exact_degree);            // k1..k4 must total exactly d

// Rewrites a degree-2d monomial in k1..k4 into the canonical k_rs pairing
// (sorted index list split in half), e.g. k1^3*k4 -> k11*k14.
Monomial to_krs_pairs(const Monomial& m);
// Inverse: expand k_rs variables into k1..k4.
Monomial from_krs_pairs(const Monomial& m);

}  // namespace kummer

#endif
