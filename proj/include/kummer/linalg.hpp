#ifndef KUMMER_LINALG_HPP
#define KUMMER_LINALG_HPP

#include <vector>

#include "kummer/poly.hpp"

namespace kummer {

// Dense exact matrix, row-major.
template <class K>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<K> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const K& zero) : rows(r), cols(c), a(r * c, zero) {}

  K& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const K& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// In-place reduced row echelon form. Pivot columns are chosen left to right.
// Returns the pivot columns.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    K inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      K f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
  return rref(m).size();
}

// Basis of the right null space in reduced echelon form: free variables are
// set to one, one at a time, in increasing column order.
template <class K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> m, const K& zero, const K& one) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<K> v(m.cols, zero);
    v[c] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = zero - m.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Does `target` lie in the row span of `basis`?
template <class K>
bool in_row_span(const std::vector<std::vector<K>>& basis, const std::vector<K>& target,
                 const K& zero) {
  if (basis.empty()) {
    for (auto& x : target)
      if (!x.is_zero()) return false;
    return true;
  }
  std::size_t n = target.size();
  Matrix<K> m(basis.size() + 1, n, zero);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = basis[i][j];
  Matrix<K> m2 = m;
  for (std::size_t j = 0; j < n; ++j) m2.at(basis.size(), j) = target[j];
  return rank(std::move(m)) == rank(std::move(m2));
}

// 2-adic normalization of a Q-basis (the Smith-normal-form style procedure):
// scale each vector so all coordinates are 2-integral with one of valuation
// zero, then repeatedly replace mod-2 dependencies by their halved lifts
// until the reductions are independent over F2. Span over Q is preserved.
std::vector<std::vector<Rational>> two_adic_normalize(
    std::vector<std::vector<Rational>> basis, int iteration_cap = 64);

}  // namespace kummer

#endif
