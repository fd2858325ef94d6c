#include "kummer/weights.hpp"

#include <functional>

#include "kummer/linalg.hpp"

namespace kummer {

const WeightSystem& WeightSystem::standard() {
  static const WeightSystem ws = [] {
    WeightSystem s;
    s.w.assign(var::count, std::nullopt);
    for (int i = 0; i <= 6; ++i) s.w[var::f(i)] = WeightPair{2, 6 - i};
    for (int j = 0; j <= 3; ++j) s.w[var::g(j)] = WeightPair{1, 3 - j};
    const WeightPair kw[4] = {{0, 0}, {0, 1}, {0, 2}, {2, 4}};
    for (int i = 1; i <= 4; ++i) s.w[var::k(i)] = kw[i - 1];
    for (int r = 1; r <= 4; ++r)
      for (int t = r; t <= 4; ++t)
        s.w[var::krs(r, t)] =
            WeightPair{kw[r - 1].first + kw[t - 1].first, kw[r - 1].second + kw[t - 1].second};
    const WeightPair bw[6] = {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {5, 7}};
    for (int i = 1; i <= 6; ++i) {
      s.w[var::b(i)] = bw[i - 1];
      s.w[var::v(i)] = bw[i - 1];
    }
    s.w[var::x1] = s.w[var::x2] = s.w[var::x] = WeightPair{0, 1};
    s.w[var::y1] = s.w[var::y2] = WeightPair{1, 3};
    return s;
  }();
  return ws;
}

WeightPair WeightSystem::weight(const Monomial& m) const {
  WeightPair r{0, 0};
  for (auto& [v, e] : m.vp) {
    if (v >= w.size() || !w[v])
      throw std::invalid_argument("unweighted variable: " + var_name(v));
    r.first += w[v]->first * e;
    r.second += w[v]->second * e;
  }
  return r;
}

std::vector<Monomial> enumerate_weighted_monomials(const WeightSystem& ws, WeightPair target,
                                                   const std::vector<PoolVar>& pool,
                                                   const std::vector<DegreeGroup>& groups) {
  std::vector<Monomial> out;
  std::vector<int> group_of(var::count, -1);
  std::vector<int> group_left;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    group_left.push_back(groups[gi].exact_degree);
    for (Var v : groups[gi].vars) group_of[v] = static_cast<int>(gi);
  }

  std::vector<std::pair<Var, std::uint16_t>> cur;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t idx, int w1, int w2) {
    if (w1 < 0 || w2 < 0) return;
    if (idx == pool.size()) {
      if (w1 == 0 && w2 == 0) {
        for (int left : group_left)
          if (left != 0) return;
        Monomial m;
        m.vp = cur;
        std::sort(m.vp.begin(), m.vp.end());
        out.push_back(std::move(m));
      }
      return;
    }
    Var v = pool[idx].v;
    auto wv = ws.w.at(v);
    if (!wv) throw std::invalid_argument("unweighted pool variable");
    int g = group_of[v];
    int emax = pool[idx].cap;
    if (wv->first > 0) {
      int bound = w1 / wv->first;
      emax = emax < 0 ? bound : std::min(emax, bound);
    }
    if (wv->second > 0) {
      int bound = w2 / wv->second;
      emax = emax < 0 ? bound : std::min(emax, bound);
    }
    if (g >= 0) emax = emax < 0 ? group_left[g] : std::min(emax, group_left[g]);
    if (emax < 0)
      throw std::invalid_argument("unbounded enumeration for " + var_name(v));
    for (int e = 0; e <= emax; ++e) {
      if (e) {
        cur.push_back({v, static_cast<std::uint16_t>(e)});
        if (g >= 0) group_left[g] -= e;
      }
      rec(idx + 1, w1 - e * wv->first, w2 - e * wv->second);
      if (e) {
        cur.pop_back();
        if (g >= 0) group_left[g] += e;
      }
    }
  };
  rec(0, target.first, target.second);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return mono_less(b, a);
  });
  return out;
}

std::vector<PoolVar> fg_pool() {
  std::vector<PoolVar> p;
  for (int i = 0; i <= 6; ++i) p.push_back({var::f(i), -1});
  for (int j = 0; j <= 3; ++j) p.push_back({var::g(j), -1});
  return p;
}

std::vector<PoolVar> fg_k_pool(int k_cap) {
  auto p = fg_pool();
  for (int i = 1; i <= 4; ++i) p.push_back({var::k(i), k_cap});
  return p;
}

DegreeGroup k_group(int exact_degree) {
  return {{var::k(1), var::k(2), var::k(3), var::k(4)}, exact_degree};
}

Monomial to_krs_pairs(const Monomial& m) {
  std::vector<int> idx;
  Monomial rest;
  for (auto& [v, e] : m.vp) {
    if (v >= var::k1 && v < var::k1 + 4)
      for (int i = 0; i < e; ++i) idx.push_back(v - var::k1 + 1);
    else
      rest.vp.push_back({v, e});
  }
  if (idx.size() % 2) throw std::invalid_argument("odd k-degree");
  // consecutive pairs of the sorted index list: k1^2*k2*k3 -> k11*k23
  Monomial pairs;
  for (std::size_t i = 0; i < idx.size(); i += 2)
    pairs = pairs * Monomial::var(var::krs(idx[i], idx[i + 1]));
  return rest * pairs;
}

Monomial from_krs_pairs(const Monomial& m) {
  Monomial r;
  for (auto& [v, e] : m.vp) {
    if (v >= var::k11 && v < var::k11 + 10) {
      auto [a, b] = var::krs_pair(v);
      r = r * Monomial::var(var::k(a), e) * Monomial::var(var::k(b), e);
    } else {
      r = r * Monomial::var(v, e);
    }
  }
  return r;
}

std::vector<std::vector<Rational>> two_adic_normalize(std::vector<std::vector<Rational>> basis,
                                                      int iteration_cap) {
  if (basis.empty()) return basis;
  const std::size_t n = basis[0].size();
  auto scale_integral = [&](std::vector<Rational>& v) {
    std::optional<long> m;
    for (auto& x : v) {
      auto val = v2(x);
      if (val && (!m || *val < *m)) m = *val;
    }
    if (!m) throw std::invalid_argument("dependent input basis");
    if (*m != 0) {
      Rational f = pow2(-*m);
      for (auto& x : v) x *= f;
    }
  };

  {
    Matrix<Rational> dep(basis.size(), n, Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) dep.at(i, j) = basis[i][j];
    if (rank(std::move(dep)) != basis.size())
      throw std::invalid_argument("dependent input basis");
  }

  const BinaryField* F2 = BinaryField::get_default(1);
  for (int iter = 0; iter < iteration_cap; ++iter) {
    for (auto& v : basis) scale_integral(v);
    // relations among the mod-2 rows = kernel of the transpose
    Matrix<F2k> mt(n, basis.size(), F2->zero());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) mt.at(j, i) = F2->elem(mod2(basis[i][j]));
    auto rel = kernel_basis(std::move(mt), F2->zero(), F2->one());
    if (rel.empty()) return basis;
    // fix one relation at a time; halving a lift can change the others.
    // The lift subtracts the replaced vector so the elementary move is
    // v_last <- (sum of the others - v_last) / 2.
    const auto& r = rel.front();
    std::size_t last = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!r[i].is_zero()) last = i;
    std::vector<Rational> u(n, Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!r[i].is_zero()) {
        for (std::size_t j = 0; j < n; ++j)
          u[j] += (i == last) ? -basis[i][j] : basis[i][j];
      }
    for (auto& x : u) x /= 2;
    basis[last] = std::move(u);
  }
  throw std::runtime_error("two_adic_normalize: iteration cap exceeded");
}

}  // namespace kummer
