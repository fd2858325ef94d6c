#ifndef KUMMER_MONOMIAL_HPP
#define KUMMER_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kummer/vars.hpp"

namespace kummer {

// Power product over the fixed variable universe. Entries are sorted by
// variable id and carry positive exponents only.
struct Monomial {
  std::vector<std::pair<Var, std::uint16_t>> vp;

  Monomial() = default;
  Monomial(std::initializer_list<std::pair<Var, std::uint16_t>> l) : vp(l) {
    normalize();
  }

  static Monomial one() { return {}; }
  static Monomial var(Var v, std::uint16_t e = 1) {
    Monomial m;
    if (e) m.vp.push_back({v, e});
    return m;
  }

  bool is_one() const { return vp.empty(); }
  int deg() const {
    int d = 0;
    for (auto& [v, e] : vp) d += e;
    return d;
  }
  std::uint16_t exp(Var v) const {
    for (auto& [u, e] : vp)
      if (u == v) return e;
    return 0;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.vp.reserve(vp.size() + o.vp.size());
    auto i = vp.begin(), j = o.vp.begin();
    while (i != vp.end() || j != o.vp.end()) {
      if (j == o.vp.end() || (i != vp.end() && i->first < j->first))
        r.vp.push_back(*i++);
      else if (i == vp.end() || j->first < i->first)
        r.vp.push_back(*j++);
      else {
        r.vp.push_back({i->first, static_cast<std::uint16_t>(i->second + j->second)});
        ++i, ++j;
      }
    }
    return r;
  }

  bool divisible_by(const Monomial& o) const {
    for (auto& [v, e] : o.vp)
      if (exp(v) < e) return false;
    return true;
  }

  Monomial divide(const Monomial& o) const {
    Monomial r;
    auto j = o.vp.begin();
    for (auto& [v, e] : vp) {
      std::uint16_t sub = 0;
      while (j != o.vp.end() && j->first < v) ++j;
      if (j != o.vp.end() && j->first == v) sub = j->second;
      if (sub > e) throw std::domain_error("monomial division");
      if (e > sub) r.vp.push_back({v, static_cast<std::uint16_t>(e - sub)});
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.vp == b.vp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto& [v, e] : vp) {
      h = (h ^ v) * 1099511628211ull;
      h = (h ^ e) * 1099511628211ull;
    }
    return h;
  }

 private:
  void normalize() {
    std::sort(vp.begin(), vp.end());
    std::vector<std::pair<Var, std::uint16_t>> out;
    for (auto& [v, e] : vp) {
      if (!e) continue;
      if (!out.empty() && out.back().first == v)
        out.back().second += e;
      else
        out.push_back({v, e});
    }
    vp = std::move(out);
  }
};

// Graded lexicographic order; an earlier variable in the fixed order weighs
// more. Returns true when a < b.
inline bool mono_less(const Monomial& a, const Monomial& b) {
  int da = a.deg(), db = b.deg();
  if (da != db) return da < db;
  auto i = a.vp.begin(), j = b.vp.begin();
  while (i != a.vp.end() && j != b.vp.end()) {
    if (i->first != j->first)
      // the one with a positive exponent on the earlier variable is larger
      return i->first > j->first;
    if (i->second != j->second) return i->second < j->second;
    ++i, ++j;
  }
  return i == a.vp.end() && j != b.vp.end();
}

struct MonoHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace kummer

#endif
