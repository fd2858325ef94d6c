#include "kummer/factor_gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace kummer {

namespace upoly {

UPoly make(const BinaryField* F, std::initializer_list<std::uint32_t> coeffs) {
  UPoly p;
  for (auto c : coeffs) p.push_back(F->elem(c));
  trim(p);
  return p;
}

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
bool is_zero(const UPoly& p) { return p.empty(); }

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r = a.size() >= b.size() ? a : b;
  const UPoly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, a[0].make_zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly mod(UPoly a, const UPoly& m) {
  if (m.empty()) throw std::domain_error("mod by zero");
  F2k inv = m.back().inverse();
  while (degree(a) >= degree(m)) {
    F2k q = a.back() * inv;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] += q * m[i];
    trim(a);
  }
  return a;
}

UPoly divexact(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero");
  if (a.empty()) return {};
  UPoly r = a, q(a.size() - b.size() + 1, a[0].make_zero());
  F2k inv = b.back().inverse();
  while (degree(r) >= degree(b)) {
    F2k c = r.back() * inv;
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] += c * b[i];
    trim(r);
  }
  if (!r.empty()) throw std::domain_error("inexact division");
  trim(q);
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    a = mod(std::move(a), b);
    std::swap(a, b);
  }
  return a.empty() ? a : monic(std::move(a));
}

UPoly derivative(const UPoly& p) {
  UPoly r;
  for (std::size_t i = 1; i < p.size(); ++i)
    r.push_back((i % 2) ? p[i] : p[i].make_zero());
  trim(r);
  return r;
}

UPoly monic(UPoly p, F2k* unit) {
  if (p.empty()) {
    if (unit) throw std::domain_error("monic of zero");
    return p;
  }
  F2k lc = p.back();
  if (unit) *unit = lc;
  if (!lc.is_one()) {
    F2k inv = lc.inverse();
    for (auto& c : p) c = c * inv;
  }
  return p;
}

F2k eval(const UPoly& p, const F2k& x) {
  F2k acc = x.make_zero();
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

UPoly powmod_frobenius(const UPoly& base, unsigned squarings, const UPoly& m) {
  UPoly r = mod(base, m);
  for (unsigned i = 0; i < squarings; ++i) r = mod(mul(r, r), m);
  return r;
}

UPoly perfect_sqrt(const UPoly& p) {
  UPoly r;
  for (std::size_t i = 0; i < p.size(); i += 2) {
    if (i + 1 < p.size() && !p[i + 1].is_zero())
      throw std::domain_error("not a perfect square");
    r.push_back(p[i].sqrt());
  }
  trim(r);
  return r;
}

UPoly map_field(const UPoly& p, const BinaryField* target) {
  UPoly r;
  for (auto& c : p) r.push_back(c.is_zero() ? target->zero() : c.F->embed(c, target));
  return r;
}

}  // namespace upoly

namespace {

using namespace upoly;

// xorshift64*, fixed sequence per seed
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545f4914f6cdd1dull;
  }
};

UPoly x_poly(const BinaryField* F) { return {F->zero(), F->one()}; }

// trace map sum_{i=0}^{kd-1} h^(2^i) mod m; splits products of degree-d
// irreducibles in characteristic two
UPoly trace_map(const UPoly& h, unsigned kd, const UPoly& m) {
  UPoly acc = mod(h, m), cur = acc;
  for (unsigned i = 1; i < kd; ++i) {
    cur = mod(mul(cur, cur), m);
    acc = add(acc, cur);
  }
  return acc;
}

void equal_degree_split(const UPoly& p, int d, Rng& rng, std::vector<UPoly>& out) {
  const BinaryField* F = p[0].F ? p[0].F : p[1].F;
  if (degree(p) == d) {
    out.push_back(p);
    return;
  }
  unsigned kd = F->degree() * static_cast<unsigned>(d);
  for (;;) {
    UPoly h(degree(p), F->zero());
    for (auto& c : h) c = F->elem(static_cast<std::uint32_t>(rng.next() & (F->order() - 1)));
    trim(h);
    if (h.empty()) continue;
    UPoly t = trace_map(h, kd, p);
    if (t.empty()) continue;
    UPoly g1 = gcd(t, p);
    if (degree(g1) == 0 || degree(g1) == degree(p)) continue;
    equal_degree_split(g1, d, rng, out);
    equal_degree_split(divexact(p, g1), d, rng, out);
    return;
  }
}

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i].bits != b[i].bits) return a[i].bits < b[i].bits;
  return false;
}

}  // namespace

namespace {

// characteristic-2 squarefree decomposition: (monic squarefree part, mult)
void squarefree_decompose(const UPoly& f, int mult, std::vector<std::pair<UPoly, int>>& out) {
  if (degree(f) <= 0) return;
  UPoly df = derivative(f);
  if (is_zero(df)) {
    squarefree_decompose(perfect_sqrt(f), 2 * mult, out);
    return;
  }
  UPoly c = gcd(f, df);
  UPoly w = divexact(f, c);
  int i = 1;
  while (degree(w) > 0) {
    UPoly y = gcd(w, c);
    UPoly z = divexact(w, y);
    if (degree(z) > 0) out.push_back({monic(z), i * mult});
    ++i;
    w = y;
    c = divexact(c, y);
  }
  if (degree(c) > 0) squarefree_decompose(perfect_sqrt(c), 2 * mult, out);
}

}  // namespace

Factorization factor_over_binary_field(const UPoly& p_in, std::uint64_t seed) {
  if (is_zero(p_in)) throw std::invalid_argument("factor of zero polynomial");
  Rng rng(seed);
  Factorization out;
  UPoly p = monic(p_in, &out.leading_unit);
  const BinaryField* F = p.back().F;
  if (degree(p) == 0) return out;

  std::vector<std::pair<UPoly, int>> square_free;
  squarefree_decompose(p, 1, square_free);

  // distinct-degree then equal-degree on each squarefree piece
  std::vector<FactorUnit> factors;
  for (auto& [sf, mult] : square_free) {
    UPoly q = sf;
    UPoly h = mod(x_poly(F), q);  // x^(|F|^d) mod q as d grows
    int d = 0;
    while (degree(q) > 0 && 2 * (d + 1) <= degree(q)) {
      ++d;
      h = powmod_frobenius(h, F->degree(), q);
      UPoly g = gcd(add(h, mod(x_poly(F), q)), q);
      if (degree(g) > 0) {
        std::vector<UPoly> eq;
        equal_degree_split(monic(g), d, rng, eq);
        for (auto& f : eq) factors.push_back({monic(f), mult});
        q = divexact(q, g);
        h = mod(h, q);
      }
    }
    if (degree(q) > 0) factors.push_back({monic(q), mult});
  }

  std::sort(factors.begin(), factors.end(), [](const FactorUnit& a, const FactorUnit& b) {
    return upoly_less(a.factor, b.factor);
  });
  out.factors = std::move(factors);
  return out;
}

bool is_irreducible(const UPoly& p) {
  int n = degree(p);
  if (n <= 0) return false;
  if (n == 1) return true;
  const BinaryField* F = p.back().F;
  UPoly q = monic(p);
  UPoly xq = mod(x_poly(F), q);
  // x^(|F|^n) = x mod p, and gcd(x^(|F|^(n/r)) - x, p) = 1 for prime r | n
  UPoly frob = powmod_frobenius(xq, F->degree() * n, q);
  if (!is_zero(add(frob, xq))) return false;
  std::vector<int> primes;
  int m = n;
  for (int r = 2; r * r <= m; ++r)
    if (m % r == 0) {
      primes.push_back(r);
      while (m % r == 0) m /= r;
    }
  if (m > 1) primes.push_back(m);
  for (int r : primes) {
    UPoly fr = powmod_frobenius(xq, F->degree() * (n / r), q);
    if (degree(gcd(add(fr, xq), q)) > 0) return false;
  }
  return true;
}

std::vector<F2k> roots_in_field(const UPoly& p, std::uint64_t seed) {
  auto fac = factor_over_binary_field(p, seed);
  std::vector<F2k> roots;
  for (auto& [f, m] : fac.factors)
    if (upoly::degree(f) == 1) roots.push_back(f[0]);  // monic: root = constant term
  std::sort(roots.begin(), roots.end(), [](const F2k& a, const F2k& b) { return a.bits < b.bits; });
  return roots;
}

std::vector<int> factor_degree_partition(const UPoly& p, std::uint64_t seed) {
  auto fac = factor_over_binary_field(p, seed);
  std::vector<int> degs;
  for (auto& [f, m] : fac.factors)
    for (int i = 0; i < m; ++i) degs.push_back(upoly::degree(f));
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::uint32_t find_embedding_root(std::uint64_t modulus, const BinaryField* target) {
  UPoly m;
  for (int i = 0; i <= f2x::degree(modulus); ++i)
    m.push_back(((modulus >> i) & 1) ? target->one() : target->zero());
  auto rs = roots_in_field(m, 0x5eedf00d);
  if (rs.empty()) throw std::runtime_error("embedding root not found");
  return rs.front().bits;
}

}  // namespace kummer
