#include "kummer/binary_field.hpp"

#include <map>
#include <mutex>

namespace kummer {

namespace f2x {

int degree(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

static std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  int dm = degree(m);
  for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // operands are reduced mod m (degree <= 32), so the product fits in 64 bits
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return mod(r, m);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

static std::uint64_t pow2k_x(unsigned iters, std::uint64_t m) {
  // x^(2^iters) mod m
  std::uint64_t r = mod(2, m);
  for (unsigned i = 0; i < iters; ++i) r = mulmod(r, r, m);
  return r;
}

bool is_irreducible(std::uint64_t p) {
  int n = degree(p);
  if (n <= 0) return false;
  if (n == 1) return true;
  if ((p & 1) == 0) return false;  // divisible by x
  // Rabin: x^(2^n) = x, and gcd(x^(2^(n/q)) - x, p) = 1 for primes q | n
  if (pow2k_x(n, p) != mod(2, p)) return false;
  std::vector<int> primes;
  int m = n;
  for (int q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) primes.push_back(m);
  for (int q : primes)
    if (degree(gcd(pow2k_x(n / q, p) ^ mod(2, p), p)) > 0) return false;
  return true;
}

}  // namespace f2x

std::uint64_t BinaryField::default_modulus(unsigned k) {
  if (k < 1 || k > 32) throw std::invalid_argument("degree out of range");
  // k = 3 ships t^3 + t^2 + 1 to match the residue computations this
  // library reproduces; otherwise the lexicographically smallest irreducible.
  if (k == 3) return 0xd;
  static std::uint64_t cache[33] = {};
  if (cache[k]) return cache[k];
  for (std::uint64_t m = (1ull << k) + 1;; m += 2)
    if (f2x::is_irreducible(m)) {
      cache[k] = m;
      return m;
    }
}

BinaryField::BinaryField(unsigned k, std::uint64_t modulus) : k_(k), mod_(modulus) {
  if (k < 1 || k > 32) throw std::invalid_argument("degree out of range");
  if (f2x::degree(modulus) != static_cast<int>(k))
    throw std::invalid_argument("modulus degree mismatch");
  if (!f2x::is_irreducible(modulus))
    throw std::invalid_argument("modulus not irreducible over F2");
  if (k_ <= 16) {
    // find a primitive element and build exp/log tables
    std::uint64_t q1 = order() - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t m = q1;
    for (std::uint64_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        primes.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) primes.push_back(m);
    auto pow_bits = [&](std::uint32_t a, std::uint64_t e) {
      std::uint64_t r = 1, base = a;
      while (e) {
        if (e & 1) r = f2x::mulmod(r, base, mod_);
        base = f2x::mulmod(base, base, mod_);
        e >>= 1;
      }
      return static_cast<std::uint32_t>(r);
    };
    std::uint32_t gen = 2;
    for (;; ++gen) {
      bool prim = true;
      for (auto p : primes)
        if (pow_bits(gen, q1 / p) == 1) { prim = false; break; }
      if (prim) break;
    }
    exp_.resize(2 * q1);
    log_.assign(order(), 0);
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < q1; ++i) {
      exp_[i] = exp_[i + q1] = static_cast<std::uint32_t>(v);
      log_[v] = static_cast<std::uint32_t>(i);
      v = f2x::mulmod(v, gen, mod_);
    }
  }
}

const BinaryField* BinaryField::get(unsigned k, std::uint64_t modulus) {
  static std::map<std::pair<unsigned, std::uint64_t>, std::unique_ptr<BinaryField>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = cache[{k, modulus}];
  if (!slot) slot.reset(new BinaryField(k, modulus));
  return slot.get();
}

const BinaryField* BinaryField::get_default(unsigned k) {
  return get(k, default_modulus(k));
}

std::uint32_t BinaryField::mul_bits(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return static_cast<std::uint32_t>(f2x::mulmod(a, b, mod_));
}

std::uint32_t BinaryField::inv_bits(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (!exp_.empty()) {
    std::uint64_t q1 = order() - 1;
    return exp_[(q1 - log_[a]) % q1];
  }
  std::uint64_t e = order() - 2, r = 1, base = a;
  while (e) {
    if (e & 1) r = f2x::mulmod(r, base, mod_);
    base = f2x::mulmod(base, base, mod_);
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::string BinaryField::spec_string() const {
  char buf[40];
  std::snprintf(buf, sizeof buf, "F2^%u/%llx", k_, static_cast<unsigned long long>(mod_));
  return buf;
}

F2k F2k::operator+(const F2k& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (F != o.F) throw std::invalid_argument("field mismatch");
  return {F, bits ^ o.bits};
}

F2k F2k::operator*(const F2k& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  if (F != o.F) throw std::invalid_argument("field mismatch");
  return {F, F->mul_bits(bits, o.bits)};
}

F2k F2k::operator/(const F2k& o) const { return *this * o.inverse(); }

F2k F2k::inverse() const {
  if (!F || is_zero()) throw std::domain_error("inverse of zero");
  return {F, F->inv_bits(bits)};
}

F2k F2k::frobenius() const {
  if (is_zero()) return *this;
  return {F, F->mul_bits(bits, bits)};
}

F2k F2k::sqrt() const {
  // x^(2^(k-1)) inverts Frobenius on a perfect field of characteristic two
  if (is_zero()) return *this;
  F2k r = *this;
  for (unsigned i = 0; i + 1 < F->degree(); ++i) r = r.frobenius();
  return r;
}

F2k F2k::pow(unsigned long e) const {
  if (is_zero()) {
    if (e == 0) throw std::domain_error("0^0");
    return *this;
  }
  F2k r = make_one(), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

F2k sqrt_char2(const F2k& x) { return x.sqrt(); }

// defined in factor_gf2.cpp: smallest root of `modulus` (an F2-polynomial)
// in `target`
std::uint32_t find_embedding_root(std::uint64_t modulus, const BinaryField* target);

F2k BinaryField::embed(const F2k& a, const BinaryField* target) const {
  if (target == this) return a;
  if (target->degree() % k_ != 0)
    throw std::invalid_argument("no embedding: degree not a multiple");
  if (a.is_zero()) return target->zero();
  std::uint32_t root_bits = 0;
  for (auto& [t, r] : embed_cache_)
    if (t == target) { root_bits = r; break; }
  if (root_bits == 0) {
    root_bits = find_embedding_root(mod_, target);
    embed_cache_.push_back({target, root_bits});
  }
  F2k r = target->elem(root_bits), acc = target->zero(), p = target->one();
  for (unsigned i = 0; i < k_; ++i) {
    if ((a.bits >> i) & 1) acc += p;
    p = p * r;
  }
  return acc;
}

}  // namespace kummer
