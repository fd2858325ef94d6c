#ifndef KUMMER_BINARY_FIELD_HPP
#define KUMMER_BINARY_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace kummer {

class BinaryField;

// Element of GF(2^k) in polynomial-basis representation. Elements keep a
// pointer to their field; fields are interned and live for the process.
struct F2k {
  const BinaryField* F = nullptr;
  std::uint32_t bits = 0;

  bool is_zero() const { return bits == 0; }
  bool is_one() const { return bits == 1; }

  F2k make_zero() const { return {F, 0}; }
  F2k make_one() const { return {F, 1}; }

  friend bool operator==(const F2k& a, const F2k& b) {
    return a.bits == b.bits && (a.bits == 0 || a.F == b.F);
  }
  friend bool operator!=(const F2k& a, const F2k& b) { return !(a == b); }

  F2k operator+(const F2k& o) const;
  F2k operator-(const F2k& o) const { return *this + o; }
  F2k operator-() const { return *this; }
  F2k operator*(const F2k& o) const;
  F2k operator/(const F2k& o) const;
  F2k& operator+=(const F2k& o) { return *this = *this + o; }
  F2k& operator-=(const F2k& o) { return *this = *this + o; }
  F2k& operator*=(const F2k& o) { return *this = *this * o; }

  F2k inverse() const;
  F2k sqrt() const;                 // unique square root (Frobenius inverse)
  F2k pow(unsigned long e) const;
  F2k frobenius() const;            // x -> x^2
};

// GF(2^k), k <= 32, with a user-supplied irreducible modulus. The modulus is
// verified irreducible at construction. Fields with k <= 16 carry log/exp
// tables; larger fields use carry-less multiplication.
class BinaryField {
 public:
  static const BinaryField* get(unsigned k, std::uint64_t modulus);
  static const BinaryField* get_default(unsigned k);  // shipped moduli, k <= 32
  static std::uint64_t default_modulus(unsigned k);

  unsigned degree() const { return k_; }
  std::uint64_t modulus() const { return mod_; }
  std::uint64_t order() const { return 1ull << k_; }

  F2k elem(std::uint32_t bits) const {
    if (k_ < 32 && bits >= (1u << k_)) throw std::invalid_argument("bits out of range");
    return {this, bits};
  }
  F2k zero() const { return {this, 0}; }
  F2k one() const { return {this, 1}; }
  F2k gen() const { return {this, 2}; }  // the class of x

  std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_bits(std::uint32_t a) const;

  // Canonical embedding into a field whose degree is a multiple of ours:
  // the generator is sent to the smallest root (by bit value) of our modulus
  // in the target field.
  F2k embed(const F2k& a, const BinaryField* target) const;

  std::string spec_string() const;  // "F2^k/<modulus hex>"

 private:
  BinaryField(unsigned k, std::uint64_t modulus);

  unsigned k_;
  std::uint64_t mod_;
  std::vector<std::uint32_t> exp_, log_;  // built when k <= 16
  mutable std::vector<std::pair<const BinaryField*, std::uint32_t>> embed_cache_;
};

// F2[x] polynomials packed into bits (degree <= 63), used for modulus
// validation and small factorizations.
namespace f2x {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
int degree(std::uint64_t p);  // -1 for the zero polynomial
bool is_irreducible(std::uint64_t p);
}  // namespace f2x

F2k sqrt_char2(const F2k& x);

}  // namespace kummer

#endif
