#ifndef KUMMER_TEXTIO_HPP
#define KUMMER_TEXTIO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "kummer/poly.hpp"
#include "kummer/rational_function.hpp"

namespace kummer {

// ---- polynomial text format ----------------------------------------------
// terms joined by '+', each term  coeff*var^e*var^e...
// coefficients: rationals "a/b" (or "a"), binary field elements "[hex]"
// parsing is whitespace-insensitive; serialization uses the canonical order.

std::string to_text(const QPoly& p);
std::string to_text(const F2Poly& p);
template <class K>
std::string to_text(const RatFun<K>& f) {
  if (f.is_polynomial()) return to_text(f.num);
  return "(" + to_text(f.num) + ") / (" + to_text(f.den) + ")";
}

QPoly parse_qpoly(const std::string& text);
F2Poly parse_f2poly(const std::string& text, const BinaryField* F);

// ---- field specs ----------------------------------------------------------
// "Q" | "F2^k" | "F2^k/<modulus hex>" | "Q(w:w^2=w+c)"

struct FieldSpec {
  enum Kind { Q, F2K, QW } kind = Q;
  unsigned k = 0;
  std::uint64_t modulus = 0;  // 0 = default
  long c = 0;

  const BinaryField* binary_field() const;
  std::string str() const;
};

FieldSpec parse_field_spec(const std::string& s);

// ---- curve files ----------------------------------------------------------
// field = <spec>
// f = <poly in x (and w over quadratic rings)>
// g = <poly in x (and w)>

struct CurveFileData {
  FieldSpec field;
  QPoly f_q, g_q;      // over Q / Q(w): vars x, w
  F2Poly f_2, g_2;     // over F2^k: var x
};

CurveFileData parse_curve_file(const std::string& path);
CurveFileData parse_curve_text(const std::string& text);

// line-oriented `key = value` records output
class Records {
 public:
  explicit Records(std::ostream& os, bool records_mode) : os_(os), records_(records_mode) {}
  void put(const std::string& key, const std::string& value);
  void text(const std::string& line);  // only printed in text mode
  bool records_mode() const { return records_; }

 private:
  std::ostream& os_;
  bool records_;
};

}  // namespace kummer

#endif
