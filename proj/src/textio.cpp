#include "kummer/textio.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace kummer {

namespace var {

Var krs(int r, int s) {
  if (r > s) std::swap(r, s);
  static const int off[5] = {0, 0, 4, 7, 9};  // row starts in k11..k44
  return static_cast<Var>(k11 + off[r] + (s - r));
}

std::pair<int, int> krs_pair(Var id) {
  int d = id - k11;
  for (int r = 1; r <= 4; ++r)
    for (int s = r; s <= 4; ++s)
      if (krs(r, s) - k11 == d) return {r, s};
  throw std::invalid_argument("not a k_rs id");
}

}  // namespace var

static std::vector<std::string> build_names() {
  std::vector<std::string> n(var::count);
  for (int i = 0; i <= 6; ++i) n[var::f(i)] = "f" + std::to_string(i);
  for (int j = 0; j <= 3; ++j) n[var::g(j)] = "g" + std::to_string(j);
  for (int i = 1; i <= 4; ++i) n[var::k(i)] = "k" + std::to_string(i);
  for (int r = 1; r <= 4; ++r)
    for (int s = r; s <= 4; ++s)
      n[var::krs(r, s)] = "k" + std::to_string(r) + std::to_string(s);
  for (int i = 1; i <= 6; ++i) n[var::b(i)] = "b" + std::to_string(i);
  for (int i = 1; i <= 6; ++i) n[var::v(i)] = "v" + std::to_string(i);
  n[var::x1] = "x1";
  n[var::x2] = "x2";
  n[var::y1] = "y1";
  n[var::y2] = "y2";
  n[var::x] = "x";
  n[var::w] = "w";
  for (int i = 1; i <= 3; ++i) n[var::al(i)] = "al" + std::to_string(i);
  for (int i = 1; i <= 3; ++i) n[var::be(i)] = "be" + std::to_string(i);
  n[var::t] = "t";
  n[var::kx] = "X";
  n[var::ky] = "Y";
  n[var::kz] = "Z";
  n[var::kt] = "T";
  for (int i = 1; i <= 3; ++i) n[var::KX(i)] = "KX" + std::to_string(i);
  for (int i = 1; i <= 3; ++i) n[var::KY(i)] = "KY" + std::to_string(i);
  return n;
}

const std::string& var_name(Var id) {
  static const std::vector<std::string> names = build_names();
  return names.at(id);
}

std::optional<Var> var_from_name(std::string_view name) {
  static const std::map<std::string, Var, std::less<>> lut = [] {
    std::map<std::string, Var, std::less<>> m;
    for (Var v = 0; v < var::count; ++v)
      if (!var_name(v).empty()) m[var_name(v)] = v;
    return m;
  }();
  auto it = lut.find(name);
  if (it == lut.end()) return std::nullopt;
  return it->second;
}

// ---- serialization ---------------------------------------------------------

template <class K, class CoeffPrint>
static std::string poly_to_text(const Poly<K>& p, CoeffPrint cp) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : p.t) {
    if (!first) out += " + ";
    first = false;
    out += cp(c);
    for (auto& [v, e] : m.vp) {
      out += "*" + var_name(v);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::string to_text(const QPoly& p) {
  return poly_to_text(p, [](const Rational& c) { return c.str(); });
}

std::string to_text(const F2Poly& p) {
  return poly_to_text(p, [](const F2k& c) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "[%x]", c.bits);
    return std::string(buf);
  });
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct TermAst {
  bool negate = false;
  std::string coeff;                              // rational or hex token; may be empty
  bool coeff_is_hex = false;
  std::vector<std::pair<Var, int>> powers;
};

struct Parser {
  std::string s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  bool eof() const { return i >= s.size(); }
  char peek() const { return eof() ? '\0' : s[i]; }
  char get() { return s[i++]; }

  std::vector<TermAst> parse() {
    std::vector<TermAst> terms;
    if (s == "0" || s.empty()) return terms;
    while (!eof()) {
      TermAst t;
      if (peek() == '+') get();
      if (peek() == '-') {
        t.negate = true;
        get();
      }
      parse_term(t);
      terms.push_back(std::move(t));
    }
    return terms;
  }

  void parse_term(TermAst& t) {
    bool want_factor = true;
    bool first = true;
    while (want_factor) {
      if (peek() == '[') {
        get();
        while (peek() != ']') {
          if (eof()) throw std::invalid_argument("unterminated [hex]");
          t.coeff += get();
        }
        get();
        t.coeff_is_hex = true;
      } else if (std::isdigit(static_cast<unsigned char>(peek())) ||
                 (first && peek() == '-')) {
        std::string tok;
        if (peek() == '-') tok += get();
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')
          tok += get();
        if (t.coeff.empty())
          t.coeff = tok;
        else
          throw std::invalid_argument("two coefficients in a term");
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek()))) name += get();
        int e = 1;
        if (peek() == '^') {
          get();
          std::string num;
          while (std::isdigit(static_cast<unsigned char>(peek()))) num += get();
          if (num.empty()) throw std::invalid_argument("missing exponent");
          e = std::stoi(num);
        }
        auto v = var_from_name(name);
        if (!v) throw std::invalid_argument("unknown variable: " + name);
        t.powers.push_back({*v, e});
      } else {
        throw std::invalid_argument(std::string("unexpected character: ") + peek());
      }
      first = false;
      if (peek() == '*')
        get();
      else
        want_factor = false;
    }
  }
};

Monomial ast_monomial(const TermAst& t) {
  Monomial m;
  for (auto& [v, e] : t.powers)
    m = m * Monomial::var(v, static_cast<std::uint16_t>(e));
  return m;
}

}  // namespace

QPoly parse_qpoly(const std::string& text) {
  Parser p(text);
  std::unordered_map<Monomial, Rational, MonoHash> acc;
  for (auto& t : p.parse()) {
    if (t.coeff_is_hex) throw std::invalid_argument("binary coefficient in rational context");
    Rational c = t.coeff.empty() ? Rational(1) : parse_rational(t.coeff);
    if (t.negate) c = -c;
    Monomial m = ast_monomial(t);
    auto it = acc.find(m);
    if (it == acc.end())
      acc.emplace(m, c);
    else {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  return QPoly::from_map(acc);
}

F2Poly parse_f2poly(const std::string& text, const BinaryField* F) {
  Parser p(text);
  std::unordered_map<Monomial, F2k, MonoHash> acc;
  for (auto& t : p.parse()) {
    F2k c = F->one();
    if (!t.coeff.empty()) {
      if (t.coeff_is_hex)
        c = F->elem(static_cast<std::uint32_t>(std::stoull(t.coeff, nullptr, 16)));
      else {
        // integer literal: reduce mod 2
        Rational q = parse_rational(t.coeff);
        c = mod2(q) ? F->one() : F->zero();
      }
    }
    if (c.is_zero()) continue;
    Monomial m = ast_monomial(t);
    auto it = acc.find(m);
    if (it == acc.end())
      acc.emplace(m, c);
    else {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  return F2Poly::from_map(acc);
}

// ---- field specs -----------------------------------------------------------

const BinaryField* FieldSpec::binary_field() const {
  if (kind != F2K) throw std::logic_error("not a binary field spec");
  return modulus ? BinaryField::get(k, modulus) : BinaryField::get_default(k);
}

std::string FieldSpec::str() const {
  switch (kind) {
    case Q:
      return "Q";
    case F2K:
      return binary_field()->spec_string();
    case QW:
      return "Q(w:w^2=w+" + std::to_string(c) + ")";
  }
  return {};
}

FieldSpec parse_field_spec(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  FieldSpec fs;
  if (s == "Q") {
    fs.kind = FieldSpec::Q;
    return fs;
  }
  if (s.rfind("F2^", 0) == 0) {
    fs.kind = FieldSpec::F2K;
    auto slash = s.find('/');
    fs.k = std::stoul(s.substr(3, slash == std::string::npos ? std::string::npos : slash - 3));
    if (slash != std::string::npos) fs.modulus = std::stoull(s.substr(slash + 1), nullptr, 16);
    fs.binary_field();  // validate now
    return fs;
  }
  if (s.rfind("Q(w:w^2=w+", 0) == 0 && s.back() == ')') {
    fs.kind = FieldSpec::QW;
    fs.c = std::stol(s.substr(10, s.size() - 11));
    return fs;
  }
  throw std::invalid_argument("bad field spec: " + raw);
}

// ---- curve files -----------------------------------------------------------

CurveFileData parse_curve_text(const std::string& text) {
  std::istringstream in(text);
  std::string line, f_text, g_text, field_text;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key;
    for (char c : line.substr(0, eq))
      if (!std::isspace(static_cast<unsigned char>(c))) key += c;
    std::string val = line.substr(eq + 1);
    if (key == "field")
      field_text = val;
    else if (key == "f")
      f_text = val;
    else if (key == "g")
      g_text = val;
    else if (!key.empty())
      throw std::invalid_argument("unknown curve file key: " + key);
  }
  if (field_text.empty() || f_text.empty() || g_text.empty())
    throw std::invalid_argument("curve file needs field, f and g lines");
  CurveFileData d;
  d.field = parse_field_spec(field_text);
  if (d.field.kind == FieldSpec::F2K) {
    d.f_2 = parse_f2poly(f_text, d.field.binary_field());
    d.g_2 = parse_f2poly(g_text, d.field.binary_field());
  } else {
    d.f_q = parse_qpoly(f_text);
    d.g_q = parse_qpoly(g_text);
  }
  return d;
}

CurveFileData parse_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve_text(ss.str());
}

void Records::put(const std::string& key, const std::string& value) {
  os_ << key << " = " << value << "\n";
}

void Records::text(const std::string& line) {
  if (!records_) os_ << line << "\n";
}

}  // namespace kummer
