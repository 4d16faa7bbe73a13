#include "trigsigma/pexpr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace trigsigma {

namespace {

int index_weight(char d) {
  switch (d) {
    case '1': return 5;
    case '2': return 2;
    case '3': return 1;
    default: throw std::invalid_argument(std::string("bad Jacobian index '") + d + "'");
  }
}

bool valid_mu_index(int j) {
  return j == 1 || j == 2 || j == 3 || j == 4 || j == 5 || j == 6 || j == 8 || j == 9 ||
         j == 12;
}

}  // namespace

int symbol_weight(const std::string& sym) {
  if (sym == "x" || sym == "z") return -3;
  if (sym == "y" || sym == "w") return -4;
  if (sym.size() >= 3 && sym.compare(0, 2, "mu") == 0) {
    const int j = std::stoi(sym.substr(2));
    if (!valid_mu_index(j))
      throw std::invalid_argument("unknown curve parameter '" + sym + "'");
    return -j;
  }
  if (sym.size() >= 3 && sym[0] == 'p') {
    int w = 0;
    for (std::size_t i = 1; i < sym.size(); ++i) {
      if (i > 1 && sym[i] < sym[i - 1])
        throw std::invalid_argument("p-symbol indices must ascend: '" + sym + "'");
      w += index_weight(sym[i]);
    }
    return -w;
  }
  if (sym.size() == 5 && sym[0] == 'Q') {
    int w = 0;
    for (std::size_t i = 1; i < 5; ++i) {
      if (i > 1 && sym[i] < sym[i - 1])
        throw std::invalid_argument("Q-symbol indices must ascend: '" + sym + "'");
      w += index_weight(sym[i]);
    }
    return -w;
  }
  if (sym.size() == 8 && sym.compare(0, 2, "dQ") == 0 && sym[6] == '_') {
    int w = index_weight(sym[7]);
    for (std::size_t i = 2; i < 6; ++i) w += index_weight(sym[i]);
    return -w;
  }
  if (sym.size() == 3 && sym[0] == 'm') {
    const int wi = index_weight(sym[1]);
    const int wj = index_weight(sym[2]);
    if (sym[2] < sym[1])
      throw std::invalid_argument("m-symbol indices must ascend: '" + sym + "'");
    return -16 + wi + wj;
  }
  throw std::invalid_argument("unknown symbol '" + sym + "'");
}

int PTerm::weight() const {
  int w = 0;
  for (const auto& [s, e] : syms) w += symbol_weight(s) * e;
  return w;
}

namespace {

int index_zeta_grade(char d) {
  switch (d) {
    case '1': return 1;
    case '2': return 1;
    case '3': return 2;
    default: throw std::invalid_argument(std::string("bad Jacobian index '") + d + "'");
  }
}

}  // namespace

int symbol_zeta_grade(const std::string& sym) {
  auto mod3 = [](int g) { return ((g % 3) + 3) % 3; };
  if (sym == "x" || sym == "z") return 0;
  if (sym == "y" || sym == "w") return 1;
  if (sym.size() >= 3 && sym.compare(0, 2, "mu") == 0) {
    symbol_weight(sym);  // validates
    return mod3(std::stoi(sym.substr(2)));
  }
  if (sym.size() >= 3 && sym[0] == 'p') {
    symbol_weight(sym);
    int g = 0;
    for (std::size_t i = 1; i < sym.size(); ++i) g -= index_zeta_grade(sym[i]);
    return mod3(g);
  }
  if (sym.size() == 5 && sym[0] == 'Q') {
    symbol_weight(sym);
    int g = 0;
    for (std::size_t i = 1; i < 5; ++i) g -= index_zeta_grade(sym[i]);
    return mod3(g);
  }
  if (sym.size() == 8 && sym.compare(0, 2, "dQ") == 0 && sym[6] == '_') {
    symbol_weight(sym);
    int g = -index_zeta_grade(sym[7]);
    for (std::size_t i = 2; i < 6; ++i) g -= index_zeta_grade(sym[i]);
    return mod3(g);
  }
  if (sym.size() == 3 && sym[0] == 'm') {
    symbol_weight(sym);
    // Product of two p-symbols whose index multisets jointly cover
    // {1,1,2,2,3,3} minus {I,J}: grade = g(I)+g(J) - 2(g1+g2+g3).
    return mod3(index_zeta_grade(sym[1]) + index_zeta_grade(sym[2]) - 8);
  }
  throw std::invalid_argument("unknown symbol '" + sym + "'");
}

int PTerm::zeta_grade() const {
  int g = 0;
  for (const auto& [s, e] : syms) g += symbol_zeta_grade(s) * e;
  return ((g % 3) + 3) % 3;
}

namespace {

int symbol_pole_order(const std::string& sym) {
  // Pole order along the theta divisor: p with n indices has order n; the
  // Hirota combination Q has order 2 (that is its raison d'etre), so dQ has
  // order 3; the 2x2 minors lie in the 27-dimensional space of order-3
  // functions.  x,y,z,w and mu are sigma-free.
  if (sym == "x" || sym == "y" || sym == "z" || sym == "w") return 0;
  if (sym.compare(0, 2, "mu") == 0) return 0;
  if (sym.compare(0, 2, "dQ") == 0) return 3;
  if (sym[0] == 'Q') return 2;
  if (sym[0] == 'm') return 3;
  if (sym[0] == 'p') return int(sym.size()) - 1;
  throw std::invalid_argument("unknown symbol '" + sym + "'");
}

}  // namespace

PExpression PExpression::constant(Rational c) {
  PExpression e;
  if (!c.is_zero()) e.terms_.push_back(PTerm{std::move(c), {}});
  return e;
}

PExpression PExpression::symbol(const std::string& name, int exp) {
  symbol_weight(name);  // validates
  PExpression e;
  e.terms_.push_back(PTerm{Rational(1), {{name, exp}}});
  return e;
}

void PExpression::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const PTerm& a, const PTerm& b) { return a.syms < b.syms; });
  std::vector<PTerm> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().same_monomial(t))
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

PExpression PExpression::operator-() const {
  PExpression r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

PExpression& PExpression::operator+=(const PExpression& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

PExpression& PExpression::operator-=(const PExpression& o) { return *this += -o; }

PExpression operator*(const PExpression& a, const PExpression& b) {
  PExpression r;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      PTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.syms = ta.syms;
      for (const auto& [s, e] : tb.syms) t.syms[s] += e;
      r.terms_.push_back(std::move(t));
    }
  r.normalize();
  return r;
}

PExpression& PExpression::scale(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const PExpression& a, const PExpression& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].coeff == b.terms_[i].coeff) ||
        a.terms_[i].syms != b.terms_[i].syms)
      return false;
  return true;
}

bool PExpression::is_homogeneous(int* w) const {
  if (terms_.empty()) return true;
  const int w0 = terms_.front().weight();
  for (const auto& t : terms_)
    if (t.weight() != w0) return false;
  if (w) *w = w0;
  return true;
}

bool PExpression::is_zeta_homogeneous(int* g) const {
  if (terms_.empty()) return true;
  const int g0 = terms_.front().zeta_grade();
  for (const auto& t : terms_)
    if (t.zeta_grade() != g0) return false;
  if (g) *g = g0;
  return true;
}

PExpression PExpression::derivative(int k) const {
  if (k < 1 || k > 3) throw std::invalid_argument("derivative index must be 1..3");
  const char kc = static_cast<char>('0' + k);
  PExpression r;
  for (const auto& t : terms_) {
    for (const auto& [s, e] : t.syms) {
      std::string ds;
      if (s[0] == 'p') {
        std::string idx = s.substr(1) + kc;
        std::sort(idx.begin(), idx.end());
        ds = "p" + idx;
      } else if (s[0] == 'Q' && s.size() == 5) {
        ds = "d" + s + "_" + kc;
      } else if (s.compare(0, 2, "mu") == 0) {
        continue;  // constant
      } else {
        throw std::domain_error("cannot differentiate symbol '" + s +
                                "' (expand minors first)");
      }
      PTerm dt;
      dt.coeff = t.coeff * Rational(e);
      dt.syms = t.syms;
      if (--dt.syms[s] == 0) dt.syms.erase(s);
      dt.syms[ds] += 1;
      r.terms_.push_back(std::move(dt));
    }
  }
  r.normalize();
  return r;
}

PExpression PExpression::expand_minors() const {
  auto P = [](const std::string& s) { return PExpression::symbol(s); };
  auto minor_poly = [&](const std::string& m) -> PExpression {
    // Unsigned complementary 2x2 minors of the symmetric matrix [p_ij]
    // (delete row I, column J; no cofactor sign).
    if (m == "m11") return P("p22") * P("p33") - P("p23") * P("p23");
    if (m == "m12") return P("p12") * P("p33") - P("p13") * P("p23");
    if (m == "m13") return P("p12") * P("p23") - P("p22") * P("p13");
    if (m == "m22") return P("p11") * P("p33") - P("p13") * P("p13");
    if (m == "m23") return P("p11") * P("p23") - P("p12") * P("p13");
    if (m == "m33") return P("p11") * P("p22") - P("p12") * P("p12");
    throw std::invalid_argument("unknown minor symbol '" + m + "'");
  };
  PExpression r;
  for (const auto& t : terms_) {
    PExpression prod = PExpression::constant(t.coeff);
    for (const auto& [s, e] : t.syms) {
      PExpression factor = s[0] == 'm' && s.size() == 3 ? minor_poly(s) : symbol(s);
      for (int i = 0; i < e; ++i) prod = prod * factor;
    }
    r += prod;
  }
  return r;
}

PExpression PExpression::expand_quartics() const {
  auto q_poly = [](const std::string& idx) {
    auto p2 = [](char a, char b) {
      std::string s{std::min(a, b), std::max(a, b)};
      return PExpression::symbol("p" + s);
    };
    PExpression e = PExpression::symbol("p" + idx);
    e -= (p2(idx[0], idx[1]) * p2(idx[2], idx[3]) + p2(idx[0], idx[2]) * p2(idx[1], idx[3]) +
          p2(idx[0], idx[3]) * p2(idx[1], idx[2]))
             .scale(Rational(2));
    return e;
  };
  PExpression r;
  for (const auto& t : terms_) {
    PExpression prod = PExpression::constant(t.coeff);
    for (const auto& [s, e] : t.syms) {
      PExpression factor;
      if (s.size() == 5 && s[0] == 'Q')
        factor = q_poly(s.substr(1));
      else if (s.size() == 8 && s.compare(0, 2, "dQ") == 0)
        factor = q_poly(s.substr(2, 4)).derivative(s[7] - '0');
      else
        factor = symbol(s);
      for (int i = 0; i < e; ++i) prod = prod * factor;
    }
    r += prod;
  }
  return r;
}

PExpression PExpression::fold_quartics() const {
  auto p2 = [](char a, char b) {
    std::string s{std::min(a, b), std::max(a, b)};
    return PExpression::symbol("p" + s);
  };
  PExpression r;
  for (const auto& t : terms_) {
    PExpression prod = PExpression::constant(t.coeff);
    for (const auto& [s, e] : t.syms) {
      PExpression factor;
      if (s.size() == 5 && s[0] == 'p') {
        const std::string idx = s.substr(1);
        factor = PExpression::symbol("Q" + idx);
        factor += (p2(idx[0], idx[1]) * p2(idx[2], idx[3]) +
                   p2(idx[0], idx[2]) * p2(idx[1], idx[3]) +
                   p2(idx[0], idx[3]) * p2(idx[1], idx[2]))
                      .scale(Rational(2));
      } else {
        factor = symbol(s);
      }
      for (int i = 0; i < e; ++i) prod = prod * factor;
    }
    r += prod;
  }
  return r;
}

int PExpression::max_pole_order() const {
  int m = 0;
  for (const auto& t : terms_) {
    int p = 0;
    for (const auto& [s, e] : t.syms) p += symbol_pole_order(s) * e;
    m = std::max(m, p);
  }
  return m;
}

std::string PExpression::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += t.coeff.str();
    for (const auto& [s, e] : t.syms) {
      out += "*" + s;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  char take() {
    const char c = peek();
    if (c) ++pos;
    return c;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what +
                                " in '" + text + "'");
  }
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_{text} {}

  PExpression parse() {
    PExpression e = parse_expr();
    if (lex_.peek() != '\0') lex_.fail("trailing input");
    return e;
  }

 private:
  PExpression parse_expr() {
    PExpression e;
    bool neg = false;
    if (lex_.peek() == '-') {
      lex_.take();
      neg = true;
    } else if (lex_.peek() == '+') {
      lex_.take();
    }
    e = parse_term();
    if (neg) e = -e;
    while (true) {
      const char c = lex_.peek();
      if (c == '+') {
        lex_.take();
        e += parse_term();
      } else if (c == '-') {
        lex_.take();
        e -= parse_term();
      } else {
        break;
      }
    }
    return e;
  }

  PExpression parse_term() {
    PExpression e = parse_factor();
    while (lex_.peek() == '*') {
      lex_.take();
      e = e * parse_factor();
    }
    return e;
  }

  PExpression parse_factor() {
    const char c = lex_.peek();
    if (c == '(') {
      lex_.take();
      PExpression e = parse_expr();
      if (lex_.take() != ')') lex_.fail("expected ')'");
      return maybe_power(std::move(e));
    }
    if (c == '-') {  // unary minus on a factor
      lex_.take();
      return -parse_factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return maybe_power(parse_number());
    if (std::isalpha(static_cast<unsigned char>(c))) return maybe_power(parse_symbol());
    lex_.fail("expected factor");
  }

  PExpression maybe_power(PExpression base) {
    if (lex_.peek() != '^') return base;
    lex_.take();
    std::string digits = read_digits();
    if (digits.empty()) lex_.fail("expected exponent");
    const int e = std::stoi(digits);
    if (e < 1) lex_.fail("exponent must be positive");
    PExpression r = base;
    for (int i = 1; i < e; ++i) r = r * base;
    return r;
  }

  PExpression parse_number() {
    const std::string num = read_digits();
    if (lex_.peek() == '/') {
      lex_.take();
      const std::string den = read_digits();
      if (den.empty()) lex_.fail("expected denominator");
      return PExpression::constant(Rational::parse(num + "/" + den));
    }
    return PExpression::constant(Rational::parse(num));
  }

  PExpression parse_symbol() {
    std::string name;
    lex_.skip_ws();
    while (lex_.pos < lex_.text.size()) {
      const char c = lex_.text[lex_.pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        name += c;
        ++lex_.pos;
      } else {
        break;
      }
    }
    try {
      symbol_weight(name);
    } catch (const std::invalid_argument& err) {
      lex_.fail(err.what());
    }
    return PExpression::symbol(name);
  }

  std::string read_digits() {
    std::string out;
    lex_.skip_ws();
    while (lex_.pos < lex_.text.size() &&
           std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
      out += lex_.text[lex_.pos];
      ++lex_.pos;
    }
    return out;
  }

  Lexer lex_;
};

}  // namespace

PExpression PExpression::parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace trigsigma
