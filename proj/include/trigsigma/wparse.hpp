// Parser for weighted-polynomial catalog strings.
//
// Catalog data files store polynomials in a small ASCII grammar:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '(' expr ')' ['^' digits]
//           | '-' factor
//           | number ['/' digits]
//           | variable ['^' digits]
//
// Multiplication is always explicit ('*'), exponents are positive integers,
// and variable names are resolved against a VarTable, so a typo'd name or a
// variable foreign to the ambient ring fails loudly at load time.

#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "trigsigma/rational.hpp"
#include "trigsigma/vartable.hpp"
#include "trigsigma/wpoly.hpp"

namespace trigsigma {

namespace wparse_detail {

struct Cursor {
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
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) +
                                ": " + what + " in '" + text + "'");
  }
  std::string read_digits() {
    skip_ws();
    std::string out;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      out += text[pos++];
    return out;
  }
  std::string read_name() {
    skip_ws();
    std::string out;
    while (pos < text.size()) {
      const char c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        out += c;
        ++pos;
      } else {
        break;
      }
    }
    return out;
  }
};

class PolyParser {
 public:
  PolyParser(const std::string& text, VarTablePtr tab)
      : cur_{text}, tab_(std::move(tab)) {}

  WeightedPoly<Rational> run() {
    WeightedPoly<Rational> p = expr();
    if (cur_.peek() != '\0') cur_.fail("trailing input");
    p.normalize();
    return p;
  }

 private:
  using P = WeightedPoly<Rational>;

  P expr() {
    bool neg = false;
    if (cur_.peek() == '-') {
      cur_.take();
      neg = true;
    } else if (cur_.peek() == '+') {
      cur_.take();
    }
    P e = term();
    if (neg) e = -e;
    while (true) {
      const char c = cur_.peek();
      if (c == '+') {
        cur_.take();
        e += term();
      } else if (c == '-') {
        cur_.take();
        e -= term();
      } else {
        break;
      }
    }
    return e;
  }

  P term() {
    P e = factor();
    while (cur_.peek() == '*') {
      cur_.take();
      e = e * factor();
    }
    return e;
  }

  P factor() {
    const char c = cur_.peek();
    if (c == '(') {
      cur_.take();
      P e = expr();
      if (cur_.take() != ')') cur_.fail("expected ')'");
      return maybe_power(std::move(e));
    }
    if (c == '-') {
      cur_.take();
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return maybe_power(number());
    if (std::isalpha(static_cast<unsigned char>(c))) return maybe_power(variable());
    cur_.fail("expected factor");
  }

  P maybe_power(P base) {
    if (cur_.peek() != '^') return base;
    cur_.take();
    const std::string digits = cur_.read_digits();
    if (digits.empty()) cur_.fail("expected exponent");
    const int e = std::stoi(digits);
    if (e < 1) cur_.fail("exponent must be positive");
    P r = base;
    for (int i = 1; i < e; ++i) r = r * base;
    return r;
  }

  P number() {
    const std::string num = cur_.read_digits();
    if (cur_.peek() == '/') {
      cur_.take();
      const std::string den = cur_.read_digits();
      if (den.empty()) cur_.fail("expected denominator");
      return P::constant(tab_, Rational::parse(num + "/" + den));
    }
    return P::constant(tab_, Rational::parse(num));
  }

  P variable() {
    const std::string name = cur_.read_name();
    const auto idx = tab_->find(name);
    if (!idx) cur_.fail("unknown variable '" + name + "'");
    return P::variable(tab_, *idx);
  }

  Cursor cur_;
  VarTablePtr tab_;
};

}  // namespace wparse_detail

/// Parses the catalog polynomial grammar over the given table; throws
/// std::invalid_argument on any syntax error or unknown variable.
inline WeightedPoly<Rational> parse_wpoly(const std::string& text, const VarTablePtr& tab) {
  return wparse_detail::PolyParser(text, tab).run();
}

}  // namespace trigsigma
