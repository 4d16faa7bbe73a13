#include "trigsigma/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace trigsigma {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
  // Reject anything mpq's liberal parser would accept but our format forbids
  // (whitespace, hex prefixes, leading '+').
  auto digits_only = [](const std::string& s, size_t from) {
    if (from >= s.size()) return false;
    for (size_t i = from; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  const size_t num_from = (!num.empty() && num[0] == '-') ? 1 : 0;
  if (!digits_only(num, num_from) || !digits_only(den, 0))
    throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
  mpq_class v;
  if (v.set_str(num + "/" + den, 10) != 0)
    throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
  if (sgn(v.get_den()) == 0)
    throw std::invalid_argument("Rational::parse: zero denominator in '" + text + "'");
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const {
  // Cheap but effective: mix the low limbs of numerator and denominator.
  const std::size_t hn = mpz_get_ui(v_.get_num().get_mpz_t());
  const std::size_t hd = mpz_get_ui(v_.get_den().get_mpz_t());
  std::size_t h = hn * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15;
  h ^= hd + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  if (sgn(v_) < 0) h = ~h;
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace trigsigma
