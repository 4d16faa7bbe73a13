// Exact rational arithmetic used throughout the library.
//
// Thin value-semantic wrapper around GMP's mpq_class that pins down the
// serialization format ("p/q" in lowest terms with positive denominator,
// plain "p" when the denominator is 1) and provides hashing so rationals
// can key hash maps.  All arithmetic is exact; nothing in this project
// ever rounds.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace trigsigma {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                    // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { canonicalize(); }

  /// Parses "p", "-p" or "p/q" (no whitespace). Throws std::invalid_argument
  /// on malformed input or zero denominator.
  static Rational parse(const std::string& text);

  /// Lowest-terms representation: "p/q", or "p" when q == 1.
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  /// Exact division; throws std::invalid_argument on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  /// Numerator / denominator as decimal strings (denominator positive).
  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

  const mpq_class& raw() const { return v_; }

  std::size_t hash() const;

 private:
  void canonicalize() { v_.canonicalize(); }
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace trigsigma

template <>
struct std::hash<trigsigma::Rational> {
  std::size_t operator()(const trigsigma::Rational& r) const { return r.hash(); }
};
