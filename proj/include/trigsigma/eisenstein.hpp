// Exact arithmetic in Q(zeta) for a primitive cube root of unity zeta.
//
// Elements are stored as a + b*zeta with rational a, b and the reduction
// rule zeta^2 = -1 - zeta.  This is the coefficient field needed by the
// three-term addition identity, whose factors involve the curve
// automorphism (x, y) -> (x, zeta*y).

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "trigsigma/rational.hpp"

namespace trigsigma {

class Eisenstein {
 public:
  Eisenstein() = default;
  Eisenstein(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Eisenstein(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  Eisenstein(long n) : a_(n) {}                 // NOLINT(google-explicit-constructor)

  /// The primitive cube root of unity generating the field over Q.
  static Eisenstein zeta() { return Eisenstein(Rational(0), Rational(1)); }

  const Rational& re() const { return a_; }    ///< coefficient of 1
  const Rational& zc() const { return b_; }    ///< coefficient of zeta

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  Eisenstein operator-() const { return Eisenstein(-a_, -b_); }
  Eisenstein& operator+=(const Eisenstein& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Eisenstein& operator-=(const Eisenstein& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Eisenstein& operator*=(const Eisenstein& o);
  /// Exact division; throws std::invalid_argument on division by zero.
  Eisenstein& operator/=(const Eisenstein& o);

  friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
  friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
  friend Eisenstein operator*(Eisenstein x, const Eisenstein& y) { return x *= y; }
  friend Eisenstein operator/(Eisenstein x, const Eisenstein& y) { return x /= y; }
  friend bool operator==(const Eisenstein& x, const Eisenstein& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Eisenstein& x, const Eisenstein& y) { return !(x == y); }

  /// Galois conjugate zeta -> zeta^2 (complex conjugation on this field).
  Eisenstein conj() const { return Eisenstein(a_ - b_, -b_); }

  /// Field norm a^2 - a*b + b^2 (rational, zero iff the element is zero).
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  /// Human-readable "a + b*zeta" form used in diagnostics.
  std::string str() const;

  std::size_t hash() const;

 private:
  Rational a_, b_;
};

inline Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
  // (a + b z)(c + d z) = ac - bd + (ad + bc - bd) z   since z^2 = -1 - z.
  if (b_.is_zero() && o.b_.is_zero()) {  // fast path: both rational
    a_ *= o.a_;
    return *this;
  }
  const Rational bd = b_ * o.b_;
  const Rational new_a = a_ * o.a_ - bd;
  b_ = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = new_a;
  return *this;
}

inline Eisenstein& Eisenstein::operator/=(const Eisenstein& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw std::invalid_argument("Eisenstein: division by zero");
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  return *this;
}

inline std::string Eisenstein::str() const {
  if (b_.is_zero()) return a_.str();
  if (a_.is_zero()) return b_.str() + "*zeta";
  return a_.str() + (b_.sign() < 0 ? "" : "+") + b_.str() + "*zeta";
}

inline std::size_t Eisenstein::hash() const {
  return a_.hash() * 1000003u ^ b_.hash();
}

}  // namespace trigsigma

template <>
struct std::hash<trigsigma::Eisenstein> {
  std::size_t operator()(const trigsigma::Eisenstein& e) const { return e.hash(); }
};
