// Formal expressions in Kleinian-function symbols.
//
// Relation catalogs are stored as ASCII math strings over a small symbol
// vocabulary and parsed into PExpression, a normalized Q[mu]-linear
// combination of products of symbols:
//
//   pI...      multi-index derivative of -log sigma, e.g. p33, p2233
//              (indices ascending, from {1,2,3}, at least two of them)
//   QIJKL      the quartic combination p_{ijkl} - 2(p_ij p_kl + p_ik p_jl
//              + p_il p_jk), e.g. Q1333
//   dQIJKL_K   its first derivative d/du_K, e.g. dQ1333_3
//   mIJ        the unsigned complementary minor of the 3x3 matrix [p_ij]
//              (delete row I and column J, take the 2x2 determinant), e.g. m11
//   x, y       coordinates of a curve point (inversion identities)
//   muJ        curve parameter, J in {1,2,3,4,5,6,8,9,12}
//
// Every symbol has a weight; expressions are linted for homogeneity before
// any arithmetic is trusted.  A formal derivative implements the product
// rule on p-symbols (pI -> pI+{k}) and QIJKL -> dQIJKL_K.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "trigsigma/rational.hpp"

namespace trigsigma {

/// Weight of a symbol name; throws std::invalid_argument for unknown names.
int symbol_weight(const std::string& sym);

/// Grade of a symbol under the order-3 curve automorphism, in {0,1,2}:
/// the symbol picks up zeta^grade when (u1,u2,u3) -> (z u1, z u2, z^2 u3)
/// and correspondingly (x,y) -> (x, z y).  mu symbols have grade j mod 3
/// (grade 0 exactly for the purely trigonal subset).
int symbol_zeta_grade(const std::string& sym);

struct PTerm {
  Rational coeff;
  std::map<std::string, int> syms;  ///< symbol -> exponent (> 0)

  /// Total weight: sum of symbol weights times exponents.
  int weight() const;
  /// Zeta grade of the product, mod 3 (coefficient ignored).
  int zeta_grade() const;
  bool same_monomial(const PTerm& o) const { return syms == o.syms; }
};

class PExpression {
 public:
  PExpression() = default;

  static PExpression constant(Rational c);
  static PExpression symbol(const std::string& name, int exp = 1);

  /// Parses the ASCII grammar: sums of products of powers, with rational
  /// literals "p/q", parentheses, and unary minus.
  static PExpression parse(const std::string& text);

  const std::vector<PTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PExpression operator-() const;
  PExpression& operator+=(const PExpression& o);
  PExpression& operator-=(const PExpression& o);
  friend PExpression operator+(PExpression a, const PExpression& b) { return a += b; }
  friend PExpression operator-(PExpression a, const PExpression& b) { return a -= b; }
  friend PExpression operator*(const PExpression& a, const PExpression& b);
  PExpression& scale(const Rational& c);

  friend bool operator==(const PExpression& a, const PExpression& b);
  friend bool operator!=(const PExpression& a, const PExpression& b) { return !(a == b); }

  /// True iff all terms have equal weight (stored in *w when non-zero).
  bool is_homogeneous(int* w = nullptr) const;

  /// True iff all terms have equal zeta grade mod 3 (stored in *g).
  bool is_zeta_homogeneous(int* g = nullptr) const;

  /// Formal d/du_k (k in {1,2,3}) by the product rule.  p-symbols gain the
  /// index, Q-symbols become dQ symbols; x, y and any dQ cannot be
  /// differentiated and raise std::domain_error.
  PExpression derivative(int k) const;

  /// Replaces every mIJ minor symbol by its p-polynomial expansion.
  PExpression expand_minors() const;

  /// Replaces every QIJKL by p_{ijkl} - 2(p_ij p_kl + p_ik p_jl + p_il p_jk)
  /// and every dQIJKL_K by the derivative of that expansion.  Only for
  /// transcription cross-checks: evaluation keeps Q symbols intact because
  /// their pole order is lower than the expansion suggests.
  PExpression expand_quartics() const;

  /// The inverse rewrite: replaces every 4-index p symbol p_{ijkl} by
  /// QIJKL + 2(p_ij p_kl + p_ik p_jl + p_il p_jk).  On the catalogued
  /// 4-index relations this cancels every quadratic 2-index term, leaving an
  /// expression linear in {QIJKL, p_ab} over Q[mu] — the form whose sigma^2
  /// multiple is bilinear in derivatives of sigma.
  PExpression fold_quartics() const;

  /// Largest number of p/Q/dQ/m symbol factors (counted with multiplicity
  /// and with each symbol's sigma-power cost) in any term; this is the
  /// sigma-power needed to clear denominators.  See pfunc for evaluation.
  int max_pole_order() const;

  std::string str() const;

  void normalize();

 private:
  std::vector<PTerm> terms_;
};

}  // namespace trigsigma
