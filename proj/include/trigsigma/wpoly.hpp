// Weighted multivariate polynomials and truncated graded power series.
//
// The single arithmetic kernel of the library.  A WeightedPoly<C> is a
// sparse polynomial over an exact coefficient ring C (Rational or
// Eisenstein) with a fixed VarTable.  Terms are kept in the canonical
// order: ascending total weight, ties broken by ascending lexicographic
// comparison of the exponent vector in table order.  That order is part of
// the serialization contract, so identical polynomials print identically.
//
// Truncation is graded by the *positively weighted* variables only
// ("u-weight"): curve parameters carry negative weights and never count
// against a cutoff.  TruncatedSeries<C> wraps a polynomial with the cutoff
// it is valid to and propagates validity honestly through arithmetic, which
// matters once Laurent-style factors (negative exponents of positively
// weighted variables) appear.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trigsigma/vartable.hpp"

namespace trigsigma {

inline constexpr int kNoCutoff = std::numeric_limits<int>::max() / 4;

template <class C>
struct WTerm {
  ExpVec e{};
  std::int32_t wtot = 0;  ///< total weight (all variables)
  std::int32_t wpos = 0;  ///< truncation weight (positively weighted variables)
  C c{};
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& e) const {
    // The array is 20 int16, i.e. 5 machine words of 8 bytes.
    const unsigned char* p = reinterpret_cast<const unsigned char*>(e.data());
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (int w = 0; w < 5; ++w) {
      std::uint64_t x = 0;
      for (int b = 0; b < 8; ++b) x = (x << 8) | p[w * 8 + b];
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

template <class C>
class WeightedPoly {
 public:
  WeightedPoly() = default;
  explicit WeightedPoly(VarTablePtr tab) : tab_(std::move(tab)) {}

  static WeightedPoly zero(VarTablePtr tab) { return WeightedPoly(std::move(tab)); }

  static WeightedPoly constant(VarTablePtr tab, C c) {
    WeightedPoly p(std::move(tab));
    if (!c.is_zero()) p.push_term(zero_exp(), std::move(c));
    return p;
  }

  static WeightedPoly monomial(VarTablePtr tab, const ExpVec& e, C c) {
    WeightedPoly p(std::move(tab));
    if (!c.is_zero()) p.push_term(e, std::move(c));
    return p;
  }

  static WeightedPoly variable(const VarTablePtr& tab, std::size_t idx, int power = 1) {
    ExpVec e = zero_exp();
    e.at(idx) = static_cast<std::int16_t>(power);
    return monomial(tab, e, C(1));
  }

  const VarTablePtr& table() const { return tab_; }
  const std::vector<WTerm<C>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }

  /// Appends a term without normalizing; callers must normalize() afterwards.
  void push_term(const ExpVec& e, C c) {
    WTerm<C> t;
    t.e = e;
    t.wtot = tab_->total_weight(e);
    t.wpos = tab_->positive_weight(e);
    t.c = std::move(c);
    terms_.push_back(std::move(t));
  }

  /// Sorts canonically, merges duplicate monomials, drops zero coefficients.
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), term_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      std::size_t j = i + 1;
      while (j < terms_.size() && terms_[j].e == terms_[i].e) {
        terms_[i].c += terms_[j].c;
        ++j;
      }
      if (!terms_[i].c.is_zero()) {
        if (out != i) terms_[out] = std::move(terms_[i]);
        ++out;
      }
      i = j;
    }
    terms_.resize(out);
  }

  WeightedPoly operator-() const {
    WeightedPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  WeightedPoly& operator+=(const WeightedPoly& o) {
    require_same_table(o);
    std::vector<WTerm<C>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      if (terms_[i].e == o.terms_[j].e) {
        WTerm<C> t = std::move(terms_[i]);
        t.c += o.terms_[j].c;
        if (!t.c.is_zero()) merged.push_back(std::move(t));
        ++i, ++j;
      } else if (term_less(terms_[i], o.terms_[j])) {
        merged.push_back(std::move(terms_[i++]));
      } else {
        merged.push_back(o.terms_[j++]);
      }
    }
    while (i < terms_.size()) merged.push_back(std::move(terms_[i++]));
    while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
    terms_ = std::move(merged);
    return *this;
  }

  WeightedPoly& operator-=(const WeightedPoly& o) { return *this += -o; }

  friend WeightedPoly operator+(WeightedPoly a, const WeightedPoly& b) { return a += b; }
  friend WeightedPoly operator-(WeightedPoly a, const WeightedPoly& b) { return a -= b; }

  WeightedPoly& scale(const C& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.c *= c;
    return *this;
  }

  friend WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b) {
    return mul(a, b, kNoCutoff);
  }

  /// Product truncated to positive weight <= cutoff.
  static WeightedPoly mul(const WeightedPoly& a, const WeightedPoly& b, int cutoff) {
    a.require_same_table(b);
    WeightedPoly r(a.tab_);
    if (a.is_zero() || b.is_zero()) return r;
    // With no negatively weighted variables the canonical order is the
    // truncation order, so the inner loop can stop early.
    const bool can_break = !a.tab_->has_negative_weights();
    std::unordered_map<ExpVec, C, ExpVecHash> acc;
    acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 20));
    const WeightedPoly& outer = a.terms_.size() <= b.terms_.size() ? a : b;
    const WeightedPoly& inner = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& ta : outer.terms_) {
      const int rem = cutoff >= kNoCutoff ? kNoCutoff : cutoff - ta.wpos;
      for (const auto& tb : inner.terms_) {
        if (tb.wpos > rem) {
          if (can_break) break;
          continue;
        }
        ExpVec e;
        for (std::size_t k = 0; k < kMaxVars; ++k)
          e[k] = static_cast<std::int16_t>(ta.e[k] + tb.e[k]);
        auto [it, fresh] = acc.try_emplace(e, C(0));
        it->second += ta.c * tb.c;
      }
    }
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
      if (!c.is_zero()) r.push_term(e, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(), term_less);
    return r;
  }

  /// Partial derivative with respect to variable idx.
  WeightedPoly derivative(std::size_t idx) const {
    WeightedPoly r(tab_);
    const int wv = tab_->weight(idx);
    const int wvpos = wv > 0 ? wv : 0;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (t.e[idx] == 0) continue;
      WTerm<C> d = t;
      d.c *= C(long(t.e[idx]));
      d.e[idx] = static_cast<std::int16_t>(d.e[idx] - 1);
      d.wtot -= wv;
      d.wpos -= wvpos;
      if (!d.c.is_zero()) r.terms_.push_back(std::move(d));
    }
    // Decrementing one fixed coordinate preserves the canonical order.
    return r;
  }

  /// Drops terms of positive weight > cutoff.
  WeightedPoly truncated(int cutoff) const {
    WeightedPoly r(tab_);
    for (const auto& t : terms_)
      if (t.wpos <= cutoff) r.terms_.push_back(t);
    return r;
  }

  /// Terms of positive weight exactly w (a homogeneous slice).
  WeightedPoly slice_pos(int w) const {
    WeightedPoly r(tab_);
    for (const auto& t : terms_)
      if (t.wpos == w) r.terms_.push_back(t);
    return r;
  }

  int min_pos_weight() const {  // kNoCutoff when zero
    int m = kNoCutoff;
    for (const auto& t : terms_) m = std::min(m, int(t.wpos));
    return m;
  }
  int max_pos_weight() const {  // -kNoCutoff when zero
    int m = -kNoCutoff;
    for (const auto& t : terms_) m = std::max(m, int(t.wpos));
    return m;
  }

  /// True iff all terms share one total weight (vacuously true when zero);
  /// stores that weight in *w when non-zero.
  bool is_homogeneous(int* w = nullptr) const {
    if (terms_.empty()) return true;
    const int w0 = terms_.front().wtot;
    for (const auto& t : terms_)
      if (t.wtot != w0) return false;
    if (w) *w = w0;
    return true;
  }

  /// Coefficient of an exact monomial (zero when absent).
  C coefficient(const ExpVec& e) const {
    WTerm<C> probe;
    probe.e = e;
    probe.wtot = tab_->total_weight(e);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_less);
    if (it != terms_.end() && it->e == e) return it->c;
    return C(0);
  }

  friend bool operator==(const WeightedPoly& a, const WeightedPoly& b) {
    if (!a.tab_->same_as(*b.tab_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].e != b.terms_[i].e || !(a.terms_[i].c == b.terms_[i].c)) return false;
    return true;
  }
  friend bool operator!=(const WeightedPoly& a, const WeightedPoly& b) { return !(a == b); }

  /// Diagnostic rendering "c1*m1 + c2*m2 + ..." in canonical order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + coeff_str(t.c) + ")*" + tab_->monomial_str(t.e);
    }
    return s;
  }

  static bool term_less(const WTerm<C>& a, const WTerm<C>& b) {
    if (a.wtot != b.wtot) return a.wtot < b.wtot;
    return a.e < b.e;
  }

 private:
  static std::string coeff_str(const C& c) { return c.str(); }

  void require_same_table(const WeightedPoly& o) const {
    if (tab_.get() == o.tab_.get()) return;
    if (!tab_ || !o.tab_ || !tab_->same_as(*o.tab_))
      throw std::invalid_argument("WeightedPoly: mixed variable tables");
  }

  VarTablePtr tab_;
  std::vector<WTerm<C>> terms_;
};

// ---------------------------------------------------------------------------
// Exact single-divisor division.
// ---------------------------------------------------------------------------

namespace detail {
struct LexDesc {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return b < a; }
};
}  // namespace detail

/// Exact quotient P / D of multivariate polynomials with coefficients in a
/// field.  Uses single-divisor division with the pure lexicographic order in
/// table order; if P is divisible by D the algorithm always terminates with
/// zero remainder, otherwise it throws std::domain_error.  Exponents must be
/// non-negative.
template <class C>
WeightedPoly<C> divide_exact(const WeightedPoly<C>& P, const WeightedPoly<C>& D) {
  if (D.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  for (const auto& t : D.terms())
    for (std::size_t k = 0; k < kMaxVars; ++k)
      if (t.e[k] < 0) throw std::domain_error("divide_exact: negative exponent in divisor");
  // Leading term of D under lex-descending order.
  const WTerm<C>* lt = &D.terms().front();
  for (const auto& t : D.terms())
    if (lt->e < t.e) lt = &t;

  std::map<ExpVec, C, detail::LexDesc> rem;
  for (const auto& t : P.terms()) {
    for (std::size_t k = 0; k < kMaxVars; ++k)
      if (t.e[k] < 0) throw std::domain_error("divide_exact: negative exponent in dividend");
    rem.emplace(t.e, t.c);
  }

  WeightedPoly<C> q(P.table());
  while (!rem.empty()) {
    const ExpVec me = rem.begin()->first;
    const C mc = rem.begin()->second;
    rem.erase(rem.begin());
    if (mc.is_zero()) continue;
    ExpVec qe;
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      qe[k] = static_cast<std::int16_t>(me[k] - lt->e[k]);
      if (qe[k] < 0)
        throw std::domain_error("divide_exact: not divisible (leading monomial obstruction)");
    }
    const C qc = mc / lt->c;
    q.push_term(qe, qc);
    // rem -= qc * X^qe * D; the leading term cancels exactly by construction
    // (it was already removed from the remainder above).
    for (const auto& td : D.terms()) {
      if (&td == lt) continue;
      ExpVec e;
      for (std::size_t k = 0; k < kMaxVars; ++k)
        e[k] = static_cast<std::int16_t>(qe[k] + td.e[k]);
      auto [it, fresh] = rem.try_emplace(e, C(0));
      it->second -= qc * td.c;
      if (it->second.is_zero()) rem.erase(it);
    }
  }
  q.normalize();
  return q;
}

// ---------------------------------------------------------------------------
// Table-changing maps.
// ---------------------------------------------------------------------------

/// Moves a polynomial to another table by renaming variables positionally:
/// source variable i becomes target variable var_map[i].  Weights must match.
template <class C>
WeightedPoly<C> rename_vars(const WeightedPoly<C>& p, const VarTablePtr& target,
                            const std::vector<std::size_t>& var_map) {
  if (var_map.size() != p.table()->size())
    throw std::invalid_argument("rename_vars: map size mismatch");
  for (std::size_t i = 0; i < var_map.size(); ++i)
    if (p.table()->weight(i) != target->weight(var_map[i]))
      throw std::invalid_argument("rename_vars: weight mismatch for variable " +
                                  p.table()->name(i));
  WeightedPoly<C> r(target);
  for (const auto& t : p.terms()) {
    ExpVec e = zero_exp();
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.e[i] == 0) continue;
      e[var_map[i]] = static_cast<std::int16_t>(e[var_map[i]] + t.e[i]);
    }
    r.push_term(e, t.c);
  }
  r.normalize();
  return r;
}

/// Maps variables by equal name into a (typically larger) table.
template <class C>
WeightedPoly<C> lift_by_name(const WeightedPoly<C>& p, const VarTablePtr& target) {
  std::vector<std::size_t> m(p.table()->size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = target->index_of(p.table()->name(i));
  return rename_vars(p, target, m);
}

/// General substitution: variable i of the source is replaced by bind[i]
/// (a polynomial over the target table); variables without a binding are
/// mapped by name.  The product is truncated to positive weight <= cutoff.
/// Negative source exponents are only admitted when the binding is a single
/// monomial (then inverted exactly).
template <class C>
WeightedPoly<C> substitute(const WeightedPoly<C>& p, const VarTablePtr& target,
                           const std::vector<std::optional<WeightedPoly<C>>>& bind,
                           int cutoff = kNoCutoff) {
  if (bind.size() != p.table()->size())
    throw std::invalid_argument("substitute: binding size mismatch");
  std::vector<WeightedPoly<C>> images;
  images.reserve(bind.size());
  for (std::size_t i = 0; i < bind.size(); ++i) {
    if (bind[i])
      images.push_back(*bind[i]);
    else
      images.push_back(WeightedPoly<C>::variable(target, target->index_of(p.table()->name(i))));
  }
  std::map<std::pair<std::size_t, int>, WeightedPoly<C>> powers;
  auto power_of = [&](std::size_t i, int e) -> const WeightedPoly<C>& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    WeightedPoly<C> v(target);
    if (e >= 0) {
      v = WeightedPoly<C>::constant(target, C(1));
      for (int k = 0; k < e; ++k) v = WeightedPoly<C>::mul(v, images[i], cutoff);
    } else {
      if (images[i].nterms() != 1)
        throw std::domain_error("substitute: negative power of non-monomial image");
      const auto& t = images[i].terms().front();
      ExpVec inv = zero_exp();
      for (std::size_t k = 0; k < kMaxVars; ++k)
        inv[k] = static_cast<std::int16_t>(-t.e[k] * (-e));
      v = WeightedPoly<C>::monomial(target, inv, C(1) / pow_coeff(t.c, -e));
    }
    return powers.emplace(key, std::move(v)).first->second;
  };
  WeightedPoly<C> acc(target);
  for (const auto& t : p.terms()) {
    WeightedPoly<C> m = WeightedPoly<C>::constant(target, t.c);
    for (std::size_t i = 0; i < bind.size() && !m.is_zero(); ++i)
      if (t.e[i] != 0) m = WeightedPoly<C>::mul(m, power_of(i, t.e[i]), cutoff);
    acc += m;
  }
  return acc;
}

template <class C>
C pow_coeff(C base, int e) {
  C r(1);
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

// ---------------------------------------------------------------------------
// Truncated graded power series.
// ---------------------------------------------------------------------------

template <class C>
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(WeightedPoly<C> p, int cutoff) : p_(p.truncated(cutoff)), cutoff_(cutoff) {}

  const WeightedPoly<C>& poly() const { return p_; }
  const VarTablePtr& table() const { return p_.table(); }
  int cutoff() const { return cutoff_; }
  bool is_zero() const { return p_.is_zero(); }

  /// Smallest positive weight present; a zero series reports kNoCutoff.
  int min_wpos() const { return p_.min_pos_weight(); }

  TruncatedSeries retruncated(int cutoff) const {
    if (cutoff > cutoff_)
      throw std::invalid_argument("TruncatedSeries: cannot raise cutoff by retruncation");
    return TruncatedSeries(p_, cutoff);
  }

  TruncatedSeries operator-() const { return TruncatedSeries(-p_, cutoff_); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_equal_cutoffs(a, b);
    return TruncatedSeries(a.p_ + b.p_, a.cutoff_);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_equal_cutoffs(a, b);
    return TruncatedSeries(a.p_ - b.p_, a.cutoff_);
  }

  /// Truncated product.  The result's cutoff is the weight to which the
  /// product is actually determined by the operands: factors whose terms all
  /// have non-negative weight preserve the common cutoff, Laurent-style
  /// factors lower it.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_equal_cutoffs(a, b);
    if (a.is_zero() || b.is_zero()) return TruncatedSeries(WeightedPoly<C>(a.table()), a.cutoff_);
    const long va = long(a.cutoff_) + b.min_wpos();
    const long vb = long(b.cutoff_) + a.min_wpos();
    const int valid = int(std::min({va, vb, long(a.cutoff_)}));
    return TruncatedSeries(WeightedPoly<C>::mul(a.p_, b.p_, valid), valid);
  }

  TruncatedSeries& scale(const C& c) {
    p_.scale(c);
    return *this;
  }

  TruncatedSeries derivative(std::size_t idx) const {
    const int wv = table()->weight(idx);
    return TruncatedSeries(p_.derivative(idx), cutoff_ - (wv > 0 ? wv : 0));
  }

 private:
  static void require_equal_cutoffs(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.cutoff_ != b.cutoff_)
      throw std::invalid_argument("TruncatedSeries: cutoff mismatch (" +
                                  std::to_string(a.cutoff_) + " vs " +
                                  std::to_string(b.cutoff_) + ")");
  }

  WeightedPoly<C> p_;
  int cutoff_ = 0;
};

/// Multiplicative inverse of a series whose weight-0 slice is a non-zero
/// constant.  Solved slice by slice; exact.
template <class C>
TruncatedSeries<C> inverse_unit(const TruncatedSeries<C>& s) {
  const auto& tab = s.table();
  const int W = s.cutoff();
  if (s.min_wpos() < 0)
    throw std::domain_error("inverse_unit: series has negative-weight terms");
  std::vector<WeightedPoly<C>> a(W + 1, WeightedPoly<C>(tab));
  for (int w = 0; w <= W; ++w) a[w] = s.poly().slice_pos(w);
  if (a[0].nterms() != 1 || a[0].terms().front().e != zero_exp())
    throw std::domain_error("inverse_unit: weight-0 slice is not a non-zero constant");
  const C c0 = a[0].terms().front().c;
  std::vector<WeightedPoly<C>> b(W + 1, WeightedPoly<C>(tab));
  b[0] = WeightedPoly<C>::constant(tab, C(1) / c0);
  for (int w = 1; w <= W; ++w) {
    WeightedPoly<C> acc(tab);
    for (int j = 1; j <= w; ++j) {
      if (a[j].is_zero() || b[w - j].is_zero()) continue;
      acc += a[j] * b[w - j];
    }
    acc.scale(C(-1) / c0);
    b[w] = std::move(acc);
  }
  WeightedPoly<C> r(tab);
  for (int w = 0; w <= W; ++w) r += b[w];
  return TruncatedSeries<C>(r, W);
}

/// Inverse of c*X^alpha*(1 + q) with q of positive weight >= 1; the minimal
/// weight slice must consist of a single monomial.  The result is valid to
/// s.cutoff() - 2*m where m is that minimal weight.
template <class C>
TruncatedSeries<C> inverse_monomial_unit(const TruncatedSeries<C>& s) {
  if (s.is_zero()) throw std::domain_error("inverse_monomial_unit: zero series");
  const auto& tab = s.table();
  const int m = s.min_wpos();
  const WeightedPoly<C> lead = s.poly().slice_pos(m);
  if (lead.nterms() != 1)
    throw std::domain_error("inverse_monomial_unit: leading slice is not a monomial");
  const auto& lt = lead.terms().front();
  ExpVec inv_e = zero_exp();
  for (std::size_t k = 0; k < kMaxVars; ++k) inv_e[k] = static_cast<std::int16_t>(-lt.e[k]);
  const auto mono_inv = WeightedPoly<C>::monomial(tab, inv_e, C(1) / lt.c);
  // u = s * lead^{-1} = 1 + q with q of weight >= 1, valid to cutoff - m.
  const int Wu = s.cutoff() - m;
  TruncatedSeries<C> u(WeightedPoly<C>::mul(s.poly(), mono_inv, Wu), Wu);
  TruncatedSeries<C> uinv = inverse_unit(u);
  const int Wr = s.cutoff() - 2 * m;
  return TruncatedSeries<C>(WeightedPoly<C>::mul(uinv.poly(), mono_inv, Wr), Wr);
}

}  // namespace trigsigma
