#include "trigsigma/linsolve.hpp"

#include <stdexcept>

namespace trigsigma {

namespace {

// Forward elimination into row echelon form; returns the pivot column of
// each pivot row (rows are reordered in place).  b may be null.
std::vector<std::size_t> echelonize(QMatrix& a, std::vector<Rational>* b) {
  std::vector<std::size_t> pivot_cols;
  if (a.empty()) return pivot_cols;
  const std::size_t ncols = a.front().size();
  for (auto& row : a)
    if (row.size() != ncols) throw std::invalid_argument("echelonize: ragged matrix");
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    // Pick the simplest pivot available to slow coefficient growth: prefer
    // entries equal to +-1, otherwise the first non-zero.
    std::size_t sel = a.size();
    for (std::size_t i = r; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      if (sel == a.size()) sel = i;
      if (a[i][c].is_one() || (-a[i][c]).is_one()) {
        sel = i;
        break;
      }
    }
    if (sel == a.size()) continue;
    std::swap(a[r], a[sel]);
    if (b) std::swap((*b)[r], (*b)[sel]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < ncols; ++j) a[r][j] *= inv;
    if (b) (*b)[r] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
      if (b) (*b)[i] -= f * (*b)[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

SolveOutcome solve_linear(QMatrix a, std::vector<Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  SolveOutcome out;
  if (a.empty()) {
    out.status = SolveStatus::kUnderdetermined;
    return out;
  }
  const std::size_t ncols = a.front().size();
  const auto pivot_cols = echelonize(a, &b);
  // Inconsistency: a zero row with non-zero rhs.
  for (std::size_t i = pivot_cols.size(); i < a.size(); ++i)
    if (!b[i].is_zero()) {
      out.status = SolveStatus::kInconsistent;
      return out;
    }
  out.x.assign(ncols, Rational(0));
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    is_pivot[pivot_cols[i]] = true;
    out.x[pivot_cols[i]] = b[i];
  }
  for (std::size_t c = 0; c < ncols; ++c)
    if (!is_pivot[c]) out.free_cols.push_back(c);
  out.status = out.free_cols.empty() ? SolveStatus::kUnique : SolveStatus::kUnderdetermined;
  return out;
}

std::size_t rank(QMatrix a) {
  if (a.empty()) return 0;
  return echelonize(a, nullptr).size();
}

}  // namespace trigsigma
