// Exact linear algebra over the rationals.
//
// Small dense Gaussian elimination — sufficient for the linear systems this
// project produces (per-weight series solves, coefficient fits, basis rank
// checks), all of which stay below a few hundred columns.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trigsigma/rational.hpp"

namespace trigsigma {

using QRow = std::vector<Rational>;
using QMatrix = std::vector<QRow>;  ///< rows of equal length

enum class SolveStatus { kUnique, kUnderdetermined, kInconsistent };

struct SolveOutcome {
  SolveStatus status = SolveStatus::kUnique;
  std::vector<Rational> x;             ///< a solution when not inconsistent
  std::vector<std::size_t> free_cols;  ///< columns without pivot (underdetermined)
};

/// Solves A x = b exactly.  For an underdetermined consistent system, the
/// returned solution sets every free column to zero and free_cols lists them.
SolveOutcome solve_linear(QMatrix a, std::vector<Rational> b);

/// Rank of the matrix over Q.
std::size_t rank(QMatrix a);

}  // namespace trigsigma
