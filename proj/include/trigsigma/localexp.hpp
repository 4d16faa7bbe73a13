// Local analytic data of the curve: the branch at the point at infinity,
// Abel-map integrals and their reversion to the u3 chart, and the
// double-pole normalization check of the global bi-differential at ordinary
// finite points.
//
// Chart at infinity.  The (3,4)-curve has a single place at infinity, where
// x ~ t^-3 and y ~ t^-4 in a local parameter t.  The branch is pinned by
// taking x(t) = t^-3 exactly; y(t) = t^-4 (1 + ...) is then the unique
// Laurent branch with that floor, solved by Newton iteration on series
// coefficients.  Abel-map coordinates are obtained by termwise integration
// of the holomorphic-differential pullbacks,
//   u_i(t) = orientation * int (omega_i pullback) dt,   omega_i = x^{i-1},
//   y (i = 3) times dx / f_y,
// with zero constants of integration.  The orientation is fixed to -1: that
// is the sign for which u3(t) = t + O(t^2) and with it every catalogued
// leading expansion holds verbatim (u1 = u3^5/5 + ..., u2 = u3^2/2 + ...,
// x = u3^-3 + ..., y = u3^-4 + ...).  The four conventions {x = t^-3,
// y = t^-4 (1+...), u3 = t + O(t^2), du_i = +pullback} are jointly
// unsatisfiable, so the single global sign is stored as data and the
// integration round-trip invariant reads du_i/dt = orientation * pullback_i.
//
// All series live on one chart table [t, u3] (+ active mu's when symbolic)
// and are truncated to terms of positive weight <= cutoff; they are computed
// with internal margin so every stored coefficient is exact.

#pragma once

#include <utility>

#include "trigsigma/curve.hpp"
#include "trigsigma/rational.hpp"
#include "trigsigma/tables.hpp"
#include "trigsigma/vartable.hpp"
#include "trigsigma/wpoly.hpp"

namespace trigsigma {

/// Branch and Abel-map series at the place at infinity.  The *_t fields are
/// series in t, the *_u3 fields their re-expansions through t(u3).
struct LocalExpansion {
  CurveParams params;
  VarTablePtr tab;       ///< [t, u3] (+ active mu's when symbolic)
  int cutoff = 0;        ///< positive-weight truncation of every stored series
  int orientation = -1;  ///< u_i = orientation * int(pullback of omega_i)

  WPoly x_t;                ///< t^-3 exactly
  WPoly y_t;                ///< t^-4 (1 + ...)
  WPoly u1_t, u2_t, u3_t;   ///< power series with zero constant term
  WPoly t_u3;               ///< reversion: t = u3 + ...
  WPoly x_u3, y_u3;         ///< Laurent series in u3 (floors -3, -4)
  WPoly u1_u3, u2_u3;       ///< u3^5/5 + ..., u3^2/2 + ...
};

/// Solves f(x_image(t), y) = 0 by Newton iteration from the initial guess
/// y_initial, truncating at positive weight <= cutoff.  f_xy lives on an
/// [x,y] table; x_image and y_initial on the chart table.  Every step must
/// strictly increase the valuation of the residual f(x_image, y_n); a stall
/// (the leading coefficient of the guess does not solve the branch equation,
/// or the branch valuation is mis-specified) throws std::runtime_error.
WPoly newton_branch_solve(const WPoly& f_xy, const WPoly& x_image, const WPoly& y_initial,
                          int cutoff);

/// pre: cutoff >= 6 (below that the reversion examples are vacuous); throws
/// std::invalid_argument otherwise.  Throws std::runtime_error if any of the
/// construction invariants fails to certify (Newton stall, a t^-1 term under
/// integration, reversion round-trip failure).
LocalExpansion local_expansion_at_infinity(const CurveParams& params, int cutoff);

/// Double-pole normalization of the global bi-differential at an ordinary
/// finite point (x0, y0) of a specialized curve.  With local coordinates
/// x = x0 + s, z = x0 + s + del and the branch series y(s), w(s + del), the
/// differential Omega = F dx dz / ((x - z)^2 f_y f_w) equals
///   C(s, del) / del^2 * ds ddel,   C = F(x,y,z,w) / (f_y(x,y) f_w(z,w)),
/// and the normalization asserts [del^0] C == 1 and [del^1] C == 0 as series
/// in s through the cutoff (double-pole coefficient exactly 1, no residue
/// term).  `flavor` selects the F put under test: corrected uses
/// bidiff_F_corrected (the normalized object; the default), printed uses the
/// catalogued closed form (fails at any mu1/mu4 != 0 specialization),
/// dropped uses the tail-free assembly (negative control).
struct DiagonalExpansionReport {
  bool double_pole_is_one = false;  ///< [del^0] C == 1 through the cutoff
  bool residue_vanishes = false;    ///< [del^1] C == 0 through the cutoff
  bool passed = false;              ///< both of the above
  Rational double_pole_constant;    ///< constant term of [del^0] C
  WPoly delta0_defect;              ///< [del^0] C - 1, series in s
  WPoly delta1_part;                ///< [del^1] C, series in s
  int cutoff = 0;
};
/// pre: params specialized; f(x0, y0) = 0 and f_y(x0, y0) != 0 (ordinary
/// point).  Violations throw std::invalid_argument.
DiagonalExpansionReport diagonal_expansion_check(const CurveParams& params,
                                                 const std::pair<Rational, Rational>& base_point,
                                                 int cutoff,
                                                 F0Choice flavor = F0Choice::corrected);

}  // namespace trigsigma
