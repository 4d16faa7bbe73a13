// Branch series at the place at infinity, Abel-map integrals with their
// reversion to the u3 chart, and the double-pole normalization check of the
// bi-differential at ordinary points.  See localexp.hpp for conventions.

#include "trigsigma/localexp.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trigsigma {

namespace {

using TSeries = TruncatedSeries<Rational>;

/// Working margin over the user cutoff.  The deepest valuation any series in
/// this module carries is -12 (f at the infinite branch) and the inverse
/// helpers cost twice the leading weight, so 32 covers every construction
/// with room to spare; every stored field is certified below.
constexpr int kMargin = 32;

WPoly t_power(const VarTablePtr& tab, const std::string& name, int e,
              Rational c = Rational(1)) {
  ExpVec ev = zero_exp();
  ev[tab->index_of(name)] = static_cast<std::int16_t>(e);
  return WPoly::monomial(tab, ev, std::move(c));
}

/// f(X, Y) for a polynomial f on an [x,y] table and chart-table series X, Y;
/// mu's map by name.
WPoly eval_xy(const WPoly& f_xy, const VarTablePtr& chart, const WPoly& X, const WPoly& Y,
              int cutoff) {
  std::vector<std::optional<WPoly>> bind(f_xy.table()->size());
  bind[f_xy.table()->index_of("x")] = X;
  bind[f_xy.table()->index_of("y")] = Y;
  return substitute(f_xy, chart, bind, cutoff);
}

/// Termwise t-integral with zero constant of integration; a t^-1 term has no
/// Laurent antiderivative and throws.
WPoly integrate_var(const WPoly& p, std::size_t iv) {
  WPoly out(p.table());
  for (const auto& t : p.terms()) {
    const int k = t.e[iv];
    if (k == -1)
      throw std::runtime_error("local expansion: t^-1 term under integration (logarithm)");
    ExpVec e = t.e;
    e[iv] = static_cast<std::int16_t>(k + 1);
    out.push_term(e, t.c / Rational(k + 1));
  }
  out.normalize();
  return out;
}

/// Substitution t -> image on the chart table (p must have only non-negative
/// t-exponents; every other variable maps to itself).
WPoly compose_t(const WPoly& p, std::size_t it, const WPoly& image, int cutoff) {
  const VarTablePtr& tab = p.table();
  std::vector<std::optional<WPoly>> bind(tab->size());
  bind[it] = image;
  return substitute(p, tab, bind, cutoff);
}

[[noreturn]] void certify_fail(const std::string& what) {
  throw std::runtime_error("local_expansion_at_infinity: certification failed: " + what);
}

}  // namespace

WPoly newton_branch_solve(const WPoly& f_xy, const WPoly& x_image, const WPoly& y_initial,
                          int cutoff) {
  const VarTablePtr chart = x_image.table();
  const WPoly fy_xy = f_xy.derivative(f_xy.table()->index_of("y"));
  // The inverse of f_y is only exact 2*|leading weight| below its input
  // cutoff, so evaluate with an inner margin; the exit test is the exact
  // statement "residual == 0 through `cutoff`", which certifies the result
  // through cutoff (the next correction would sit 8 orders higher).
  const int inner = cutoff + 16;
  WPoly y = y_initial;
  int val_prev = -kNoCutoff;
  for (;;) {
    const WPoly R_in = eval_xy(f_xy, chart, x_image, y, inner);
    const WPoly R = R_in.truncated(cutoff);
    if (R.is_zero()) return y.truncated(cutoff);
    const int v = R.min_pos_weight();
    if (v <= val_prev)
      throw std::runtime_error("newton_branch_solve: residual valuation stalled at " +
                               std::to_string(v) + " (mis-specified branch)");
    val_prev = v;
    const WPoly FY = eval_xy(fy_xy, chart, x_image, y, inner);
    const TSeries inv_fy = inverse_monomial_unit(TSeries(FY, inner));
    y = y - WPoly::mul(R_in, inv_fy.poly(), inner);
  }
}

LocalExpansion local_expansion_at_infinity(const CurveParams& params, int cutoff) {
  params.validate();
  if (cutoff < 6)
    throw std::invalid_argument("local_expansion_at_infinity: cutoff must be >= 6");
  const int W = cutoff + kMargin;

  LocalExpansion le;
  le.params = params;
  le.cutoff = cutoff;
  le.orientation = -1;
  // Floor -16: the deepest intermediates are f ~ t^-12 and f_y ~ t^-8 times
  // a Laurent unit.
  le.tab = chart_table({"t", "u3"}, params.symbolic, params.purely_trigonal, -16);
  const VarTablePtr& tab = le.tab;
  const std::size_t it = tab->index_of("t"), iu = tab->index_of("u3");

  const VarTablePtr xy = curve_xy_table(params);
  const WPoly f = curve_poly(params, xy, "x", "y");
  const WPoly fy = f.derivative(xy->index_of("y"));

  // Branch: x = t^-3 exactly, y = t^-4 (1 + ...) by Newton.
  const WPoly X = t_power(tab, "t", -3);
  const WPoly Y = newton_branch_solve(f, X, t_power(tab, "t", -4), W);

  // Abel-map integrands: pullback of omega_i = g_i dx / f_y with
  // g = {1, x, y} and dx/dt = -3 t^-4.
  const WPoly FY = eval_xy(fy, tab, X, Y, W + 24);
  const TSeries inv_fy = inverse_monomial_unit(TSeries(FY, W + 24));  // exact to W + 8
  const WPoly base = WPoly::mul(t_power(tab, "t", -4, Rational(-3)), inv_fy.poly(), W);
  const std::array<WPoly, 3> g = {WPoly::constant(tab, Rational(1)), X, Y};
  std::array<WPoly, 3> u;
  for (std::size_t i = 0; i < 3; ++i) {
    const WPoly pullback = WPoly::mul(g[i], base, W);
    u[i] = integrate_var(-pullback, it);  // orientation -1
    // Certify du_i/dt = orientation * pullback in cleared form:
    // f_y du_i/dt - 3 t^-4 g_i == 0 (exact polynomial statement).
    const WPoly cleared =
        WPoly::mul(FY, u[i].derivative(it), cutoff) -
        WPoly::mul(t_power(tab, "t", -4, Rational(3)), g[i], cutoff);
    if (!cleared.is_zero())
      certify_fail("du" + std::to_string(i + 1) + "/dt does not match the pullback");
  }

  // u3 = t + O(t^2) with unit leading coefficient.
  const WPoly u3_lead = u[2].slice_pos(1);
  if (u3_lead != t_power(tab, "t", 1)) certify_fail("u3 is not t + O(t^2)");

  // Reversion by Newton: T(u3) with u3_t(T) = u3.
  const WPoly uvar = WPoly::variable(tab, iu);
  const WPoly du3 = u[2].derivative(it);  // 1 + O(t), a unit
  WPoly T = uvar;
  for (int round = 0;; ++round) {
    if (round > 64) certify_fail("reversion did not converge");
    const WPoly res = compose_t(u[2], it, T, W) - uvar;
    if (res.is_zero()) break;
    const TSeries inv_slope = inverse_unit(TSeries(compose_t(du3, it, T, W), W));
    T = T - WPoly::mul(res, inv_slope.poly(), W);
    if (T.min_pos_weight() != 1) certify_fail("reversion lost its leading term");
  }
  if (!(compose_t(u[2], it, T, cutoff) - uvar.truncated(cutoff)).is_zero())
    certify_fail("reversion round-trip u3(t(u3)) != u3");

  // Re-expansions in u3.
  const TSeries Ts(T, W);
  const TSeries Tinv = inverse_monomial_unit(Ts);  // exact to W - 2
  const TSeries Tinv2 = Tinv * Tinv;
  const WPoly x_u3 = (Tinv2 * Tinv.retruncated(Tinv2.cutoff())).poly();
  const WPoly Y4 = WPoly::mul(Y, t_power(tab, "t", 4), W);  // unit power series
  const WPoly Y4_u3 = compose_t(Y4, it, T, W);
  const TSeries Tinv4 = Tinv2 * Tinv2;
  const WPoly y_u3 =
      (TSeries(Y4_u3, Tinv4.cutoff()) * Tinv4).poly();
  // Certify the window wpos <= cutoff - 12.  The substitution must run with a
  // +12 margin: it truncates intermediate powers at its cutoff, and a
  // discarded tail term times a factor of valuation down to -12 would have
  // re-entered the tested window.
  const WPoly f_resid =
      eval_xy(f, tab, x_u3.truncated(cutoff), y_u3.truncated(cutoff), cutoff);
  if (!f_resid.truncated(cutoff - 12).is_zero())
    certify_fail("f(x(u3), y(u3)) != 0");

  le.x_t = X;
  le.y_t = Y.truncated(cutoff);
  le.u1_t = u[0].truncated(cutoff);
  le.u2_t = u[1].truncated(cutoff);
  le.u3_t = u[2].truncated(cutoff);
  le.t_u3 = T.truncated(cutoff);
  le.x_u3 = x_u3.truncated(cutoff);
  le.y_u3 = y_u3.truncated(cutoff);
  le.u1_u3 = compose_t(u[0], it, T, W).truncated(cutoff);
  le.u2_u3 = compose_t(u[1], it, T, W).truncated(cutoff);
  return le;
}

DiagonalExpansionReport diagonal_expansion_check(const CurveParams& params,
                                                 const std::pair<Rational, Rational>& base_point,
                                                 int cutoff, F0Choice flavor) {
  params.validate();
  if (params.symbolic)
    throw std::invalid_argument("diagonal_expansion_check: params must be specialized");
  if (cutoff < 1) throw std::invalid_argument("diagonal_expansion_check: cutoff must be >= 1");

  const VarTablePtr xy = curve_xy_table(params);
  const WPoly f = curve_poly(params, xy, "x", "y");
  const WPoly fy = f.derivative(xy->index_of("y"));

  // Validate the base point on a scratch chart (constants only).
  const VarTablePtr sd = chart_table({"s", "del"}, false, params.purely_trigonal, 0);
  const std::size_t is = sd->index_of("s"), id = sd->index_of("del");
  const WPoly x0 = WPoly::constant(sd, base_point.first);
  const WPoly y0 = WPoly::constant(sd, base_point.second);
  if (!eval_xy(f, sd, x0, y0, 0).is_zero())
    throw std::invalid_argument("diagonal_expansion_check: base point is not on the curve");
  if (eval_xy(fy, sd, x0, y0, 0).is_zero())
    throw std::invalid_argument(
        "diagonal_expansion_check: base point is not ordinary (f_y vanishes)");

  const int W = cutoff + 8;
  const WPoly s = WPoly::variable(sd, is), del = WPoly::variable(sd, id);
  const WPoly Xs = x0 + s;
  const WPoly Ys = newton_branch_solve(f, Xs, y0, W);
  std::vector<std::optional<WPoly>> shift(sd->size());
  shift[is] = s + del;
  const WPoly Xsd = Xs + del;
  const WPoly Ysd = substitute(Ys, sd, shift, W);

  WPoly F(curve_xzyw_table(params));
  switch (flavor) {
    case F0Choice::corrected:
      F = bidiff_F_corrected(params);
      break;
    case F0Choice::printed:
      F = bidiff_F(params);
      break;
    case F0Choice::dropped:
      F = bidiff_F_two_polar(params, F0Choice::dropped);
      break;
  }
  std::vector<std::optional<WPoly>> bind(F.table()->size());
  bind[F.table()->index_of("x")] = Xs;
  bind[F.table()->index_of("y")] = Ys;
  bind[F.table()->index_of("z")] = Xsd;
  bind[F.table()->index_of("w")] = Ysd;
  const WPoly Fser = substitute(F, sd, bind, W);

  const WPoly fy_s = eval_xy(fy, sd, Xs, Ys, W);
  const WPoly fw_sd = substitute(fy_s, sd, shift, W);
  const TSeries C = TSeries(Fser, W) * inverse_unit(TSeries(fy_s, W)) *
                    inverse_unit(TSeries(fw_sd, W));

  // Split C by del-degree: C = C0(s) + C1(s) del + O(del^2).
  WPoly d0(sd), d1(sd);
  for (const auto& t : C.poly().terms()) {
    if (t.e[id] == 0) {
      d0.push_term(t.e, t.c);
    } else if (t.e[id] == 1) {
      ExpVec e = t.e;
      e[id] = 0;
      d1.push_term(e, t.c);
    }
  }
  d0.normalize();
  d1.normalize();

  DiagonalExpansionReport rep;
  rep.cutoff = cutoff;
  rep.delta0_defect = (d0 - WPoly::constant(sd, Rational(1))).truncated(cutoff);
  rep.delta1_part = d1.truncated(cutoff - 1);
  rep.double_pole_is_one = rep.delta0_defect.is_zero();
  rep.residue_vanishes = rep.delta1_part.is_zero();
  rep.passed = rep.double_pole_is_one && rep.residue_vanishes;
  const WPoly c0 = d0.slice_pos(0);
  rep.double_pole_constant =
      c0.is_zero() ? Rational(0) : c0.terms().front().c;
  return rep;
}

}  // namespace trigsigma
