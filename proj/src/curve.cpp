// Curve-side algebra: f and its coefficient polynomials, eta-numerators,
// the singular kernel, the bi-differential numerator by two routes,
// reduction modulo the curve ideal, Sylvester/Bareiss resultants and the
// discriminant checks.  See curve.hpp for the conventions.

#include "trigsigma/curve.hpp"

#include "trigsigma/wparse.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace trigsigma {

namespace {

bool index_active(int j, bool purely_trigonal) {
  const auto& act = mu_indices(purely_trigonal);
  return std::find(act.begin(), act.end(), j) != act.end();
}

WPoly var_poly(const VarTablePtr& tab, const std::string& name) {
  return WPoly::variable(tab, tab->index_of(name));
}

WPoly wpoly_pow(const WPoly& base, int e) {
  if (e < 0) throw std::invalid_argument("wpoly_pow: negative exponent");
  WPoly r = WPoly::constant(base.table(), Rational(1));
  for (int k = 0; k < e; ++k) r = r * base;
  return r;
}

/// Coefficients of p as a polynomial in variable iv; c[k] has the variable
/// divided out.  Returns the degree through *deg.
std::vector<WPoly> coeffs_in_var(const WPoly& p, std::size_t iv, int* deg) {
  int d = 0;
  for (const auto& t : p.terms()) d = std::max(d, int(t.e[iv]));
  std::vector<WPoly> c(std::size_t(d) + 1, WPoly(p.table()));
  for (const auto& t : p.terms()) {
    ExpVec e = t.e;
    const int k = e[iv];
    e[iv] = 0;
    c[std::size_t(k)].push_term(e, t.c);
  }
  for (auto& q : c) q.normalize();
  *deg = d;
  return c;
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
WPoly bareiss_det(std::vector<std::vector<WPoly>>& M, const VarTablePtr& tab) {
  const std::size_t N = M.size();
  if (N == 0) return WPoly::constant(tab, Rational(1));
  WPoly prev = WPoly::constant(tab, Rational(1));
  bool prev_is_one = true;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < N && M[s][k].is_zero()) ++s;
      if (s == N) return WPoly::zero(tab);
      std::swap(M[k], M[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) {
        WPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        M[i][j] = (num.is_zero() || prev_is_one) ? std::move(num) : divide_exact(num, prev);
      }
      M[i][k] = WPoly(tab);
    }
    prev = M[k][k];
    prev_is_one = false;
  }
  WPoly det = M[N - 1][N - 1];
  if (sign < 0) det = -det;
  return det;
}

/// Repeatedly replaces v^3 by rhs (a polynomial of v-degree <= 2) until the
/// v-degree drops below 3.
WPoly reduce_power(WPoly poly, std::size_t iv, const WPoly& rhs) {
  for (;;) {
    WPoly low(poly.table()), high(poly.table());
    bool any = false;
    for (const auto& t : poly.terms()) {
      if (t.e[iv] >= 3) {
        ExpVec e = t.e;
        e[iv] = static_cast<std::int16_t>(e[iv] - 3);
        high.push_term(e, t.c);
        any = true;
      } else {
        low.push_term(t.e, t.c);
      }
    }
    if (!any) return poly;
    low.normalize();
    high.normalize();
    poly = low + high * rhs;
  }
}

/// Two-polar form with an explicit F0 block (already on the target table).
WPoly two_polar_with_F0(const CurveParams& params, const WPoly& F0) {
  const VarTablePtr tab = curve_xzyw_table(params);
  const BidiffCatalog& cat = bidiff_catalog();
  const WPoly x = var_poly(tab, "x"), z = var_poly(tab, "z");
  const WPoly y = var_poly(tab, "y"), w = var_poly(tab, "w");
  const WPoly Qxz = apply_params(cat.Q, params, tab);
  const WPoly Qzx = swap_points(Qxz);
  const WPoly Txz = apply_params(cat.T, params, tab);
  const WPoly Tzx = swap_points(Txz);
  const WPoly fxy = curve_poly(params, tab, "x", "y");
  const WPoly fzw = curve_poly(params, tab, "z", "w");
  const WPoly bracket_y = poly_part_power(fxy, "y", 1);  // y^2 + p(x) y + q(x)
  const WPoly bracket_w = poly_part_power(fzw, "w", 1);
  return (w * y + Qxz) * (w * y + Qzx) + w * (w * bracket_y + Txz) + y * (y * bracket_w + Tzx) -
         F0;
}

/// F0 tail assembled from a coefficient set {c32..c00} (mu-only values on the
/// general symbolic table); images go through apply_params.
WPoly assemble_F0(const CurveParams& params, const VarTablePtr& tab,
                  const std::map<std::string, WPoly>& coeffs) {
  const WPoly x = var_poly(tab, "x"), z = var_poly(tab, "z");
  const WPoly xpz = x + z;
  const WPoly xz = x * z;
  const WPoly x2z2 = xz * xz;
  auto coeff = [&](const char* name) { return apply_params(coeffs.at(name), params, tab); };
  return coeff("c32") * xpz * x2z2 + coeff("c22") * x2z2 + coeff("c21") * xpz * xz +
         coeff("c11") * xz + coeff("c10") * xpz + coeff("c00");
}

}  // namespace

// ---------------------------------------------------------------------------
// CurveParams
// ---------------------------------------------------------------------------

CurveParams CurveParams::symbolic_general() {
  CurveParams p;
  p.symbolic = true;
  p.purely_trigonal = false;
  return p;
}

CurveParams CurveParams::symbolic_pure() {
  CurveParams p;
  p.symbolic = true;
  p.purely_trigonal = true;
  return p;
}

CurveParams CurveParams::specialized(std::map<int, Rational> mu, bool purely_trigonal) {
  CurveParams p;
  p.symbolic = false;
  p.purely_trigonal = purely_trigonal;
  p.mu = std::move(mu);
  p.validate();
  return p;
}

Rational CurveParams::mu_value(int j) const {
  if (symbolic) throw std::invalid_argument("CurveParams: mu_value in symbolic mode");
  auto it = mu.find(j);
  return it == mu.end() ? Rational(0) : it->second;
}

void CurveParams::validate() const {
  if (symbolic && !mu.empty())
    throw std::invalid_argument("CurveParams: symbolic mode takes no mu values");
  for (const auto& [j, v] : mu) {
    if (!index_active(j, false))
      throw std::invalid_argument("CurveParams: the curve has no parameter mu" +
                                  std::to_string(j));
    if (purely_trigonal && !index_active(j, true) && !v.is_zero())
      throw std::invalid_argument(
          "CurveParams: purely trigonal curve requires mu1=mu2=mu4=mu5=mu8=0 (got mu" +
          std::to_string(j) + " != 0)");
  }
}

VarTablePtr curve_xy_table(const CurveParams& params) {
  params.validate();
  return xy_table(params.symbolic, params.purely_trigonal);
}

VarTablePtr curve_xzyw_table(const CurveParams& params) {
  params.validate();
  return xzyw_table(params.symbolic, params.purely_trigonal);
}

// ---------------------------------------------------------------------------
// f and its coefficient polynomials
// ---------------------------------------------------------------------------

WPoly mu_coefficient(const CurveParams& params, const VarTablePtr& tab, int j) {
  if (!index_active(j, false))
    throw std::invalid_argument("mu_coefficient: the curve has no parameter mu" +
                                std::to_string(j));
  if (!index_active(j, params.purely_trigonal)) return WPoly::zero(tab);
  if (params.symbolic) return var_poly(tab, "mu" + std::to_string(j));
  return WPoly::constant(tab, params.mu_value(j));
}

WPoly curve_p(const CurveParams& params, const VarTablePtr& tab, const std::string& xv) {
  const WPoly x = var_poly(tab, xv);
  return mu_coefficient(params, tab, 1) * x + mu_coefficient(params, tab, 4);
}

WPoly curve_q(const CurveParams& params, const VarTablePtr& tab, const std::string& xv) {
  const WPoly x = var_poly(tab, xv);
  return mu_coefficient(params, tab, 2) * x * x + mu_coefficient(params, tab, 5) * x +
         mu_coefficient(params, tab, 8);
}

WPoly curve_r(const CurveParams& params, const VarTablePtr& tab, const std::string& xv) {
  const WPoly x = var_poly(tab, xv);
  const WPoly x2 = x * x;
  return x2 * x2 + mu_coefficient(params, tab, 3) * x2 * x + mu_coefficient(params, tab, 6) * x2 +
         mu_coefficient(params, tab, 9) * x + mu_coefficient(params, tab, 12);
}

WPoly curve_poly(const CurveParams& params, const VarTablePtr& tab, const std::string& xv,
                 const std::string& yv) {
  params.validate();
  const WPoly y = var_poly(tab, yv);
  return y * y * y + curve_p(params, tab, xv) * y * y + curve_q(params, tab, xv) * y -
         curve_r(params, tab, xv);
}

// ---------------------------------------------------------------------------
// Parameter substitution and small polynomial utilities
// ---------------------------------------------------------------------------

WPoly apply_params(const WPoly& p, const CurveParams& params, const VarTablePtr& target) {
  params.validate();
  const VarTablePtr& src = p.table();
  std::vector<std::optional<WPoly>> bind(src->size());
  for (std::size_t i = 0; i < src->size(); ++i) {
    const std::string& nm = src->name(i);
    if (nm.rfind("mu", 0) == 0) {
      bind[i] = mu_coefficient(params, target, std::stoi(nm.substr(2)));
    } else if (target->find(nm)) {
      bind[i] = std::nullopt;  // map by name
    } else {
      bool used = false;
      for (const auto& t : p.terms())
        if (t.e[i] != 0) {
          used = true;
          break;
        }
      if (used)
        throw std::invalid_argument("apply_params: variable '" + nm +
                                    "' has no image in the target table");
      bind[i] = WPoly::zero(target);
    }
  }
  return substitute(p, target, bind);
}

Rational eval_mu_poly(const WPoly& p, const CurveParams& params) {
  if (params.symbolic)
    throw std::invalid_argument("eval_mu_poly: parameters must be specialized");
  const WPoly v = apply_params(p, params, p.table());
  if (v.is_zero()) return Rational(0);
  if (v.nterms() != 1 || v.terms().front().e != zero_exp())
    throw std::invalid_argument("eval_mu_poly: polynomial is not mu-only");
  return v.terms().front().c;
}

WPoly swap_points(const WPoly& p) {
  const VarTablePtr& tab = p.table();
  std::vector<std::size_t> m(tab->size());
  for (std::size_t i = 0; i < tab->size(); ++i) m[i] = i;
  std::swap(m[tab->index_of("x")], m[tab->index_of("z")]);
  std::swap(m[tab->index_of("y")], m[tab->index_of("w")]);
  return rename_vars(p, tab, m);
}

WPoly poly_part_power(const WPoly& g, const std::string& v, int k) {
  if (k < 0) throw std::invalid_argument("poly_part_power: negative power");
  const std::size_t iv = g.table()->index_of(v);
  WPoly r(g.table());
  for (const auto& t : g.terms()) {
    if (t.e[iv] < k) continue;
    ExpVec e = t.e;
    e[iv] = static_cast<std::int16_t>(e[iv] - k);
    r.push_term(e, t.c);
  }
  r.normalize();
  return r;
}

// ---------------------------------------------------------------------------
// Eta-numerators and the singular kernel
// ---------------------------------------------------------------------------

std::array<WPoly, 3> eta_polys(const CurveParams& params) {
  params.validate();
  const BidiffCatalog& cat = bidiff_catalog();
  const CurveParams gen = CurveParams::symbolic_general();
  const WPoly f = curve_poly(gen, cat.tab, "x", "y");
  const WPoly h1_general = cat.h1_base +
                           cat.h1_fx_multiplier * f.derivative(cat.tab->index_of("x")) +
                           cat.h1_fy_multiplier * f.derivative(cat.tab->index_of("y"));
  const VarTablePtr tab = curve_xy_table(params);
  return {apply_params(h1_general, params, tab), apply_params(cat.h2, params, tab),
          apply_params(cat.h3, params, tab)};
}

SigmaKernel sigma_kernel(const CurveParams& params) {
  params.validate();
  const VarTablePtr tab = curve_xzyw_table(params);
  const WPoly y = var_poly(tab, "y");
  const WPoly fzw = curve_poly(params, tab, "z", "w");
  // numerator = sum_{k=1..3} y^{3-k} [f(Z,W)/W^{4-k}]_W at (z,w)
  WPoly num = y * y * poly_part_power(fzw, "w", 3) + y * poly_part_power(fzw, "w", 2) +
              poly_part_power(fzw, "w", 1);
  const WPoly fxy = curve_poly(params, tab, "x", "y");
  const WPoly fy = fxy.derivative(tab->index_of("y"));
  SigmaKernel k;
  k.numerator = std::move(num);
  k.denominator = (var_poly(tab, "x") - var_poly(tab, "z")) * fy;
  return k;
}

// ---------------------------------------------------------------------------
// Bi-differential numerator
// ---------------------------------------------------------------------------

WPoly bidiff_realization_base(const CurveParams& params) {
  params.validate();
  const VarTablePtr tab = curve_xzyw_table(params);
  const std::size_t ix = tab->index_of("x"), iy = tab->index_of("y");
  const WPoly x = var_poly(tab, "x"), z = var_poly(tab, "z");
  // G is the kernel numerator seen from the second point:
  // G = w^2 + w y + y^2 + p(x) (w + y) + q(x).
  const WPoly G = swap_points(sigma_kernel(params).numerator);
  const WPoly f = curve_poly(params, tab, "x", "y");
  const WPoly fx = f.derivative(ix), fy = f.derivative(iy);
  const WPoly Gx = G.derivative(ix), Gy = G.derivative(iy);
  const WPoly zmx = z - x;
  return G * fy + zmx * (Gx * fy - Gy * fx);
}

WPoly bidiff_F_directional(const CurveParams& params) {
  params.validate();
  const VarTablePtr tab = curve_xzyw_table(params);
  const WPoly x = var_poly(tab, "x"), z = var_poly(tab, "z");
  const WPoly w = var_poly(tab, "w");
  const auto h = eta_polys(params);
  const WPoly h1 = lift_by_name(h[0], tab);
  const WPoly h2 = lift_by_name(h[1], tab);
  const WPoly h3 = lift_by_name(h[2], tab);
  const WPoly zmx = z - x;
  return bidiff_realization_base(params) + zmx * zmx * (h1 + h2 * z + h3 * w);
}

const std::map<std::string, WPoly>& corrected_F0_coeffs() {
  static const std::map<std::string, WPoly> cached = [] {
    const BidiffCatalog& cat = bidiff_catalog();
    // Solved, uniquely per block (the six F0 blocks restrict to distinct
    // diagonal monomials), from the requirements that the polar form be
    // diagonal-normalized and decompose over the kernel-derivative base.
    // The unit tests re-derive the set from those requirements.
    std::map<std::string, WPoly> m;
    m.emplace("c32", cat.F0_coeff.at("c32"));
    m.emplace("c22", parse_wpoly("-2*mu4 - 2*mu1*mu3 - 2*mu1^2*mu2 + mu1^4", cat.tab));
    m.emplace("c21", parse_wpoly("-mu3*mu4 - mu1*mu6 - 2*mu1*mu2*mu4 - mu1^2*mu5 + 2*mu1^3*mu4",
                                 cat.tab));
    m.emplace("c11", parse_wpoly("-2*mu4*mu6 - 2*mu2*mu4^2 - 2*mu1*mu9 - 4*mu1*mu4*mu5"
                                 " - 2*mu1^2*mu8 + 6*mu1^2*mu4^2",
                                 cat.tab));
    m.emplace("c10", parse_wpoly("-mu4*mu9 - mu4^2*mu5 - mu1*mu12 - 2*mu1*mu4*mu8 + 2*mu1*mu4^3",
                                 cat.tab));
    m.emplace("c00", parse_wpoly("-2*mu4*mu12 - 2*mu4^2*mu8 + mu4^4", cat.tab));
    for (const auto& [name, value] : m) {
      int wt = 0;
      if (!value.is_homogeneous(&wt))
        throw std::runtime_error("corrected_F0_coeffs: inhomogeneous entry " + name);
    }
    return m;
  }();
  return cached;
}

const WPoly& corrected_c10() { return corrected_F0_coeffs().at("c10"); }

WPoly bidiff_F0(const CurveParams& params, F0Choice choice) {
  params.validate();
  const VarTablePtr tab = curve_xzyw_table(params);
  switch (choice) {
    case F0Choice::printed:
      return assemble_F0(params, tab, bidiff_catalog().F0_coeff);
    case F0Choice::corrected:
      return assemble_F0(params, tab, corrected_F0_coeffs());
    case F0Choice::dropped:
      return WPoly::zero(tab);
  }
  throw std::invalid_argument("bidiff_F0: unknown F0Choice");
}

WPoly bidiff_F_two_polar(const CurveParams& params, F0Choice choice) {
  return two_polar_with_F0(params, bidiff_F0(params, choice));
}

WPoly bidiff_F(const CurveParams& params) {
  return bidiff_F_two_polar(params, F0Choice::printed);
}

WPoly bidiff_F_corrected(const CurveParams& params) {
  params.validate();
  const VarTablePtr tab = curve_xzyw_table(params);
  const WPoly y = var_poly(tab, "y"), w = var_poly(tab, "w");
  // p(x) y w^2 + p(z) y^2 w completes the w^2 (resp. y^2) blocks so that the
  // diagonal restriction reproduces f_y(x,y)^2 for every curve.
  const WPoly middle =
      curve_p(params, tab, "x") * y * w * w + curve_p(params, tab, "z") * y * y * w;
  return bidiff_F_two_polar(params, F0Choice::corrected) + middle;
}

EtaRealization eta_realization(const CurveParams& params) {
  params.validate();
  const VarTablePtr tab = curve_xzyw_table(params);
  const std::size_t iz = tab->index_of("z"), iw = tab->index_of("w");
  const WPoly z = var_poly(tab, "z"), w = var_poly(tab, "w");
  const WPoly xmz = var_poly(tab, "x") - z;
  const WPoly D =
      reduce_mod_curve(bidiff_F_corrected(params) - bidiff_realization_base(params), params);
  WPoly block(tab);
  try {
    block = divide_exact(D, xmz * xmz);
  } catch (const std::domain_error&) {
    throw std::runtime_error("eta_realization: residual is not divisible by (x - z)^2");
  }
  EtaRealization out;
  out.h2 = block.derivative(iz);
  out.h3 = block.derivative(iw);
  out.h1 = block - out.h2 * z - out.h3 * w;
  const auto zw_free = [&](const WPoly& p) {
    for (const auto& t : p.terms())
      if (t.e[iz] != 0 || t.e[iw] != 0) return false;
    return true;
  };
  if (!zw_free(out.h1) || !zw_free(out.h2) || !zw_free(out.h3))
    throw std::runtime_error("eta_realization: quotient is not linear in (z, w)");
  return out;
}

WPoly reduce_mod_curve(const WPoly& P, const CurveParams& params) {
  params.validate();
  const VarTablePtr& tab = P.table();
  WPoly out = P;
  if (tab->find("y")) {
    const WPoly rhs = curve_r(params, tab, "x") - curve_p(params, tab, "x") *
                          var_poly(tab, "y") * var_poly(tab, "y") -
                      curve_q(params, tab, "x") * var_poly(tab, "y");
    out = reduce_power(std::move(out), tab->index_of("y"), rhs);
  }
  if (tab->find("w")) {
    const WPoly rhs = curve_r(params, tab, "z") - curve_p(params, tab, "z") *
                          var_poly(tab, "w") * var_poly(tab, "w") -
                      curve_q(params, tab, "z") * var_poly(tab, "w");
    out = reduce_power(std::move(out), tab->index_of("w"), rhs);
  }
  return out;
}

WPoly diagonal_restriction(const WPoly& P, const CurveParams& params) {
  params.validate();
  const VarTablePtr& tab = P.table();
  std::vector<std::optional<WPoly>> bind(tab->size());
  if (tab->find("z")) bind[tab->index_of("z")] = var_poly(tab, "x");
  if (tab->find("w")) bind[tab->index_of("w")] = var_poly(tab, "y");
  return reduce_mod_curve(substitute(P, tab, bind), params);
}

FSymmetryReport check_F_symmetry(const CurveParams& params) {
  params.validate();
  const VarTablePtr tab = curve_xzyw_table(params);
  const WPoly fy = curve_poly(params, tab, "x", "y").derivative(tab->index_of("y"));
  const WPoly fy2 = reduce_mod_curve(fy * fy, params);
  FSymmetryReport rep;
  const WPoly F = bidiff_F(params);
  rep.sym_residual = reduce_mod_curve(F - swap_points(F), params);
  rep.symmetric = rep.sym_residual.is_zero();
  rep.diagonal_residual = diagonal_restriction(F, params) - fy2;
  rep.diagonal_normalized = rep.diagonal_residual.is_zero();
  const WPoly Fc = bidiff_F_corrected(params);
  rep.corrected_symmetric = reduce_mod_curve(Fc - swap_points(Fc), params).is_zero();
  rep.corrected_diagonal_normalized = (diagonal_restriction(Fc, params) - fy2).is_zero();
  try {
    const EtaRealization er = eta_realization(params);
    rep.realization_decomposes = true;
    const WPoly z = var_poly(tab, "z"), w = var_poly(tab, "w");
    const WPoly xmz = var_poly(tab, "x") - z;
    const WPoly residual = reduce_mod_curve(
        Fc - bidiff_realization_base(params) - xmz * xmz * (er.h1 + er.h2 * z + er.h3 * w),
        params);
    rep.realization_identity = residual.is_zero();
  } catch (const std::runtime_error&) {
    rep.realization_decomposes = false;
    rep.realization_identity = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Resultants and discriminants
// ---------------------------------------------------------------------------

WPoly resultant(const WPoly& a, const WPoly& b, const std::string& var) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("resultant: zero operand");
  const VarTablePtr& tab = a.table();
  if (!tab->same_as(*b.table()))
    throw std::invalid_argument("resultant: mixed variable tables");
  const std::size_t iv = tab->index_of(var);
  int m = 0, n = 0;
  const std::vector<WPoly> A = coeffs_in_var(a, iv, &m);
  const std::vector<WPoly> B = coeffs_in_var(b, iv, &n);
  if (m == 0 && n == 0) return WPoly::constant(tab, Rational(1));
  if (m == 0) return wpoly_pow(A[0], n);
  if (n == 0) return wpoly_pow(B[0], m);
  const std::size_t N = std::size_t(m) + std::size_t(n);
  std::vector<std::vector<WPoly>> M(N, std::vector<WPoly>(N, WPoly(tab)));
  for (std::size_t r = 0; r < std::size_t(n); ++r)
    for (std::size_t k = 0; k <= std::size_t(m); ++k) M[r][r + k] = A[std::size_t(m) - k];
  for (std::size_t r = 0; r < std::size_t(m); ++r)
    for (std::size_t k = 0; k <= std::size_t(n); ++k)
      M[std::size_t(n) + r][r + k] = B[std::size_t(n) - k];
  return bareiss_det(M, tab);
}

DiscriminantReport discriminant_resultants(const CurveParams& params) {
  params.validate();
  if (params.symbolic && !params.purely_trigonal)
    throw std::invalid_argument(
        "discriminant_resultants: parameters must be specialized or purely trigonal");
  const VarTablePtr tab = curve_xy_table(params);
  const WPoly f = curve_poly(params, tab, "x", "y");
  const WPoly fx = f.derivative(tab->index_of("x"));
  const WPoly fy = f.derivative(tab->index_of("y"));

  DiscriminantReport rep;
  rep.pure = params.purely_trigonal;
  rep.symbolic = params.symbolic;
  rep.r1 = resultant(resultant(f, fx, "y"), resultant(f, fy, "y"), "x");
  rep.r2 = resultant(resultant(f, fx, "x"), resultant(f, fy, "x"), "y");
  if (!params.symbolic) rep.singular = rep.r1.is_zero();

  if (!rep.pure) return rep;

  const WPoly r = curve_r(params, tab, "x");
  const WPoly rprime = r.derivative(tab->index_of("x"));
  const WPoly inner_sylv = resultant(r, rprime, "x");
  const Rational c27 = pow_coeff(Rational(3), 27);
  const Rational c36 = pow_coeff(Rational(3), 36);

  if (params.symbolic) {
    const WPoly inner = lift_by_name(discriminant_catalog().inner, tab);
    rep.inner_matches_sylvester = (inner_sylv == inner);
    const WPoly inner6 = wpoly_pow(inner, 6);
    try {
      rep.r1_cofactor = divide_exact(rep.r1, inner6);
      rep.displayed_divides_r1 = true;
    } catch (const std::domain_error&) {
    }
    try {
      divide_exact(rep.r2, inner6);
      rep.displayed_divides_r2 = true;
      rep.r2_cofactor = divide_exact(rep.r2, wpoly_pow(inner, 8));
    } catch (const std::domain_error&) {
    }
    WPoly expect1 = inner6;
    expect1.scale(c27);
    WPoly expect2 = wpoly_pow(inner, 8);
    expect2.scale(c36);
    rep.factor_forms_match = (rep.r1 == expect1) && (rep.r2 == expect2);
  } else {
    rep.inner_value = eval_mu_poly(lift_by_name(discriminant_catalog().inner,
                                                curve_xy_table(CurveParams::symbolic_pure())),
                                   params);
    const Rational sylv_value =
        inner_sylv.is_zero() ? Rational(0) : inner_sylv.terms().front().c;
    rep.inner_matches_sylvester = (sylv_value == rep.inner_value);
    const Rational r1v = rep.r1.is_zero() ? Rational(0) : rep.r1.terms().front().c;
    const Rational r2v = rep.r2.is_zero() ? Rational(0) : rep.r2.terms().front().c;
    rep.factor_forms_match = (r1v == c27 * pow_coeff(rep.inner_value, 6)) &&
                             (r2v == c36 * pow_coeff(rep.inner_value, 8));
    rep.displayed_divides_r1 = rep.factor_forms_match;
    rep.displayed_divides_r2 = rep.factor_forms_match;
  }
  return rep;
}

Rational discriminant_from_roots(const std::array<Rational, 4>& roots) {
  Rational d(1);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Rational diff = roots[i] - roots[j];
      d *= diff * diff * diff * diff;
    }
  return d;
}

CurveParams pure_params_from_roots(const std::array<Rational, 4>& roots) {
  const Rational e1 = roots[0] + roots[1] + roots[2] + roots[3];
  Rational e2(0), e3(0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) e2 += roots[i] * roots[j];
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k) e3 += roots[i] * roots[j] * roots[k];
  const Rational e4 = roots[0] * roots[1] * roots[2] * roots[3];
  return CurveParams::specialized({{3, -e1}, {6, e2}, {9, -e3}, {12, e4}}, true);
}

}  // namespace trigsigma
