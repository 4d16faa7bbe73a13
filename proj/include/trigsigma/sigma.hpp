// The sigma-series of the curve, built by undetermined coefficients.
//
// sigma(u1, u2, u3) is the odd entire function whose logarithmic second
// derivatives are the Abelian functions of the curve.  Its Taylor expansion
// at the origin is graded by the u-weights (5, 2, 1): the weight-5 slice is
// pinned to
//
//   C5 = u1 - u3 u2^2 + u3^5 / 20        (normalization epsilon = 1),
//
// and every higher slice C_w is a sum of odd-degree u-monomials of u-weight
// w whose coefficients are mu-polynomials of total weight 5 - w.  The
// higher slices are forced, weight by weight, by the catalogued 4-index
// relations: folding each relation's 4-index symbols into the quartic
// combinations Q_{ijkl} cancels every quadratic 2-index term, and the
// sigma^2 multiple of what remains is bilinear in partial derivatives of
// sigma.  Truncating those bilinear identities at the single new slice each
// one constrains yields, per weight, a linear system over Q for the unknown
// coefficients; the solver demands a unique solution and re-checks every
// imposed slice of every relation before returning.

#pragma once

#include <string>
#include <vector>

#include "trigsigma/curve.hpp"
#include "trigsigma/tables.hpp"
#include "trigsigma/vartable.hpp"
#include "trigsigma/wpoly.hpp"

namespace trigsigma {

/// Truncated sigma expansion: sum of the u-weight slices 5..cutoff.
struct SigmaSeries {
  CurveParams params;
  VarTablePtr tab;  ///< [u1,u2,u3] (+ active mu's when symbolic)
  int cutoff = 0;   ///< largest retained u-weight
  WPoly series;     ///< every term has odd u-degree; slice 5 equals C5
};

/// The pinned weight-5 slice C5 = u1 - u3 u2^2 + u3^5/20 on `tab`.
WPoly sigma_seed(const VarTablePtr& tab);

/// The u-weight-w slice of the series.
WPoly sigma_slice(const SigmaSeries& s, int w);

/// Expands sigma through u-weight `cutoff` using the listed 4-index
/// relations (catalog ids; default all fourteen, in catalog order).
///
/// pre: cutoff >= 5; every id names a catalogued 4-index relation.
/// Throws std::invalid_argument on bad arguments, std::runtime_error when
/// the per-weight system is underdetermined (message names the free
/// coefficients) or inconsistent (transcription damage), and when a
/// re-checked slice fails to vanish.
SigmaSeries expand_sigma(const CurveParams& params, int cutoff);
SigmaSeries expand_sigma(const CurveParams& params, int cutoff,
                         const std::vector<std::string>& relation_ids);

/// True iff every monomial has odd total u-degree, i.e. sigma(-u) = -sigma.
bool check_parity(const SigmaSeries& s);

/// Equivariance under the order-3 curve automorphism, valid on the purely
/// trigonal family only: with [z]u = (z u1, z u2, z^2 u3) for a primitive
/// cube root of unity z, sigma([z]u) = z sigma(u).  Monomial-wise this is
/// the exponent condition a + b + 2c = 1 (mod 3) on u1^a u2^b u3^c (on top
/// of odd degree); purely trigonal mu's are invariant.  Throws
/// std::invalid_argument for non-pure parameters (the general family is not
/// equivariant).
bool check_zeta_equivariance(const SigmaSeries& s);

}  // namespace trigsigma
