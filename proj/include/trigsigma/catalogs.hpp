// Typed access to the embedded formula catalogs.
//
// Every formula the library verifies or consumes (relation sets, printed
// sigma slices, inversion identities, addition-theorem tables, the
// bi-differential building blocks, the discriminant content) ships as JSON
// baked into the binary at build time.  This module parses that data into
// typed records and lints it before anything downstream trusts it: each
// expression must be weight-homogeneous of its declared weight, homogeneous
// for the mod-3 grade induced by the order-3 curve automorphism, and
// pure-only entries must not mention the parameters that vanish on the
// purely trigonal curve.  Catalogs are data, not code: the loader performs
// no algebraic simplification beyond normalization.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "trigsigma/pexpr.hpp"
#include "trigsigma/rational.hpp"
#include "trigsigma/vartable.hpp"
#include "trigsigma/wpoly.hpp"

namespace trigsigma {

using WPoly = WeightedPoly<Rational>;

/// One relation: an expression in p/Q/dQ/m/mu (and, for the inversion set,
/// x/y) symbols that must vanish identically on the Jacobian.
struct RelationEntry {
  std::string id;
  int weight = 0;            ///< declared weight of every term
  bool pure_only = false;    ///< only valid on the purely trigonal curve
  bool expect_fail = false;  ///< negative control: must NOT vanish
  std::string note;
  PExpression expr;          ///< lhs - rhs, normalized
};

/// A named group of relations ("lemma-4index", "bilinear-3index", ...).
struct RelationSet {
  std::string set;
  std::vector<RelationEntry> entries;   ///< expected to hold identically
  std::vector<RelationEntry> controls;  ///< expected to fail in general position
  std::vector<RelationEntry> extras;    ///< auxiliary identities
};

/// The 14 expressions of 4-index p's in quadratics of 2-index p's.
const RelationSet& four_index_relations();
/// The bilinear 3-index relations (weights -6..-15 plus the -11 dual),
/// two sign-variant controls, and the pure dQ1333/du3 extra.
const RelationSet& bilinear_relations();
/// The five quadratic expressions of products of 3-index p's.
const RelationSet& quadratic_relations();
/// The 27 purely trigonal quadratic 3-index relations.
const RelationSet& appendix_relations();
/// kl1/kl2/kl3 (point identities) and z3 (their x-resultant), over p/mu/x/y.
const RelationSet& inversion_relations();

/// Q-completed right side of the p2222 entry: p2222 - 6 p22^2 - 24 p13 p33
/// + 4 p1333 folded into Q2222 = -4 Q1333 + (mu terms).  Serves as a
/// transcription cross-check: expanding Q symbols must reproduce the
/// four-index p2222 entry exactly.
const PExpression& q2222_oracle();

/// Printed leading sigma slices keyed by positive u-weight (5..12); series
/// over [u1,u2,u3] + general mu table.  Every term has total weight 5.
const std::map<int, WPoly>& printed_sigma_slices();

// --- addition-theorem tables -----------------------------------------------

/// c * X * Y with c a mu-polynomial and X, Y symbol names ("1" = constant).
struct ProductRow {
  PExpression coeff;
  std::string x, y;
};

/// A named ansatz slot [X, Y]; its unknown coefficient is a mu-polynomial
/// whose weight is forced by the slot pair.
struct AnsatzSlot {
  std::string name;
  std::string x, y;
};

/// Two-variable square bracket: rows/slots contribute
/// coeff * (X(u) Y(v) - X(v) Y(u)), and the bracket equals
/// -sigma(u+v) sigma(u-v) / (sigma(u)^2 sigma(v)^2).  Weight -10.
struct TwoTermCatalog {
  std::vector<ProductRow> theorem_rows;
  std::vector<AnsatzSlot> slots;
  std::map<std::string, PExpression> printed_solution;  ///< slot -> mu-poly
};
const TwoTermCatalog& two_term_catalog();

/// Cubic bracket for the purely trigonal curve: with R(u,v) the sum of the
/// rows as coeff * X(u) * Y(v),
/// sigma(u+v) sigma(u+[zeta]v) sigma(u+[zeta^2]v) / (sigma(u)^3 sigma(v)^3)
/// = R(u,v) + R(v,u).  Weight -15.
struct ThreeTermCatalog {
  std::vector<ProductRow> r_rows;
  std::vector<AnsatzSlot> slots;
  std::map<std::string, PExpression> printed_solution;
};
const ThreeTermCatalog& three_term_catalog();

/// Right side of sigma(2u) / sigma(u)^4 (single argument u).  Weight -15.
const PExpression& double_angle_rhs();

/// Rows of the shifted product formula for the purely trigonal curve:
/// -sigma(u-[zeta]u) sigma(u-[zeta^2]u) / sigma(u)^6
/// = sum coeff * (g d1(f) - f d1(g)).  Weight -20.
struct WronskianRow {
  PExpression coeff;
  std::string f, g;
};
const std::vector<WronskianRow>& shifted_rows();

// --- curve-side data ---------------------------------------------------------

/// Building blocks of the symmetric bi-differential numerator F((x,y),(z,w)).
/// All polynomials live on the x,z,y,w + general-mu table.
struct BidiffCatalog {
  VarTablePtr tab;
  WPoly h3, h2;               ///< eta-numerators (eta_j = h_j dx / f_y)
  WPoly h1_base;              ///< h1 = h1_base + c_fx f_x + c_fy f_y
  WPoly h1_fx_multiplier, h1_fy_multiplier;  ///< mu-polynomials c_fx, c_fy
  WPoly Q, T;                 ///< polar-part pieces, variables x,z
  std::map<std::string, WPoly> F0_coeff;  ///< "c32".."c00", mu-polynomials
  bool c10_inhomogeneous = false;  ///< the printed c10 is knowingly off-weight

  /// F0 assembled per the catalog shape (uses the printed c10 verbatim, so
  /// the result is NOT weight-homogeneous when c10_inhomogeneous is set).
  WPoly F0_printed() const;
};
const BidiffCatalog& bidiff_catalog();

/// Purely trigonal discriminant content: `inner` is the discriminant of the
/// quartic x^4 + mu3 x^3 + mu6 x^2 + mu9 x + mu12 (weight -36), and the
/// printed common content of the two curve resultants is
/// inner^displayed_exponent.
struct DiscriminantCatalog {
  WPoly inner;  ///< over the pure mu table
  int displayed_exponent = 0;
  std::vector<Rational> example_roots;  ///< quartic roots of a worked example
  Rational example_D;                   ///< prod_{i<j} (a_i - a_j)^4 for them
};
const DiscriminantCatalog& discriminant_catalog();

// --- raw access & linting ----------------------------------------------------

/// Raw embedded JSON text by basename; throws for unknown names.
const std::string& catalog_text(const std::string& basename);

/// Basenames of all embedded catalog files (sorted).
std::vector<std::string> catalog_names();

/// Forces every catalog through its loader (each loader lints on first use).
/// Throws std::runtime_error describing the first violation, if any.
void lint_all_catalogs();

}  // namespace trigsigma
