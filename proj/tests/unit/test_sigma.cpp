// Sigma-series construction: seed slice, catalog reproduction, parity and
// equivariance checks, subset-independence, and failure modes of the
// per-weight solver.

#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigsigma/catalogs.hpp"
#include "trigsigma/curve.hpp"
#include "trigsigma/pexpr.hpp"
#include "trigsigma/sigma.hpp"
#include "trigsigma/wpoly.hpp"

using namespace trigsigma;

namespace {

const std::vector<std::string>& all_ids() {
  static const std::vector<std::string> ids = {"p3333", "p2333", "p2233", "p2223", "p2222",
                                               "p1233", "p1223", "p1222", "p1133", "p1123",
                                               "p1122", "p1113", "p1112", "p1111"};
  return ids;
}

}  // namespace

TEST_CASE("sigma expansion reproduces the printed slices C5..C12") {
  const SigmaSeries s = expand_sigma(CurveParams::symbolic_general(), 12);
  const auto& printed = printed_sigma_slices();
  for (int j = 5; j <= 12; ++j) {
    CAPTURE(j);
    CHECK(sigma_slice(s, j) == lift_by_name(printed.at(j), s.tab));
  }
  CHECK(s.series == s.series.truncated(12));
  CHECK(sigma_slice(s, 5) == sigma_seed(s.tab));
}

TEST_CASE("sigma series bookkeeping: total weight, parity, linear part") {
  const SigmaSeries s = expand_sigma(CurveParams::symbolic_general(), 12);
  int w = 0;
  const bool hom = s.series.is_homogeneous(&w);
  CHECK(hom);
  CHECK(w == 5);
  CHECK(check_parity(s));

  // The only degree-1 monomial is u1 with coefficient 1 (so, as series
  // coefficients of sigma, sigma_1(0) = 1 and sigma_2(0) = sigma_3(0) = 0).
  const std::size_t i1 = s.tab->index_of("u1"), i2 = s.tab->index_of("u2"),
                    i3 = s.tab->index_of("u3");
  for (const auto& t : s.series.terms()) {
    if (t.e[i1] + t.e[i2] + t.e[i3] != 1) continue;
    CHECK(t.e[i1] == 1);
    CHECK(t.c == Rational(1));
  }

  // Injecting an even monomial breaks parity.
  SigmaSeries bad = s;
  bad.series += WPoly::variable(s.tab, i3, 2);
  CHECK_FALSE(check_parity(bad));
}

TEST_CASE("sigma with every parameter zero is the bare seed") {
  const SigmaSeries s = expand_sigma(CurveParams::specialized({}), 16);
  CHECK(s.series == sigma_seed(s.tab));
}

TEST_CASE("purely trigonal sigma matches the specialized catalog and is equivariant") {
  const CurveParams pure = CurveParams::symbolic_pure();
  const SigmaSeries s = expand_sigma(pure, 12);
  const auto& printed = printed_sigma_slices();
  for (int j = 5; j <= 12; ++j) {
    CAPTURE(j);
    CHECK(sigma_slice(s, j) == apply_params(printed.at(j), pure, s.tab));
  }
  CHECK(check_parity(s));
  CHECK(check_zeta_equivariance(s));

  // The seed alone is equivariant; the general family refuses the check.
  SigmaSeries seed_only;
  seed_only.params = pure;
  seed_only.tab = s.tab;
  seed_only.cutoff = 5;
  seed_only.series = sigma_seed(s.tab);
  CHECK(check_zeta_equivariance(seed_only));

  const SigmaSeries gen = expand_sigma(CurveParams::symbolic_general(), 6);
  CHECK_THROWS_AS(check_zeta_equivariance(gen), std::invalid_argument);
}

TEST_CASE("specializing the symbolic series equals expanding a specialized curve") {
  const std::map<int, Rational> mu = {{1, Rational(1, 2)}, {2, Rational(-1)}, {3, Rational(2)},
                                      {4, Rational(1)},    {5, Rational(-1, 3)},
                                      {6, Rational(1)},    {8, Rational(3)},
                                      {9, Rational(-2)},   {12, Rational(1)}};
  const CurveParams spec = CurveParams::specialized(mu);
  const SigmaSeries sym = expand_sigma(CurveParams::symbolic_general(), 12);
  const SigmaSeries dir = expand_sigma(spec, 12);
  CHECK(apply_params(sym.series, spec, dir.tab) == dir.series);
}

TEST_CASE("sigma solver is independent of relation order and admissible subsets") {
  const CurveParams gp = CurveParams::symbolic_general();
  const SigmaSeries base = expand_sigma(gp, 10);

  std::vector<std::string> rev = all_ids();
  std::reverse(rev.begin(), rev.end());
  CHECK(expand_sigma(gp, 10, rev).series == base.series);

  const std::vector<std::string> sub(all_ids().begin(), all_ids().begin() + 6);
  CHECK(expand_sigma(gp, 10, sub).series == base.series);
}

TEST_CASE("sigma solver reports underdetermined systems with the free coefficients") {
  const CurveParams gp = CurveParams::symbolic_general();
  try {
    expand_sigma(gp, 12, {"p3333"});
    FAIL("expected std::runtime_error");
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("underdetermined") != std::string::npos);
    CHECK(msg.find("u1") != std::string::npos);
  }
}

TEST_CASE("sigma expansion validates its arguments") {
  CHECK_THROWS_AS(expand_sigma(CurveParams::symbolic_general(), 4), std::invalid_argument);
  CHECK_THROWS_AS(expand_sigma(CurveParams::symbolic_general(), 12, {"p9999"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(expand_sigma(CurveParams::symbolic_general(), 12, {}),
                  std::invalid_argument);
}

TEST_CASE("folding and expanding quartic symbols are mutually inverse on the catalog") {
  for (const RelationEntry& e : four_index_relations().entries) {
    CAPTURE(e.id);
    const PExpression folded = e.expr.fold_quartics();
    CHECK(folded.expand_quartics() == e.expr);
    // After folding, nothing quadratic in 2-index symbols may remain.
    for (const PTerm& t : folded.terms()) {
      int structural = 0;
      for (const auto& [sym, exp] : t.syms)
        if (sym.compare(0, 2, "mu") != 0) structural += exp;
      CHECK(structural <= 1);
    }
  }
}
