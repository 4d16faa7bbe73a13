// Catalog loading, linting and transcription cross-checks.

#include <doctest.h>

#include <set>
#include <string>

#include "trigsigma/catalogs.hpp"
#include "trigsigma/pexpr.hpp"
#include "trigsigma/tables.hpp"

using namespace trigsigma;

TEST_CASE("every catalog loads and lints") {
  CHECK_NOTHROW(lint_all_catalogs());
  CHECK(catalog_names().size() == 12);
}

TEST_CASE("relation sets have the documented shapes") {
  CHECK(four_index_relations().set == "lemma-4index");
  CHECK(four_index_relations().entries.size() == 14);
  CHECK(bilinear_relations().set == "bilinear-3index");
  CHECK(bilinear_relations().entries.size() == 11);
  CHECK(bilinear_relations().controls.size() == 2);
  CHECK(bilinear_relations().extras.size() == 1);
  CHECK(quadratic_relations().entries.size() == 5);
  CHECK(appendix_relations().set == "appendixB");
  CHECK(appendix_relations().entries.size() == 27);
  CHECK(inversion_relations().entries.size() == 4);
}

TEST_CASE("four-index ids cover every 4-index symbol except the basis one") {
  std::set<std::string> ids;
  for (const auto& e : four_index_relations().entries) {
    ids.insert(e.id);
    // Each entry solves for its id symbol: expr = pIJKL - (quadratic rhs).
    const PExpression lead = PExpression::symbol(e.id);
    PExpression rest = e.expr - lead;
    for (const auto& t : rest.terms()) CHECK(t.syms.count(e.id) == 0);
  }
  CHECK(ids.size() == 14);
  CHECK(ids.count("p1333") == 0);  // p1333 stays as a generator
  int n4 = 0;
  for (char a = '1'; a <= '3'; ++a)
    for (char b = a; b <= '3'; ++b)
      for (char c = b; c <= '3'; ++c)
        for (char d = c; d <= '3'; ++d) {
          const std::string sym = std::string("p") + a + b + c + d;
          ++n4;
          CHECK((ids.count(sym) + (sym == "p1333")) == 1);
        }
  CHECK(n4 == 15);
}

TEST_CASE("bilinear weights run -6..-15 with a dual partner at -11") {
  std::multiset<int> weights;
  for (const auto& e : bilinear_relations().entries) weights.insert(e.weight);
  std::multiset<int> expect;
  for (int w = -15; w <= -6; ++w) expect.insert(w);
  expect.insert(-11);
  CHECK(weights == expect);
  for (const auto& c : bilinear_relations().controls) CHECK(c.expect_fail);
  CHECK(bilinear_relations().extras.front().pure_only);
}

TEST_CASE("appendix entries are pure and paired with their declared weights") {
  std::map<int, int> per_weight;
  for (const auto& e : appendix_relations().entries) {
    CHECK(e.pure_only);
    ++per_weight[e.weight];
  }
  const std::map<int, int> expect = {{-6, 1},  {-7, 1},  {-8, 2},  {-9, 2},  {-10, 3},
                                     {-11, 3}, {-12, 4}, {-13, 3}, {-14, 4}, {-15, 4}};
  CHECK(per_weight == expect);
}

TEST_CASE("q2222 oracle reproduces the p2222 entry after expanding Q symbols") {
  PExpression entry;
  for (const auto& e : four_index_relations().entries)
    if (e.id == "p2222") entry = e.expr;
  CHECK(!entry.is_zero());
  CHECK(q2222_oracle().expand_quartics() == entry);
}

TEST_CASE("quartic symbol expansion") {
  CHECK(PExpression::parse("Q1333").expand_quartics() ==
        PExpression::parse("p1333 - 6*p13*p33"));
  CHECK(PExpression::parse("dQ1333_3").expand_quartics() ==
        PExpression::parse("p13333 - 6*p133*p33 - 6*p13*p333"));
  CHECK(PExpression::parse("dQ1333_1").expand_quartics() ==
        PExpression::parse("p11333 - 6*p113*p33 - 6*p13*p133"));
}

TEST_CASE("inversion identities carry the expected pole orders") {
  const auto& rs = inversion_relations();
  std::map<std::string, const RelationEntry*> by_id;
  for (const auto& e : rs.entries) by_id[e.id] = &e;
  REQUIRE(by_id.count("kl1"));
  REQUIRE(by_id.count("kl2"));
  REQUIRE(by_id.count("kl3"));
  REQUIRE(by_id.count("z3"));
  CHECK(by_id["kl1"]->weight == -6);
  CHECK(by_id["kl2"]->weight == -7);
  CHECK(by_id["kl3"]->weight == -8);
  CHECK(by_id["z3"]->weight == -9);
  CHECK(by_id["kl1"]->expr.max_pole_order() == 2);
  CHECK(by_id["kl2"]->expr.max_pole_order() == 3);
  CHECK(by_id["kl3"]->expr.max_pole_order() == 4);
  CHECK(by_id["z3"]->expr.max_pole_order() == 5);
}

TEST_CASE("printed sigma slices") {
  const auto& slices = printed_sigma_slices();
  REQUIRE(slices.size() == 8);
  for (int w = 5; w <= 12; ++w) REQUIRE(slices.count(w) == 1);
  const WPoly& c5 = slices.at(5);
  CHECK(c5.nterms() == 3);
  ExpVec u1_only{};
  u1_only[0] = 1;
  CHECK(c5.coefficient(u1_only) == Rational(1));  // normalization epsilon = 1
  // Weight-6 slice is mu1-linear: it must vanish on the purely trigonal curve.
  const std::size_t imu1 = slices.at(6).table()->index_of("mu1");
  for (const auto& t : slices.at(6).terms()) CHECK(t.e[imu1] > 0);
}

TEST_CASE("two-term table shapes") {
  const auto& cat = two_term_catalog();
  CHECK(cat.theorem_rows.size() == 8);
  CHECK(cat.slots.size() == 16);
  CHECK(cat.printed_solution.size() == 16);
  int nonzero = 0;
  for (const auto& [name, c] : cat.printed_solution)
    if (!c.is_zero()) ++nonzero;
  CHECK(nonzero == 8);
  CHECK(cat.printed_solution.at("d") == PExpression::parse("1/3"));
  CHECK(cat.printed_solution.at("a") == PExpression::parse("-1"));
  CHECK(cat.printed_solution.at("k3") == PExpression::parse("1/3*mu8"));
}

TEST_CASE("three-term solution agrees with the theorem rows slot by slot") {
  const auto& cat = three_term_catalog();
  CHECK(cat.r_rows.size() == 11);
  CHECK(cat.slots.size() == 22);
  for (const auto& s : cat.slots) {
    PExpression expect;
    for (const auto& r : cat.r_rows)
      if (r.x == s.x && r.y == s.y) expect += r.coeff;
    CHECK(cat.printed_solution.at(s.name) == expect);
  }
}

TEST_CASE("shifted rows mirror the three-term rows plus one extra") {
  const auto& rows = shifted_rows();
  CHECK(rows.size() == 12);
  CHECK(rows.front().coeff == PExpression::parse("1/2"));
  CHECK(rows.front().f == "p13");
  CHECK(rows.front().g == "p122");
  // Every (f,g) pair appears, in some orientation, among the three-term rows.
  const auto& tt = three_term_catalog().r_rows;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    bool found = false;
    for (const auto& r : tt)
      if ((r.x == rows[i].f && r.y == rows[i].g) || (r.x == rows[i].g && r.y == rows[i].f))
        found = found || r.coeff == rows[i].coeff;
    CHECK(found);
  }
}

TEST_CASE("double-angle right side has pole order five") {
  // sigma(2u) sigma(u) / sigma(u)^5 clears it: every term clears at power 5.
  CHECK(double_angle_rhs().max_pole_order() == 5);
  int w = 0;
  CHECK(double_angle_rhs().is_homogeneous(&w));
  CHECK(w == -15);
}

TEST_CASE("bi-differential pieces") {
  const auto& cat = bidiff_catalog();
  CHECK(cat.c10_inhomogeneous);
  CHECK(!cat.F0_printed().is_homogeneous());
  int w = 0;
  CHECK(cat.Q.is_homogeneous(&w));
  CHECK(w == -8);
  CHECK(cat.T.is_homogeneous(&w));
  CHECK(w == -12);
  CHECK(cat.h1_base.is_homogeneous(&w));
  CHECK(w == -10);
}

TEST_CASE("discriminant content is the quartic discriminant data") {
  const auto& cat = discriminant_catalog();
  CHECK(cat.inner.nterms() == 16);
  CHECK(cat.displayed_exponent == 6);
  REQUIRE(cat.example_roots.size() == 4);
  CHECK(cat.example_D == Rational(20736));
  // mu3 = mu6 = mu9 = 0 specialization: only the 256 mu12^3 term survives.
  const auto& tab = cat.inner.table();
  ExpVec mu12_cubed{};
  mu12_cubed[tab->index_of("mu12")] = 3;
  CHECK(cat.inner.coefficient(mu12_cubed) == Rational(256));
  for (const auto& t : cat.inner.terms()) {
    bool only_mu12 = true;
    for (std::size_t i = 0; i < tab->size(); ++i)
      if (t.e[i] != 0 && tab->name(i) != "mu12") only_mu12 = false;
    if (only_mu12) CHECK(t.c == Rational(256));
  }
}
