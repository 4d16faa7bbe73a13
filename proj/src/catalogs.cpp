// Loading, parsing and linting of the embedded formula catalogs.

#include "trigsigma/catalogs.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

#include "trigsigma/embedded_catalogs.hpp"
#include "trigsigma/tables.hpp"
#include "trigsigma/wparse.hpp"

namespace trigsigma {

using nlohmann::json;

namespace {

json parse_catalog_json(const std::string& basename) {
  return json::parse(catalog_text(basename));
}

[[noreturn]] void lint_fail(const std::string& where, const std::string& what) {
  throw std::runtime_error("catalog lint: " + where + ": " + what);
}

/// Weight/grade homogeneity and (optionally) pure-parameter hygiene.
void lint_pexpr(const std::string& where, const PExpression& e, int declared_weight,
                bool pure_only) {
  int w = 0;
  if (!e.is_homogeneous(&w)) lint_fail(where, "expression is not weight-homogeneous");
  if (!e.is_zero() && w != declared_weight)
    lint_fail(where, "weight " + std::to_string(w) + " != declared " +
                         std::to_string(declared_weight));
  if (!e.is_zeta_homogeneous())
    lint_fail(where, "expression is not automorphism-grade homogeneous");
  if (pure_only) {
    static const std::set<std::string> banned = {"mu1", "mu2", "mu4", "mu5", "mu8"};
    for (const auto& t : e.terms())
      for (const auto& [sym, exp] : t.syms)
        if (banned.count(sym))
          lint_fail(where, "pure-only entry mentions general parameter " + sym);
  }
}

/// A mu-polynomial coefficient: only mu symbols, homogeneous of `weight`
/// (zero is allowed).
void lint_mu_coeff(const std::string& where, const PExpression& e, int weight,
                   bool pure_only) {
  for (const auto& t : e.terms())
    for (const auto& [sym, exp] : t.syms)
      if (sym.rfind("mu", 0) != 0)
        lint_fail(where, "coefficient mentions non-parameter symbol " + sym);
  lint_pexpr(where, e, weight, pure_only);
}

/// Weight of a row/slot symbol name; "1" denotes the constant function.
int slot_weight(const std::string& name) {
  if (name == "1") return 0;
  return symbol_weight(name);
}

PExpression entry_expression(const json& j) {
  if (j.contains("expression")) return PExpression::parse(j.at("expression").get<std::string>());
  return PExpression::parse(j.at("lhs").get<std::string>()) -
         PExpression::parse(j.at("rhs").get<std::string>());
}

RelationEntry load_entry(const json& j, const std::string& where) {
  RelationEntry e;
  e.id = j.at("id").get<std::string>();
  e.weight = j.at("weight").get<int>();
  e.pure_only = j.value("pure_only", false);
  e.expect_fail = j.value("expect", std::string()) == "fail";
  e.note = j.value("note", std::string());
  e.expr = entry_expression(j);
  lint_pexpr(where + "/" + e.id, e.expr, e.weight, e.pure_only);
  return e;
}

RelationSet load_relation_set(const std::string& basename, std::size_t expect_entries) {
  const json j = parse_catalog_json(basename);
  RelationSet rs;
  rs.set = j.value("set", basename);
  for (const auto& e : j.at("entries")) rs.entries.push_back(load_entry(e, rs.set));
  if (j.contains("controls"))
    for (const auto& e : j.at("controls")) rs.controls.push_back(load_entry(e, rs.set));
  if (j.contains("extras"))
    for (const auto& e : j.at("extras")) rs.extras.push_back(load_entry(e, rs.set));
  if (rs.entries.size() != expect_entries)
    lint_fail(rs.set, "expected " + std::to_string(expect_entries) + " entries, found " +
                          std::to_string(rs.entries.size()));
  std::set<std::string> ids;
  for (const auto& e : rs.entries)
    if (!ids.insert(e.id).second) lint_fail(rs.set, "duplicate id " + e.id);
  for (const auto& c : rs.controls)
    if (!c.expect_fail) lint_fail(rs.set, "control " + c.id + " is not marked expect=fail");
  return rs;
}

ProductRow load_product_row(const json& j, const std::string& where, int row_weight,
                            bool pure_only) {
  ProductRow r;
  r.coeff = PExpression::parse(j.at("c").get<std::string>());
  r.x = j.at("x").get<std::string>();
  r.y = j.at("y").get<std::string>();
  lint_mu_coeff(where, r.coeff, row_weight - slot_weight(r.x) - slot_weight(r.y), pure_only);
  return r;
}

std::vector<AnsatzSlot> load_slots(const json& j, const std::string& where, int row_weight) {
  std::vector<AnsatzSlot> slots;
  std::set<std::string> names;
  for (const auto& s : j) {
    AnsatzSlot a{s.at("name").get<std::string>(), s.at("x").get<std::string>(),
                 s.at("y").get<std::string>()};
    if (!names.insert(a.name).second) lint_fail(where, "duplicate slot " + a.name);
    if (slot_weight(a.x) + slot_weight(a.y) < row_weight)
      lint_fail(where, "slot " + a.name + " is lighter than the bracket itself");
    slots.push_back(std::move(a));
  }
  return slots;
}

std::map<std::string, PExpression> load_solution(const json& j, const std::string& where,
                                                 const std::vector<AnsatzSlot>& slots,
                                                 int row_weight, bool pure_only) {
  std::map<std::string, PExpression> sol;
  for (const auto& s : slots) {
    const std::string text = j.at(s.name).get<std::string>();
    PExpression c = PExpression::parse(text);
    lint_mu_coeff(where + "/" + s.name, c,
                  row_weight - slot_weight(s.x) - slot_weight(s.y), pure_only);
    sol.emplace(s.name, std::move(c));
  }
  if (j.size() != slots.size()) lint_fail(where, "solution names do not match the slots");
  return sol;
}

WPoly parse_poly(const std::string& text, const VarTablePtr& tab) {
  return parse_wpoly(text, tab);
}

/// Weight/grade homogeneity for a series polynomial.
void lint_wpoly(const std::string& where, const WPoly& p, int declared_weight) {
  int w = 0;
  if (!p.is_homogeneous(&w)) lint_fail(where, "polynomial is not weight-homogeneous");
  if (p.nterms() && w != declared_weight)
    lint_fail(where, "weight " + std::to_string(w) + " != declared " +
                         std::to_string(declared_weight));
  int grade = -1;
  for (const auto& t : p.terms()) {
    int g = 0;
    for (std::size_t i = 0; i < p.table()->size(); ++i)
      g += int(t.e[i]) * var_zeta_grade(p.table()->name(i));
    g = ((g % 3) + 3) % 3;
    if (grade < 0) grade = g;
    if (g != grade) lint_fail(where, "polynomial is not automorphism-grade homogeneous");
  }
}

}  // namespace

const std::string& catalog_text(const std::string& basename) {
  static const std::map<std::string, std::string> files = [] {
    std::map<std::string, std::string> m;
    for (const auto& [name, text] : embedded::kCatalogFiles)
      m.emplace(std::string(name), std::string(text));
    return m;
  }();
  auto it = files.find(basename);
  if (it == files.end())
    throw std::invalid_argument("unknown catalog file '" + basename + "'");
  return it->second;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : embedded::kCatalogFiles) names.emplace_back(name);
  return names;
}

const RelationSet& four_index_relations() {
  static const RelationSet rs = [] {
    RelationSet r = load_relation_set("relations_four_index.json", 14);
    for (const auto& e : r.entries) {
      // The id doubles as the left-hand symbol: every entry is "pIJKL = ...".
      if (e.id.size() != 5 || e.id[0] != 'p')
        lint_fail(r.set, "entry id " + e.id + " is not a 4-index p symbol");
    }
    return r;
  }();
  return rs;
}

const RelationSet& bilinear_relations() {
  static const RelationSet rs = [] {
    RelationSet r = load_relation_set("relations_bilinear.json", 11);
    if (r.controls.size() != 2 || r.extras.size() != 1)
      lint_fail(r.set, "expected 2 controls and 1 extra");
    return r;
  }();
  return rs;
}

const RelationSet& quadratic_relations() {
  static const RelationSet rs = load_relation_set("relations_quadratic.json", 5);
  return rs;
}

const RelationSet& appendix_relations() {
  static const RelationSet rs = [] {
    RelationSet r = load_relation_set("relations_appendix.json", 27);
    for (const auto& e : r.entries)
      if (!e.pure_only) lint_fail(r.set, "entry " + e.id + " must be pure-only");
    return r;
  }();
  return rs;
}

const RelationSet& inversion_relations() {
  static const RelationSet rs = load_relation_set("inversion.json", 4);
  return rs;
}

const PExpression& q2222_oracle() {
  static const PExpression e = [] {
    PExpression q =
        PExpression::symbol("Q2222") -
        PExpression::parse(parse_catalog_json("relations_four_index.json")
                               .at("q2222_oracle")
                               .get<std::string>());
    lint_pexpr("q2222_oracle", q, -8, false);
    return q;
  }();
  return e;
}

const std::map<int, WPoly>& printed_sigma_slices() {
  static const std::map<int, WPoly> slices = [] {
    const json j = parse_catalog_json("sigma_series.json");
    const VarTablePtr tab = u_table(/*symbolic=*/true);
    std::map<int, WPoly> m;
    for (const auto& [key, text] : j.at("coefficients").items()) {
      if (key.size() < 2 || key[0] != 'C')
        lint_fail("sigma_series", "bad coefficient key " + key);
      const int w = std::stoi(key.substr(1));
      WPoly p = parse_poly(text.get<std::string>(), tab);
      lint_wpoly("sigma_series/" + key, p, 5);  // total weight, mu included
      for (const auto& t : p.terms()) {
        int g = 0;
        for (std::size_t i = 0; i < tab->size(); ++i)
          g += int(t.e[i]) * var_zeta_grade(tab->name(i));
        if (((g % 3) + 3) % 3 != 1)
          lint_fail("sigma_series/" + key,
                    "sigma terms must have automorphism grade 1");
        if (t.wpos != w)
          lint_fail("sigma_series/" + key, "slice term of positive weight " +
                                               std::to_string(t.wpos));
        int udeg = 0;
        for (int i = 0; i < 3; ++i) udeg += t.e[i];
        if (udeg % 2 == 0)
          lint_fail("sigma_series/" + key, "sigma slices must be odd in u");
      }
      m.emplace(w, std::move(p));
    }
    if (m.size() != 8 || m.begin()->first != 5 || m.rbegin()->first != 12)
      lint_fail("sigma_series", "expected slices C5..C12");
    return m;
  }();
  return slices;
}

const TwoTermCatalog& two_term_catalog() {
  static const TwoTermCatalog cat = [] {
    const json j = parse_catalog_json("addition_two_term.json");
    TwoTermCatalog c;
    for (const auto& r : j.at("theorem_rows"))
      c.theorem_rows.push_back(load_product_row(r, "two_term/theorem", -10, false));
    c.slots = load_slots(j.at("ansatz_slots"), "two_term", -10);
    c.printed_solution =
        load_solution(j.at("printed_solution"), "two_term/solution", c.slots, -10, false);
    if (c.theorem_rows.size() != 8 || c.slots.size() != 16)
      lint_fail("two_term", "expected 8 theorem rows and 16 slots");
    return c;
  }();
  return cat;
}

const ThreeTermCatalog& three_term_catalog() {
  static const ThreeTermCatalog cat = [] {
    const json j = parse_catalog_json("addition_three_term.json");
    ThreeTermCatalog c;
    for (const auto& r : j.at("r_rows"))
      c.r_rows.push_back(load_product_row(r, "three_term/r", -15, true));
    c.slots = load_slots(j.at("ansatz_slots"), "three_term", -15);
    c.printed_solution =
        load_solution(j.at("printed_solution"), "three_term/solution", c.slots, -15, true);
    if (c.r_rows.size() != 11 || c.slots.size() != 22)
      lint_fail("three_term", "expected 11 rows and 22 slots");
    return c;
  }();
  return cat;
}

const PExpression& double_angle_rhs() {
  static const PExpression e = [] {
    PExpression r = PExpression::parse(
        parse_catalog_json("addition_double_angle.json").at("rhs").get<std::string>());
    lint_pexpr("double_angle", r, -15, false);
    return r;
  }();
  return e;
}

const std::vector<WronskianRow>& shifted_rows() {
  static const std::vector<WronskianRow> rows = [] {
    const json j = parse_catalog_json("addition_shifted.json");
    std::vector<WronskianRow> out;
    for (const auto& r : j.at("rows")) {
      WronskianRow w;
      w.coeff = PExpression::parse(r.at("c").get<std::string>());
      w.f = r.at("f").get<std::string>();
      w.g = r.at("g").get<std::string>();
      // d/du1 lowers the weight by 5, so a row weighs c + f + g - 5.
      lint_mu_coeff("shifted", w.coeff, -20 - slot_weight(w.f) - slot_weight(w.g) + 5,
                    true);
      out.push_back(std::move(w));
    }
    if (out.size() != 12) lint_fail("shifted", "expected 12 rows");
    return out;
  }();
  return rows;
}

WPoly BidiffCatalog::F0_printed() const {
  const auto v = [&](const char* n) { return WPoly::variable(tab, tab->index_of(n)); };
  const WPoly x = v("x"), z = v("z");
  const WPoly xz = x * z;
  const WPoly x2z2 = xz * xz;
  return F0_coeff.at("c32") * (x + z) * x2z2 + F0_coeff.at("c22") * x2z2 +
         F0_coeff.at("c21") * (x + z) * xz + F0_coeff.at("c11") * xz +
         F0_coeff.at("c10") * (x + z) + F0_coeff.at("c00");
}

const BidiffCatalog& bidiff_catalog() {
  static const BidiffCatalog cat = [] {
    const json j = parse_catalog_json("bidiff.json");
    BidiffCatalog c;
    c.tab = xzyw_table(/*symbolic=*/true);
    const auto get = [&](const char* key) {
      return parse_poly(j.at(key).get<std::string>(), c.tab);
    };
    c.h3 = get("h3");
    c.h2 = get("h2");
    c.h1_base = get("h1_base");
    c.h1_fx_multiplier = get("h1_fx_multiplier");
    c.h1_fy_multiplier = get("h1_fy_multiplier");
    c.Q = get("Q");
    c.T = get("T");
    lint_wpoly("bidiff/h3", c.h3, -6);
    lint_wpoly("bidiff/h2", c.h2, -7);
    lint_wpoly("bidiff/h1_base", c.h1_base, -10);
    lint_wpoly("bidiff/h1_fx_multiplier", c.h1_fx_multiplier, -1);
    lint_wpoly("bidiff/h1_fy_multiplier", c.h1_fy_multiplier, -2);
    lint_wpoly("bidiff/Q", c.Q, -8);
    lint_wpoly("bidiff/T", c.T, -12);
    // F = (wy + Q)(wy + Q') + ... has weight -16; each F0 coefficient fills
    // its monomial shape up to that weight.
    const std::map<std::string, int> f0_weights = {{"c32", -1}, {"c22", -4}, {"c21", -7},
                                                   {"c11", -10}, {"c10", -13}, {"c00", -16}};
    std::set<std::string> anomalous;
    for (const auto& a : j.value("anomalies", json::array()))
      if (a.value("expect_inhomogeneous", false))
        anomalous.insert(a.at("where").get<std::string>());
    for (const auto& [key, w] : f0_weights) {
      WPoly p = parse_poly(j.at("F0").at(key).get<std::string>(), c.tab);
      if (anomalous.count("F0." + key)) {
        if (p.is_homogeneous())
          lint_fail("bidiff/F0/" + key, "flagged anomalous but is homogeneous");
        c.c10_inhomogeneous = true;
      } else {
        lint_wpoly("bidiff/F0/" + key, p, w);
      }
      c.F0_coeff.emplace(key, std::move(p));
    }
    return c;
  }();
  return cat;
}

const DiscriminantCatalog& discriminant_catalog() {
  static const DiscriminantCatalog cat = [] {
    const json j = parse_catalog_json("discriminant.json");
    DiscriminantCatalog c;
    const VarTablePtr tab = make_table(mu_vars(/*purely_trigonal=*/true));
    c.inner = parse_poly(j.at("inner").get<std::string>(), tab);
    lint_wpoly("discriminant/inner", c.inner, -36);
    if (c.inner.nterms() != 16)
      lint_fail("discriminant/inner", "expected the 16-term quartic discriminant");
    c.displayed_exponent = j.at("displayed_exponent").get<int>();
    for (const auto& r : j.at("root_example").at("roots"))
      c.example_roots.push_back(Rational::parse(r.get<std::string>()));
    c.example_D = Rational::parse(j.at("root_example").at("expected_D").get<std::string>());
    if (c.example_roots.size() != 4)
      lint_fail("discriminant/root_example", "expected 4 roots");
    return c;
  }();
  return cat;
}

void lint_all_catalogs() {
  four_index_relations();
  bilinear_relations();
  quadratic_relations();
  appendix_relations();
  inversion_relations();
  q2222_oracle();
  printed_sigma_slices();
  two_term_catalog();
  three_term_catalog();
  double_angle_rhs();
  shifted_rows();
  bidiff_catalog();
  discriminant_catalog();
}

}  // namespace trigsigma
