// JSON serialization of weighted polynomials and truncated series.
//
// Format (stable, round-trip exact):
//   {
//     "variables": [{"name":"u1","weight":5}, ...],   // min_exponent if != 0
//     "cutoff": 12,                                   // series only
//     "terms": [{"exp":[1,0,0], "coeff":"-1/3"}, ...] // canonical order
//   }
// Rational coefficients serialize as "p/q" in lowest terms ("p" when q==1);
// coefficients over Q(zeta) as {"a":"p/q","b":"p/q"} meaning a + b*zeta.
// The term order in "terms" is the canonical in-memory order, so equal
// objects serialize byte-identically.

#pragma once

#include <json.hpp>

#include "trigsigma/eisenstein.hpp"
#include "trigsigma/wpoly.hpp"

namespace trigsigma {

using Json = nlohmann::ordered_json;

inline Json coeff_to_json(const Rational& c) { return Json(c.str()); }
inline Json coeff_to_json(const Eisenstein& c) {
  return Json{{"a", c.re().str()}, {"b", c.zc().str()}};
}

inline void coeff_from_json(const Json& j, Rational* out) {
  *out = Rational::parse(j.get<std::string>());
}
inline void coeff_from_json(const Json& j, Eisenstein* out) {
  *out = Eisenstein(Rational::parse(j.at("a").get<std::string>()),
                    Rational::parse(j.at("b").get<std::string>()));
}

inline Json table_to_json(const VarTable& tab) {
  Json vars = Json::array();
  for (std::size_t i = 0; i < tab.size(); ++i) {
    Json v{{"name", tab.name(i)}, {"weight", tab.weight(i)}};
    if (tab.var(i).min_exponent != 0) v["min_exponent"] = tab.var(i).min_exponent;
    vars.push_back(std::move(v));
  }
  return vars;
}

inline VarTablePtr table_from_json(const Json& j) {
  std::vector<VarTable::Var> vars;
  for (const auto& v : j) {
    VarTable::Var out;
    out.name = v.at("name").get<std::string>();
    out.weight = v.at("weight").get<int>();
    out.min_exponent = v.value("min_exponent", 0);
    vars.push_back(std::move(out));
  }
  return make_table(std::move(vars));
}

template <class C>
Json poly_to_json(const WeightedPoly<C>& p) {
  Json j;
  j["variables"] = table_to_json(*p.table());
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json exps = Json::array();
    for (std::size_t i = 0; i < p.table()->size(); ++i) exps.push_back(int(t.e[i]));
    terms.push_back(Json{{"exp", std::move(exps)}, {"coeff", coeff_to_json(t.c)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

template <class C>
Json series_to_json(const TruncatedSeries<C>& s) {
  Json j;
  j["variables"] = table_to_json(*s.table());
  j["cutoff"] = s.cutoff();
  Json terms = Json::array();
  for (const auto& t : s.poly().terms()) {
    Json exps = Json::array();
    for (std::size_t i = 0; i < s.table()->size(); ++i) exps.push_back(int(t.e[i]));
    terms.push_back(Json{{"exp", std::move(exps)}, {"coeff", coeff_to_json(t.c)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

template <class C>
WeightedPoly<C> poly_from_json(const Json& j) {
  VarTablePtr tab = table_from_json(j.at("variables"));
  WeightedPoly<C> p(tab);
  for (const auto& t : j.at("terms")) {
    const auto& exps = t.at("exp");
    if (exps.size() != tab->size())
      throw std::invalid_argument("poly_from_json: exponent arity mismatch");
    ExpVec e = zero_exp();
    for (std::size_t i = 0; i < tab->size(); ++i)
      e[i] = static_cast<std::int16_t>(exps[i].get<int>());
    tab->check_exponents(e);
    C c;
    coeff_from_json(t.at("coeff"), &c);
    p.push_term(e, std::move(c));
  }
  p.normalize();
  return p;
}

template <class C>
TruncatedSeries<C> series_from_json(const Json& j) {
  return TruncatedSeries<C>(poly_from_json<C>(j), j.at("cutoff").get<int>());
}

}  // namespace trigsigma
