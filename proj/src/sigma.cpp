// Weight-by-weight construction of the sigma-series.
//
// Solver layout.  Write sigma = C5 + C6 + ... with unknown slices C_w.  For
// each catalogued 4-index relation, fold_quartics turns it into an
// expression linear in {Q_{ijkl}, p_ab, 1} over Q[mu]; its sigma^2 multiple
// is then a bilinear form B(sigma, sigma) in partial derivatives of sigma:
//
//   Q_{ijkl} sigma^2 = -(1/2) sum_{S subset {i,j,k,l}} (-1)^{|S^c|}
//                      d_S sigma d_{S^c} sigma,
//   p_ab sigma^2     = (d_a sigma d_b sigma + d_b sigma d_a sigma
//                      - sigma d_ab sigma - d_ab sigma sigma) / 2,
//   1 sigma^2        = sigma sigma.
//
// Each bilinear term drops u-weight by the weight of its derivative
// multiset; the largest drop d_max in a relation is attained exactly by its
// mu-free Q terms.  Pairing the unknown C_w with the seed C5 therefore
// lands in the single slice W = w + 5 - d_max, while pairs of lower slices
// land there too (known data) and pairs involving weights > w or two
// unknowns land strictly above it.  Truncating B at that slice gives
// equations linear in C_w whose matrix is mu-free, so the system splits
// into one solve per mu-monomial of weight w - 5 with a shared matrix.
// Slices below W were imposed at earlier weights and are re-asserted here;
// a final pass re-checks every relation through its deepest imposed slice.

#include "trigsigma/sigma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "trigsigma/catalogs.hpp"
#include "trigsigma/linsolve.hpp"
#include "trigsigma/pexpr.hpp"

namespace trigsigma {

namespace {

/// Weight of derivative index digit ('1' -> 5, '2' -> 2, '3' -> 1).
int index_weight(char d) {
  switch (d) {
    case '1':
      return 5;
    case '2':
      return 2;
    case '3':
      return 1;
    default:
      throw std::invalid_argument("sigma: bad derivative index");
  }
}

/// A 4-index relation in bilinearizable form.
struct BilinearRelation {
  std::string id;
  PExpression qform;  ///< linear in {QIJKL, pAB, 1} over Q[mu]
  int dmax = 0;       ///< largest u-weight drop among its bilinear terms
};

/// Derivative-weight drop of one term's structural symbols.
int term_drop(const PTerm& t) {
  int d = 0;
  for (const auto& [s, e] : t.syms) {
    if (s.compare(0, 2, "mu") == 0) continue;
    for (char c : s.substr(1)) d += index_weight(c) * e;
  }
  return d;
}

/// Folds the catalogued entries and validates the bilinear shape: every
/// term carries at most one structural symbol (QIJKL or 2-index pAB) to the
/// first power besides mu factors.
std::vector<BilinearRelation> bilinear_four_index(const std::vector<std::string>& ids) {
  const RelationSet& cat = four_index_relations();
  std::vector<BilinearRelation> out;
  out.reserve(ids.size());
  for (const std::string& id : ids) {
    const auto it = std::find_if(cat.entries.begin(), cat.entries.end(),
                                 [&](const RelationEntry& e) { return e.id == id; });
    if (it == cat.entries.end())
      throw std::invalid_argument("expand_sigma: unknown 4-index relation id '" + id + "'");
    BilinearRelation r;
    r.id = id;
    r.qform = it->expr.fold_quartics();
    for (const PTerm& t : r.qform.terms()) {
      int structural = 0;
      for (const auto& [s, e] : t.syms) {
        if (s.compare(0, 2, "mu") == 0) continue;
        const bool q4 = s.size() == 5 && s[0] == 'Q';
        const bool p2 = s.size() == 3 && s[0] == 'p';
        if (!(q4 || p2) || e != 1)
          throw std::runtime_error("expand_sigma: relation '" + id +
                                   "' is not bilinearizable (residual symbol " + s + ")");
        structural += 1;
      }
      if (structural > 1)
        throw std::runtime_error("expand_sigma: relation '" + id +
                                 "' keeps a quadratic term after folding");
      r.dmax = std::max(r.dmax, term_drop(t));
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Partial derivatives of `s` for every multiset of {1,2,3} of size <= 4,
/// keyed by the nondecreasing digit string ("" for s itself).
using JetMap = std::map<std::string, WPoly>;

JetMap make_jets(const WPoly& s, const VarTablePtr& tab) {
  const std::array<std::size_t, 3> ui = {tab->index_of("u1"), tab->index_of("u2"),
                                         tab->index_of("u3")};
  JetMap jets;
  jets[""] = s;
  std::vector<std::string> frontier = {""};
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::string> next;
    for (const std::string& key : frontier) {
      const char lo = key.empty() ? '1' : key.back();
      for (char d = lo; d <= '3'; ++d) {
        std::string k = key + d;
        jets[k] = jets[key].derivative(ui[static_cast<std::size_t>(d - '1')]);
        next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  return jets;
}

/// sigma^2 * qform as a bilinear form, evaluated on independent left/right
/// jet tables and truncated at u-weight `cutoff`.
WPoly eval_bilinear(const BilinearRelation& rel, const CurveParams& params,
                    const VarTablePtr& tab, const JetMap& jl, const JetMap& jr, int cutoff) {
  WPoly acc(tab);
  for (const PTerm& t : rel.qform.terms()) {
    WPoly muc = WPoly::constant(tab, t.coeff);
    std::string structural;
    for (const auto& [s, e] : t.syms) {
      if (s.compare(0, 2, "mu") == 0) {
        const WPoly m = mu_coefficient(params, tab, std::stoi(s.substr(2)));
        for (int i = 0; i < e && !muc.is_zero(); ++i) muc = muc * m;
      } else {
        structural = s;
      }
    }
    if (muc.is_zero()) continue;

    WPoly pair(tab);
    if (structural.empty()) {
      pair = WPoly::mul(jl.at(""), jr.at(""), cutoff);
    } else if (structural[0] == 'Q') {
      const std::string idx = structural.substr(1);
      for (int mask = 0; mask < 16; ++mask) {
        std::string s1, s2;
        for (int b = 0; b < 4; ++b) ((mask >> b) & 1 ? s1 : s2) += idx[static_cast<size_t>(b)];
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        const WPoly prod = WPoly::mul(jl.at(s1), jr.at(s2), cutoff);
        if (s2.size() % 2 == 0)
          pair += prod;
        else
          pair -= prod;
      }
      pair = pair * WPoly::constant(tab, Rational(-1, 2));
    } else {  // 2-index p_ab
      const std::string a(1, structural[1]), b(1, structural[2]);
      pair = WPoly::mul(jl.at(a), jr.at(b), cutoff) + WPoly::mul(jl.at(b), jr.at(a), cutoff) -
             WPoly::mul(jl.at(""), jr.at(a + b), cutoff) -
             WPoly::mul(jl.at(a + b), jr.at(""), cutoff);
      pair = pair * WPoly::constant(tab, Rational(1, 2));
    }
    acc += WPoly::mul(muc, pair, cutoff);
  }
  return acc;
}

/// Odd-total-degree u-monomial exponent vectors of u-weight w.
std::vector<ExpVec> odd_u_monomials(const VarTablePtr& tab, int w) {
  const std::size_t i1 = tab->index_of("u1"), i2 = tab->index_of("u2"),
                    i3 = tab->index_of("u3");
  std::vector<ExpVec> out;
  for (int a = 0; 5 * a <= w; ++a)
    for (int b = 0; 5 * a + 2 * b <= w; ++b) {
      const int c = w - 5 * a - 2 * b;
      if ((a + b + c) % 2 == 0) continue;
      ExpVec e = zero_exp();
      e[i1] = static_cast<std::int16_t>(a);
      e[i2] = static_cast<std::int16_t>(b);
      e[i3] = static_cast<std::int16_t>(c);
      out.push_back(e);
    }
  return out;
}

/// mu-monomial exponent vectors of mu-weight m over the active indices.
void mu_monomials_rec(const VarTablePtr& tab, const std::vector<int>& idx, std::size_t pos,
                      int rem, ExpVec& cur, std::vector<ExpVec>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  if (pos == idx.size()) return;
  const int j = idx[pos];
  const std::size_t vi = tab->index_of("mu" + std::to_string(j));
  for (int k = 0; k * j <= rem; ++k) {
    cur[vi] = static_cast<std::int16_t>(k);
    mu_monomials_rec(tab, idx, pos + 1, rem - k * j, cur, out);
  }
  cur[vi] = 0;
}

std::vector<ExpVec> mu_monomials(const VarTablePtr& tab, const CurveParams& params, int m) {
  if (!params.symbolic) {
    if (m != 0) return {};
    return {zero_exp()};
  }
  std::vector<ExpVec> out;
  ExpVec cur = zero_exp();
  mu_monomials_rec(tab, mu_indices(params.purely_trigonal), 0, m, cur, out);
  return out;
}

/// Splits an exponent vector into its u-part and mu-part.
struct SplitKeys {
  std::size_t i1, i2, i3;
  ExpVec u_part(const ExpVec& e) const {
    ExpVec u = zero_exp();
    u[i1] = e[i1];
    u[i2] = e[i2];
    u[i3] = e[i3];
    return u;
  }
  ExpVec mu_part(const ExpVec& e) const {
    ExpVec m = e;
    m[i1] = m[i2] = m[i3] = 0;
    return m;
  }
};

std::string monomial_name(const VarTablePtr& tab, const ExpVec& e) {
  return WPoly::monomial(tab, e, Rational(1)).str();
}

}  // namespace

WPoly sigma_seed(const VarTablePtr& tab) {
  const std::size_t i1 = tab->index_of("u1"), i2 = tab->index_of("u2"),
                    i3 = tab->index_of("u3");
  ExpVec e1 = zero_exp(), e2 = zero_exp(), e3 = zero_exp();
  e1[i1] = 1;
  e2[i2] = 2;
  e2[i3] = 1;
  e3[i3] = 5;
  return WPoly::monomial(tab, e1, Rational(1)) + WPoly::monomial(tab, e2, Rational(-1)) +
         WPoly::monomial(tab, e3, Rational(1, 20));
}

WPoly sigma_slice(const SigmaSeries& s, int w) { return s.series.slice_pos(w); }

SigmaSeries expand_sigma(const CurveParams& params, int cutoff) {
  const RelationSet& cat = four_index_relations();
  std::vector<std::string> ids;
  ids.reserve(cat.entries.size());
  for (const RelationEntry& e : cat.entries) ids.push_back(e.id);
  return expand_sigma(params, cutoff, ids);
}

SigmaSeries expand_sigma(const CurveParams& params, int cutoff,
                         const std::vector<std::string>& relation_ids) {
  params.validate();
  if (cutoff < 5) throw std::invalid_argument("expand_sigma: cutoff must be >= 5");
  if (relation_ids.empty()) throw std::invalid_argument("expand_sigma: no relations given");

  const std::vector<BilinearRelation> rels = bilinear_four_index(relation_ids);
  const VarTablePtr tab = u_table(params.symbolic, params.purely_trigonal);
  const SplitKeys split{tab->index_of("u1"), tab->index_of("u2"), tab->index_of("u3")};

  WPoly sigma = sigma_seed(tab);
  const JetMap seed_jets = make_jets(sigma, tab);

  for (int w = 6; w <= cutoff; ++w) {
    const JetMap known_jets = make_jets(sigma, tab);

    // Unknown slice: odd u-monomials of weight w times mu-monomials of
    // weight w - 5 (for specialized parameters the mu-part is absorbed into
    // the rational coefficients).
    const std::vector<ExpVec> umons = odd_u_monomials(tab, w);
    const std::vector<ExpVec> numons = mu_monomials(tab, params, params.symbolic ? w - 5 : 0);

    // Shared mu-free matrix: one row per (relation, u-monomial of its new
    // slice), one column per unknown u-monomial; plus per-relation residual
    // slices grouped by mu-monomial.
    std::map<std::pair<std::size_t, ExpVec>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> col_entries(umons.size());
    std::map<ExpVec, std::map<std::size_t, Rational>> rhs;  // nu -> row -> value

    auto row_index = [&](std::size_t ri, const ExpVec& ue) {
      return row_of.emplace(std::make_pair(ri, ue), row_of.size()).first->second;
    };

    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      const BilinearRelation& rel = rels[ri];
      const int wmax = w + 5 - rel.dmax;
      if (wmax < 0) continue;

      const WPoly resid = eval_bilinear(rel, params, tab, known_jets, known_jets, wmax);
      if (!resid.truncated(wmax - 1).is_zero())
        throw std::runtime_error("expand_sigma: relation '" + rel.id +
                                 "' has a nonzero slice below its new weight-" +
                                 std::to_string(w) + " constraint (inconsistent system)");
      for (const auto& t : resid.terms()) {
        const std::size_t r = row_index(ri, split.u_part(t.e));
        rhs[split.mu_part(t.e)][r] -= t.c;
      }

      for (std::size_t k = 0; k < umons.size(); ++k) {
        const JetMap mono_jets = make_jets(WPoly::monomial(tab, umons[k], Rational(1)), tab);
        const WPoly col = eval_bilinear(rel, params, tab, seed_jets, mono_jets, wmax) +
                          eval_bilinear(rel, params, tab, mono_jets, seed_jets, wmax);
        for (const auto& t : col.terms())
          col_entries[k].emplace_back(row_index(ri, t.e), t.c);
      }
    }

    QMatrix a(row_of.size(), QRow(umons.size(), Rational(0)));
    for (std::size_t k = 0; k < umons.size(); ++k)
      for (const auto& [r, v] : col_entries[k]) a[r][k] += v;

    WPoly cw(tab);
    for (const ExpVec& nu : numons) {
      std::vector<Rational> b(row_of.size(), Rational(0));
      const auto it = rhs.find(nu);
      if (it != rhs.end())
        for (const auto& [r, v] : it->second) b[r] = v;
      else if (row_of.empty())
        continue;

      const SolveOutcome sol = solve_linear(a, b);
      if (sol.status == SolveStatus::kInconsistent)
        throw std::runtime_error("expand_sigma: weight-" + std::to_string(w) +
                                 " system is inconsistent (transcription damage suspected)");
      if (sol.status == SolveStatus::kUnderdetermined) {
        std::string names;
        for (std::size_t k : sol.free_cols) {
          if (!names.empty()) names += ", ";
          names += monomial_name(tab, umons[k]);
        }
        throw std::runtime_error("expand_sigma: weight-" + std::to_string(w) +
                                 " system is underdetermined; free coefficients at " + names);
      }
      for (std::size_t k = 0; k < umons.size(); ++k) {
        if (sol.x[k] == Rational(0)) continue;
        ExpVec e = umons[k];
        for (std::size_t v = 0; v < kMaxVars; ++v)
          e[v] = static_cast<std::int16_t>(e[v] + nu[v]);
        cw += WPoly::monomial(tab, e, sol.x[k]);
      }
    }

    // Residual mu-monomials outside the enumerated weight-(w-5) list would
    // indicate broken grading.
    for (const auto& [nu, rows] : rhs) {
      (void)rows;
      if (std::find(numons.begin(), numons.end(), nu) == numons.end())
        throw std::runtime_error("expand_sigma: weight-" + std::to_string(w) +
                                 " residual carries a mu-monomial of the wrong weight");
    }

    sigma += cw;
  }

  // Final pass: every relation must vanish through its deepest imposed slice.
  const JetMap final_jets = make_jets(sigma, tab);
  for (const BilinearRelation& rel : rels) {
    const int wmax = cutoff + 5 - rel.dmax;
    if (wmax < 0) continue;
    if (!eval_bilinear(rel, params, tab, final_jets, final_jets, wmax).is_zero())
      throw std::runtime_error("expand_sigma: relation '" + rel.id +
                               "' fails on the completed series");
  }

  SigmaSeries out;
  out.params = params;
  out.tab = tab;
  out.cutoff = cutoff;
  out.series = sigma;
  return out;
}

bool check_parity(const SigmaSeries& s) {
  const std::size_t i1 = s.tab->index_of("u1"), i2 = s.tab->index_of("u2"),
                    i3 = s.tab->index_of("u3");
  for (const auto& t : s.series.terms())
    if ((t.e[i1] + t.e[i2] + t.e[i3]) % 2 == 0) return false;
  return true;
}

bool check_zeta_equivariance(const SigmaSeries& s) {
  if (!s.params.purely_trigonal)
    throw std::invalid_argument(
        "check_zeta_equivariance: stated for the purely trigonal family only");
  const std::size_t i1 = s.tab->index_of("u1"), i2 = s.tab->index_of("u2"),
                    i3 = s.tab->index_of("u3");
  for (const auto& t : s.series.terms()) {
    const int a = t.e[i1], b = t.e[i2], c = t.e[i3];
    if ((a + b + c) % 2 == 0) return false;
    if ((a + b + 2 * c) % 3 != 1) return false;
  }
  return true;
}

}  // namespace trigsigma
