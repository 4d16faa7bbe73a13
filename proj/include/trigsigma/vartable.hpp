// Variable tables for graded polynomial arithmetic.
//
// Every polynomial/series carries a pointer to an immutable VarTable that
// fixes the ambient variables, their integral weights and (for Laurent-style
// series) the lowest exponent each variable may carry.  The table order is
// semantically meaningful: it breaks ties in the canonical term order and it
// is the order used by the JSON serialization, so two polynomials over the
// same table serialize bit-identically iff they are equal.

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trigsigma {

/// Hard upper bound on simultaneously live variables in one table; large
/// enough for two sets of Jacobian variables plus all curve parameters.
inline constexpr std::size_t kMaxVars = 20;

/// Exponent vector of a monomial; entries beyond the table size must be 0.
using ExpVec = std::array<std::int16_t, kMaxVars>;

inline ExpVec zero_exp() {
  ExpVec e{};
  return e;
}

class VarTable {
 public:
  struct Var {
    std::string name;
    int weight = 0;        ///< grading weight (may be negative, e.g. parameters)
    int min_exponent = 0;  ///< lowest admissible exponent (<= 0); 0 = polynomial
  };

  explicit VarTable(std::vector<Var> vars) : vars_(std::move(vars)) {
    if (vars_.size() > kMaxVars)
      throw std::invalid_argument("VarTable: too many variables");
    for (const auto& v : vars_) {
      if (v.name.empty()) throw std::invalid_argument("VarTable: empty variable name");
      if (v.min_exponent > 0)
        throw std::invalid_argument("VarTable: min_exponent must be <= 0");
      if (v.weight > 0) has_positive_ = true;
      if (v.weight < 0) has_negative_ = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i].name == vars_[j].name)
          throw std::invalid_argument("VarTable: duplicate variable '" + vars_[i].name + "'");
  }

  std::size_t size() const { return vars_.size(); }
  const Var& var(std::size_t i) const { return vars_.at(i); }
  const std::string& name(std::size_t i) const { return vars_.at(i).name; }
  int weight(std::size_t i) const { return vars_.at(i).weight; }
  bool has_negative_weights() const { return has_negative_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }

  /// Index of a variable that must exist.
  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw std::invalid_argument("VarTable: unknown variable '" + std::string(name) + "'");
  }

  /// Content equality (same names, weights and floors in the same order).
  bool same_as(const VarTable& o) const {
    if (vars_.size() != o.vars_.size()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name != o.vars_[i].name || vars_[i].weight != o.vars_[i].weight ||
          vars_[i].min_exponent != o.vars_[i].min_exponent)
        return false;
    return true;
  }

  /// Total weight of a monomial: sum of exponent * weight over all variables.
  int total_weight(const ExpVec& e) const {
    int w = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) w += int(e[i]) * vars_[i].weight;
    return w;
  }

  /// Weight restricted to positively weighted variables; this is the grading
  /// used for truncation (parameters never count against a cutoff).
  int positive_weight(const ExpVec& e) const {
    int w = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].weight > 0) w += int(e[i]) * vars_[i].weight;
    return w;
  }

  /// Checks exponent floors; entries past size() must be zero.
  void check_exponents(const ExpVec& e) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (i < vars_.size()) {
        if (e[i] < vars_[i].min_exponent)
          throw std::invalid_argument("monomial exponent below floor of variable '" +
                                      vars_[i].name + "'");
      } else if (e[i] != 0) {
        throw std::invalid_argument("monomial uses exponent outside variable table");
      }
    }
  }

  /// Human-readable monomial like "u1^2*u3" ("1" for the empty monomial).
  std::string monomial_str(const ExpVec& e) const {
    std::string s;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars_[i].name;
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<Var> vars_;
  bool has_positive_ = false;
  bool has_negative_ = false;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Convenience builder: make_table({{"u1",5},{"u2",2},{"u3",1}}).
inline VarTablePtr make_table(std::vector<VarTable::Var> vars) {
  return std::make_shared<VarTable>(std::move(vars));
}

}  // namespace trigsigma
