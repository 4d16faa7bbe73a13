// Standard variable tables shared by the library modules.

#include "trigsigma/tables.hpp"

#include <stdexcept>
#include <string>

namespace trigsigma {

const std::vector<int>& mu_indices(bool purely_trigonal) {
  static const std::vector<int> general = {1, 2, 3, 4, 5, 6, 8, 9, 12};
  static const std::vector<int> pure = {3, 6, 9, 12};
  return purely_trigonal ? pure : general;
}

std::vector<VarTable::Var> mu_vars(bool purely_trigonal) {
  std::vector<VarTable::Var> out;
  for (int j : mu_indices(purely_trigonal))
    out.push_back({"mu" + std::to_string(j), -j, 0});
  return out;
}

namespace {

VarTablePtr with_mu(std::vector<VarTable::Var> vars, bool symbolic, bool purely_trigonal) {
  if (symbolic)
    for (auto& m : mu_vars(purely_trigonal)) vars.push_back(m);
  return make_table(std::move(vars));
}

}  // namespace

VarTablePtr u_table(bool symbolic, bool purely_trigonal) {
  return with_mu({{"u1", 5}, {"u2", 2}, {"u3", 1}}, symbolic, purely_trigonal);
}

VarTablePtr uv_table(bool symbolic, bool purely_trigonal) {
  return with_mu({{"u1", 5}, {"u2", 2}, {"u3", 1}, {"v1", 5}, {"v2", 2}, {"v3", 1}},
                 symbolic, purely_trigonal);
}

VarTablePtr xy_table(bool symbolic, bool purely_trigonal) {
  return with_mu({{"x", -3}, {"y", -4}}, symbolic, purely_trigonal);
}

VarTablePtr xzyw_table(bool symbolic, bool purely_trigonal) {
  return with_mu({{"x", -3}, {"z", -3}, {"y", -4}, {"w", -4}}, symbolic, purely_trigonal);
}

VarTablePtr chart_table(const std::vector<std::string>& params, bool symbolic,
                        bool purely_trigonal, int floor) {
  if (floor > 0) throw std::invalid_argument("chart_table: floor must be <= 0");
  std::vector<VarTable::Var> vars;
  for (const auto& p : params) vars.push_back({p, 1, floor});
  return with_mu(std::move(vars), symbolic, purely_trigonal);
}

int var_zeta_grade(const std::string& name) {
  if (name == "u1" || name == "u2" || name == "v1" || name == "v2") return 1;
  if (name == "u3" || name == "v3") return 2;
  if (name == "x" || name == "z") return 0;
  if (name == "y" || name == "w") return 1;
  // Local parameters scale like u3 (t ~ u3 to first order, and the shift
  // variable del rides along with t).
  if (name == "t" || name == "t1" || name == "t2" || name == "t3" || name == "s" ||
      name == "del")
    return 2;
  if (name.rfind("mu", 0) == 0 && name.size() > 2) {
    int j = std::stoi(name.substr(2));
    return ((j % 3) + 3) % 3;
  }
  throw std::invalid_argument("var_zeta_grade: unknown variable '" + name + "'");
}

}  // namespace trigsigma
