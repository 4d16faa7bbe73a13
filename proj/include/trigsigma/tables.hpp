// Standard variable tables used across the library.
//
// The weight conventions are global: Jacobian variables u1,u2,u3 have
// weights 5,2,1 (second point v1,v2,v3 alike), curve coordinates x,z have
// weight -3 and y,w weight -4, local parameters (t, t1, t2, t3, s, del)
// weight 1, and the curve parameter mu_j weight -j.  The parameter j = 7,
// 10, 11 do not occur for this curve family.

#pragma once

#include <vector>

#include "trigsigma/vartable.hpp"

namespace trigsigma {

/// Indices j for which the curve has a parameter mu_j.
const std::vector<int>& mu_indices(bool purely_trigonal);

/// mu variable declarations (names "mu1".."mu12" minus the absent ones).
std::vector<VarTable::Var> mu_vars(bool purely_trigonal);

/// [u1,u2,u3] (+ mu's when symbolic).
VarTablePtr u_table(bool symbolic, bool purely_trigonal = false);

/// [u1,u2,u3,v1,v2,v3] (+ mu's when symbolic).
VarTablePtr uv_table(bool symbolic, bool purely_trigonal = false);

/// [x,y] (+ mu's when symbolic); for curve polynomials and resultants.
VarTablePtr xy_table(bool symbolic, bool purely_trigonal = false);

/// [x,z,y,w] (+ mu's when symbolic); for the bi-differential numerator.
VarTablePtr xzyw_table(bool symbolic, bool purely_trigonal = false);

/// Local parameter charts; all listed parameters get Laurent floor `floor`.
VarTablePtr chart_table(const std::vector<std::string>& params, bool symbolic,
                        bool purely_trigonal, int floor);

/// Grade in {0,1,2} a series variable picks up under the order-3 curve
/// automorphism (u1,u2,u3) -> (z u1, z u2, z^2 u3), (x,y) -> (x, z y):
/// u1,u2,v1,v2 -> 1; u3,v3 and local parameters -> 2; x,z -> 0; y,w -> 1;
/// mu_j -> j mod 3.  Throws std::invalid_argument for unknown names.
int var_zeta_grade(const std::string& name);

}  // namespace trigsigma
