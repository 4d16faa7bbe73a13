// Exact linear solving: unique / underdetermined / inconsistent outcomes.

#include <doctest.h>

#include "trigsigma/linsolve.hpp"

using namespace trigsigma;

namespace {
Rational q(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("unique solution") {
  QMatrix a = {{q(2), q(1)}, {q(1), q(-1)}, {q(3), q(0)}};
  std::vector<Rational> b = {q(7, 2), q(1), q(9, 2)};  // x=3/2, y=1/2
  const auto out = solve_linear(a, b);
  REQUIRE(out.status == SolveStatus::kUnique);
  CHECK(out.x[0] == q(3, 2));
  CHECK(out.x[1] == q(1, 2));
}

TEST_CASE("underdetermined system reports free columns") {
  QMatrix a = {{q(1), q(2), q(0)}, {q(0), q(0), q(1)}};
  std::vector<Rational> b = {q(3), q(4)};
  const auto out = solve_linear(a, b);
  REQUIRE(out.status == SolveStatus::kUnderdetermined);
  REQUIRE(out.free_cols.size() == 1);
  CHECK(out.free_cols[0] == 1);
  // returned particular solution: free column set to zero
  CHECK(out.x[0] == q(3));
  CHECK(out.x[1] == q(0));
  CHECK(out.x[2] == q(4));
}

TEST_CASE("inconsistent system detected") {
  QMatrix a = {{q(1), q(1)}, {q(2), q(2)}};
  std::vector<Rational> b = {q(1), q(3)};
  CHECK(solve_linear(a, b).status == SolveStatus::kInconsistent);
}

TEST_CASE("rank") {
  CHECK(rank({{q(1), q(2)}, {q(2), q(4)}}) == 1);
  CHECK(rank({{q(1), q(0), q(3)}, {q(0), q(5), q(0)}, {q(2), q(5), q(6)}}) == 2);
  CHECK(rank({{q(0), q(0)}, {q(0), q(0)}}) == 0);
  CHECK(rank({}) == 0);
}
