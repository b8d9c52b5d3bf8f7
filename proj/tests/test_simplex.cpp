#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ahyp;
using ahyp_test::lp_min_by_vertices;
using ahyp_test::rand_long;
using ahyp_test::seeded_rng;

TEST_CASE("simplex solves small exact programs") {
  // min t1+t2+t3 s.t. 3t1+2t3 = 1, 3t2+2t3 = 1 (Example 1 geometry at (1,1))
  MatQ A = {{Rat(3), Rat(0), Rat(2)}, {Rat(0), Rat(3), Rat(2)}};
  VecQ b = {Rat(1), Rat(1)};
  VecQ c = {Rat(1), Rat(1), Rat(1)};
  auto res = solve_lp_eq(A, b, c);
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.objective == Rat(1, 2));

  SECTION("infeasible") {
    auto bad = solve_lp_eq({{Rat(1)}}, {Rat(-1)}, {Rat(0)});
    CHECK(bad.status == LpStatus::infeasible);
  }
  SECTION("unbounded") {
    MatQ A2 = {{Rat(1), Rat(-1)}};
    auto ub = solve_lp_eq(A2, {Rat(0)}, {Rat(-1), Rat(0)});
    CHECK(ub.status == LpStatus::unbounded);
  }
  SECTION("redundant rows") {
    MatQ A3 = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    auto red = solve_lp_eq(A3, {Rat(1), Rat(2)}, {Rat(1), Rat(0)});
    REQUIRE(red.status == LpStatus::optimal);
    CHECK(red.objective == Rat(0));
  }
}

TEST_CASE("simplex agrees with the basic-solution oracle on random programs") {
  auto rng = seeded_rng("simplex_oracle", 90210);
  long checked = 0;
  for (int iter = 0; iter < 160; ++iter) {
    long m = rand_long(rng, 1, 3), n = rand_long(rng, 1, 5);
    MatQ A(static_cast<std::size_t>(m), VecQ(static_cast<std::size_t>(n)));
    for (auto& row : A)
      for (auto& x : row) x = Rat(rand_long(rng, -4, 4));
    // build rhs from a random nonnegative point so feasibility is common
    VecQ x0(static_cast<std::size_t>(n));
    for (auto& x : x0) x = Rat(rand_long(rng, 0, 3));
    VecQ b(static_cast<std::size_t>(m), Rat(0));
    bool feasible_by_construction = rand_long(rng, 0, 3) > 0;
    for (long i = 0; i < m; ++i) {
      if (feasible_by_construction)
        for (long j = 0; j < n; ++j) b[i] += A[i][j] * x0[j];
      else
        b[i] = Rat(rand_long(rng, -5, 5));
    }
    VecQ c(static_cast<std::size_t>(n));
    for (auto& x : c) x = Rat(rand_long(rng, 0, 4));  // c >= 0 keeps the LP bounded
    auto res = solve_lp_eq(A, b, c);
    auto oracle = lp_min_by_vertices(A, b, c);
    if (oracle) {
      REQUIRE(res.status == LpStatus::optimal);
      CHECK(res.objective == *oracle);
      // returned point must be feasible and attain the objective
      Rat obj = 0;
      for (long j = 0; j < n; ++j) {
        CHECK(res.x[j] >= 0);
        obj += c[j] * res.x[j];
      }
      CHECK(obj == res.objective);
      ++checked;
    } else {
      CHECK(res.status == LpStatus::infeasible);
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("box feasibility") {
  MatQ A = {{Rat(3), Rat(0), Rat(2)}, {Rat(0), Rat(3), Rat(2)}};
  VecQ ones(3, Rat(1));
  CHECK(lp_feasible_box(A, {Rat(4), Rat(1)}, ones));        // t=(1,0,1/2)
  CHECK_FALSE(lp_feasible_box(A, {Rat(5), Rat(1)}, ones));  // needs t3=1, then y>=2
  CHECK(lp_feasible_box(A, {Rat(0), Rat(0)}, ones));
}
