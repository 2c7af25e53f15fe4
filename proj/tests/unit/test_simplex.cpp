#include <doctest/doctest.h>

#include <random>

#include "conedet/exact/simplex.hpp"

using namespace conedet;
using namespace conedet::exact;

namespace {

Vec col(const Mat& a, std::size_t j) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i][j];
  return c;
}

void verify_optimal_certificate(const Mat& a, const Vec& b, const Vec& cost,
                                const LpResult& res) {
  REQUIRE(res.status == LpStatus::Optimal);
  REQUIRE(res.x.size() == cost.size());
  // Primal feasibility.
  for (const auto& xi : res.x) CHECK(xi >= 0);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(dot(a[i], res.x) == b[i]);
  // The reported objective is the actual cost of x.
  CHECK(dot(cost, res.x) == res.objective);
  // Strong duality: y.b equals the objective and every reduced cost is >= 0.
  REQUIRE(res.dual.size() == a.size());
  CHECK(dot(res.dual, b) == res.objective);
  for (std::size_t j = 0; j < cost.size(); ++j) {
    CHECK(cost[j] - dot(res.dual, col(a, j)) >= 0);
  }
}

void verify_farkas_certificate(const Mat& a, const Vec& b, const LpResult& res) {
  REQUIRE(res.status == LpStatus::Infeasible);
  REQUIRE(res.farkas.size() == a.size());
  // y.A <= 0 componentwise while y.b > 0: no x >= 0 can satisfy Ax = b.
  for (std::size_t j = 0; j < a[0].size(); ++j) {
    CHECK(dot(res.farkas, col(a, j)) <= 0);
  }
  CHECK(dot(res.farkas, b) > 0);
}

}  // namespace

TEST_CASE("hand LP with a unique optimum") {
  // min -x1 - 2 x2  s.t.  x1 + x2 + s1 = 4,  x1 - x2 + s2 = 2,  x >= 0.
  // Vertices (x1, x2): (0,0) -> 0, (2,0) -> -2, (3,1) -> -5, (0,4) -> -8.
  const Mat a = {{1, 1, 1, 0}, {1, -1, 0, 1}};
  const Vec b = {4, 2};
  const Vec cost = {-1, -2, 0, 0};
  const auto res = solve_lp(a, b, cost);
  verify_optimal_certificate(a, b, cost, res);
  CHECK(res.objective == -8);
  CHECK(res.x == Vec{0, 4, 0, 6});
}

TEST_CASE("hand LP with an optimal edge still certifies") {
  // min -x1 - x2 over the same region: the whole edge x1 + x2 = 4 is optimal.
  const Mat a = {{1, 1, 1, 0}, {1, -1, 0, 1}};
  const Vec b = {4, 2};
  const Vec cost = {-1, -1, 0, 0};
  const auto res = solve_lp(a, b, cost);
  verify_optimal_certificate(a, b, cost, res);
  CHECK(res.objective == -4);
}

TEST_CASE("infeasible systems come with a Farkas certificate") {
  SUBCASE("negative right-hand side") {
    const Mat a = {{1, 1}};
    const Vec b = {-1};
    const auto res = lp_feasible(a, b);
    verify_farkas_certificate(a, b, res);
  }
  SUBCASE("conflicting duplicate rows") {
    const Mat a = {{1, 2}, {1, 2}};
    const Vec b = {1, 2};
    const auto res = solve_lp(a, b, Vec{0, 0});
    verify_farkas_certificate(a, b, res);
  }
}

TEST_CASE("unbounded model is reported as such") {
  // min -x1 with x1 = x2: x = (t, t) drives the cost to -infinity.
  const auto res = solve_lp(Mat{{1, -1}}, Vec{0}, Vec{-1, 0});
  CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("redundant equality rows are tolerated") {
  const Mat a = {{1, 1}, {2, 2}};
  const Vec b = {3, 6};
  const Vec cost = {1, 0};
  const auto res = solve_lp(a, b, cost);
  verify_optimal_certificate(a, b, cost, res);
  CHECK(res.objective == 0);
}

TEST_CASE("Bland's rule terminates on the classic cycling instance") {
  // Degenerate model known to cycle under the most-negative-cost rule.
  const Mat a = {
      {1, 0, 0, make_rational(1, 4), -60, make_rational(-1, 25), 9},
      {0, 1, 0, make_rational(1, 2), -90, make_rational(-1, 50), 3},
      {0, 0, 1, 0, 0, 1, 0},
  };
  const Vec b = {0, 0, 1};
  const Vec cost = {0, 0, 0, make_rational(-3, 4), 150, make_rational(-1, 50), 6};
  const auto res = solve_lp(a, b, cost);
  verify_optimal_certificate(a, b, cost, res);
  CHECK(res.objective == make_rational(-1, 20));
}

TEST_CASE("lp_feasible finds a point of the standard-form polyhedron") {
  const auto res = lp_feasible(Mat{{1, 1}, {1, -1}}, Vec{4, 2});
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(dot(Vec{1, 1}, res.x) == 4);
  CHECK(dot(Vec{1, -1}, res.x) == 2);
  for (const auto& xi : res.x) CHECK(xi >= 0);
}

TEST_CASE("randomized LPs always certify their status") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<long> pos(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    const int n = m + 1 + static_cast<int>(rng() % 3);
    Mat a(m, Vec(n));
    for (auto& row : a) {
      for (auto& x : row) x = coeff(rng);
    }
    // b = A x0 with x0 >= 0 makes the model feasible by construction.
    Vec x0(n);
    for (auto& x : x0) x = pos(rng);
    Vec b(m, 0);
    for (int i = 0; i < m; ++i) b[i] = dot(a[i], x0);
    Vec cost(n);
    for (auto& c : cost) c = coeff(rng);

    const auto res = solve_lp(a, b, cost);
    REQUIRE(res.status != LpStatus::Infeasible);
    if (res.status == LpStatus::Optimal) {
      verify_optimal_certificate(a, b, cost, res);
      CHECK(res.objective <= dot(cost, x0));
    }
  }
}
