#include <doctest.h>

#include "../support/generators.hpp"
#include "maxtorus/linalg.hpp"
#include "maxtorus/lp.hpp"

#include <optional>

using namespace maxtorus;
using maxtorus::testing::Gen;

TEST_CASE("lp examples") {
  LinearProgram p;
  p.variables = 1;
  p.objective = {1};
  p.add({-1}, Relation::GreaterEqual, -1);
  p.add({1}, Relation::GreaterEqual, 0);
  auto r = lp_solve(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 1);
  CHECK(r.point == RationalVector{1});

  LinearProgram q;
  q.variables = 1;
  q.objective = {1};
  q.add({1}, Relation::GreaterEqual, 0);
  CHECK(lp_solve(q).status == LpStatus::Unbounded);

  LinearProgram s;
  s.variables = 1;
  s.add({1}, Relation::GreaterEqual, 1);
  s.add({-1}, Relation::GreaterEqual, 0);
  CHECK(lp_solve(s).status == LpStatus::Infeasible);
}

TEST_CASE("lp with redundant equalities and free variables") {
  LinearProgram p;
  p.variables = 3;
  p.objective = {1, 1, 0};
  p.add({1, 1, 1}, Relation::Equal, 2);
  p.add({2, 2, 2}, Relation::Equal, 4);  // redundant
  p.add({1, 0, 0}, Relation::GreaterEqual, -5);
  p.add({0, 0, 1}, Relation::GreaterEqual, -1);
  const auto r = lp_solve(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 3);
  CHECK(lp_feasible(p));
}

TEST_CASE("lp with no constraints") {
  LinearProgram p;
  p.variables = 2;
  CHECK(lp_solve(p).status == LpStatus::Optimal);
  p.objective = {0, 1};
  CHECK(lp_solve(p).status == LpStatus::Unbounded);
}

namespace {

// Oracle for 2-variable LPs inside a box: enumerate all vertices
// (intersections of pairs of constraint lines) and keep the best feasible one.
std::optional<Rational> brute_force_2d(const LinearProgram& p) {
  std::optional<Rational> best;
  const auto& cs = p.constraints;
  auto feasible = [&](const RationalVector& x) {
    for (const auto& c : cs) {
      const Rational v = dot(c.coefficients, x);
      if (c.relation == Relation::Equal ? v != c.rhs : v < c.rhs) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      RationalMatrix a = RationalMatrix::from_rows({cs[i].coefficients, cs[j].coefficients});
      if (rank(a) < 2) continue;
      const auto x = solve(a, {cs[i].rhs, cs[j].rhs});
      if (!x || !feasible(*x)) continue;
      const Rational v = dot(p.objective, *x);
      if (!best || v > *best) best = v;
    }
  return best;
}

}  // namespace

TEST_CASE("property: simplex agrees with vertex enumeration in the plane") {
  Gen g(21);
  for (int t = 0; t < 1000; ++t) {
    LinearProgram p;
    p.variables = 2;
    p.objective = {g.rational(), g.rational()};
    // bounding box keeps the optimum at a vertex
    p.add({1, 0}, Relation::GreaterEqual, -10);
    p.add({-1, 0}, Relation::GreaterEqual, -10);
    p.add({0, 1}, Relation::GreaterEqual, -10);
    p.add({0, -1}, Relation::GreaterEqual, -10);
    const std::size_t extra = g.index(5);
    for (std::size_t c = 0; c < extra; ++c) {
      RationalVector row{g.rational(), g.rational()};
      p.add(row, g.integer(0, 5) == 0 ? Relation::Equal : Relation::GreaterEqual, g.rational(8, 2));
    }
    const auto r = lp_solve(p);
    const auto oracle = brute_force_2d(p);
    if (!oracle) {
      // a nonempty bounded region always has a vertex
      CHECK(r.status == LpStatus::Infeasible);
    } else {
      REQUIRE(r.status == LpStatus::Optimal);
      CHECK(r.value == *oracle);
    }
  }
}

TEST_CASE("property: random LPs self-verify") {
  Gen g(22);
  int optimal = 0;
  for (int t = 0; t < 1000; ++t) {
    LinearProgram p;
    p.variables = 1 + g.index(4);
    p.objective.resize(p.variables);
    for (auto& c : p.objective) c = g.rational();
    const std::size_t rows = 1 + g.index(6);
    for (std::size_t i = 0; i < rows; ++i) {
      RationalVector row(p.variables);
      for (auto& x : row) x = g.rational();
      p.add(row, g.integer(0, 4) == 0 ? Relation::Equal : Relation::GreaterEqual, g.rational());
    }
    const auto r = lp_solve(p);  // throws std::logic_error on a bad certificate
    if (r.status == LpStatus::Optimal) {
      ++optimal;
      CHECK(r.duals.size() == rows);
    }
  }
  CHECK(optimal > 0);
}
