#include <doctest.h>

#include "../support/fan_generators.hpp"
#include "../support/fm_oracle.hpp"
#include "maxtorus/catalog.hpp"
#include "maxtorus/linalg.hpp"
#include "maxtorus/normality.hpp"

#include <set>

using namespace maxtorus;
using namespace maxtorus::testing;

namespace {

// The feasibility systems written out directly from the definition: for
// every maximal σ and ray i outside σ, <v_i, u_σ(b)> + b_i with u_σ(b)
// obtained from the vertex equations.
std::vector<Inequality> form_rows(const Fan& f, const Rational& rhs, std::size_t width) {
  std::vector<Inequality> out;
  const std::size_t m = f.ray_count();
  for (const auto& cone : f.max_cones) {
    const RationalMatrix g = f.generators(cone);
    for (std::size_t i = 0; i < m; ++i) {
      if (std::binary_search(cone.begin(), cone.end(), i)) continue;
      // u_σ(b) = -G^{-1} b_σ, so <v_i, u_σ> = -(G^{-T} v_i) · b_σ
      const auto lambda = solve(g.transpose(), f.rays.row_vector(i));
      Inequality q{RationalVector(width), rhs};
      q.a[i] = 1;
      for (std::size_t j = 0; j < cone.size(); ++j) q.a[cone[j]] -= (*lambda)[j];
      out.push_back(q);
    }
  }
  return out;
}

std::vector<Inequality> normal_system(const Fan& f) { return form_rows(f, 1, f.ray_count()); }

// Weak system with u* = 0 (shifting b by <v_i, u*> moves u* to the origin).
std::vector<Inequality> weak_system(const Fan& f) {
  auto sys = form_rows(f, 0, f.ray_count());
  for (std::size_t i = 0; i < f.ray_count(); ++i) {
    Inequality q{RationalVector(f.ray_count()), 1};
    q.a[i] = 1;
    sys.push_back(q);
  }
  return sys;
}

RationalVector shifted(const Fan& f, const RationalVector& b, const Rational& lambda, const RationalVector& c) {
  RationalVector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = lambda * b[i] + dot(f.rays.row_vector(i), c);
  return out;
}

std::vector<Fan> corpus(Gen& g, int count) {
  std::vector<Fan> out{catalog::cp1_fan(), catalog::cp2_fan(), catalog::cp1xcp1_fan(), catalog::fulton7_fan(),
                       catalog::flip7_fan()};
  for (int t = 0; t < count; ++t) {
    switch (t % 3) {
      case 0: out.push_back(random_complete_fan_2d(g)); break;
      case 1: out.push_back(random_complete_fan_3d(g, 1 + g.index(4))); break;
      default: out.push_back(random_flips(g, random_complete_fan_3d(g, 2 + g.index(4)), 20)); break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("fan_vertices") {
  const Fan f7 = catalog::fulton7_fan();
  const auto vs = fan_vertices(f7, {0, 0, 0, 1, 1, 1, 1});
  std::set<RationalVector> distinct(vs.begin(), vs.end());
  CHECK(distinct == std::set<RationalVector>{{0, 0, 0}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});

  const auto cp1 = fan_vertices(catalog::cp1_fan(), {0, 1});
  CHECK(cp1 == std::vector<RationalVector>{{0}, {1}});

  for (const auto& u : fan_vertices(catalog::cp2_fan(), {0, 0, 0})) CHECK(u == RationalVector{0, 0});
  CHECK_THROWS_AS(fan_vertices(catalog::hopf_fan(), {0, 0}), std::domain_error);
}

TEST_CASE("check_certificate") {
  const Fan f7 = catalog::fulton7_fan();
  const RationalVector b{0, 0, 0, 1, 1, 1, 1};
  CHECK(check_certificate(f7, b, NormalityMode::WeaklyNormal).ok);
  const auto strict = check_certificate(f7, b, NormalityMode::Normal);
  CHECK_FALSE(strict.ok);
  for (const auto& v : strict.violations) CHECK(v.code == "ZERO_OFF_CONE");
  CHECK(check_certificate(catalog::cp2_fan(), {0, 0, 1}, NormalityMode::Normal).ok);
  CHECK(check_certificate(catalog::cp1xcp1_fan(), {0, 1, 0, 1}, NormalityMode::Normal).ok);

  // b = 0: every form vanishes and the polytope is the origin
  const auto zero = check_certificate(catalog::cp2_fan(), {0, 0, 0}, NormalityMode::WeaklyNormal);
  CHECK_FALSE(zero.ok);
  CHECK(zero.violations.back().code == "NOT_FULL_DIMENSIONAL");
  const auto negative = check_certificate(catalog::cp2_fan(), {0, 0, -1}, NormalityMode::Normal);
  CHECK(negative.violations.front().code == "NEGATIVE_FORM");
}

TEST_CASE("decide_normal and decide_weakly_normal") {
  const auto cp2 = decide_normal(catalog::cp2_fan());
  REQUIRE(cp2);
  CHECK(check_certificate(catalog::cp2_fan(), cp2->b, NormalityMode::Normal).ok);
  CHECK(cp2->vertices.size() == 3);

  CHECK_FALSE(decide_normal(catalog::fulton7_fan()));
  const auto f7 = decide_weakly_normal(catalog::fulton7_fan());
  REQUIRE(f7);
  CHECK(check_certificate(catalog::fulton7_fan(), f7->b, NormalityMode::WeaklyNormal).ok);

  CHECK(decide_normal(catalog::cp1xcp1_fan()));
  CHECK(decide_weakly_normal(catalog::cp1_fan()));
  CHECK(decide_normal(catalog::cp1_fan()));

  CHECK_THROWS_AS(decide_normal(catalog::orthant_fan(2)), std::domain_error);
  CHECK_THROWS_AS(decide_weakly_normal(catalog::hopf_fan()), std::domain_error);
}

TEST_CASE("a complete fan that is not weakly normal") {
  const Fan f = catalog::flip7_fan();
  REQUIRE(fan_validate(f).valid);
  REQUIRE(fan_is_complete(f));
  CHECK_FALSE(decide_weakly_normal(f));
  CHECK_FALSE(decide_normal(f));
  CHECK_FALSE(farkas_certificate(weak_system(f), f.ray_count()).empty());
}

TEST_CASE("property: returned certificates verify and survive positive scaling plus linear shifts") {
  Gen g(51);
  std::vector<std::pair<Fan, NormalityCertificate>> weak_fans;
  std::vector<std::pair<Fan, NormalityCertificate>> normal_fans;
  for (const Fan& f : corpus(g, 45)) {
    const auto weak = decide_weakly_normal(f);
    const auto normal = decide_normal(f);
    if (normal) {
      CHECK(weak);  // normal implies weakly normal
      CHECK(check_certificate(f, normal->b, NormalityMode::Normal).ok);
      normal_fans.emplace_back(f, *normal);
    }
    if (!weak) {
      CHECK_FALSE(farkas_certificate(weak_system(f), f.ray_count()).empty());
      continue;
    }
    CHECK(check_certificate(f, weak->b, NormalityMode::WeaklyNormal).ok);
    weak_fans.emplace_back(f, *weak);
  }
  REQUIRE(!weak_fans.empty());
  REQUIRE(!normal_fans.empty());
  for (int t = 0; t < 1000; ++t) {
    const bool strict = t % 2 == 0;
    const auto& [f, cert] = strict ? normal_fans[g.index(normal_fans.size())] : weak_fans[g.index(weak_fans.size())];
    Rational lambda(g.integer(1, 7), g.integer(1, 5));
    lambda.canonicalize();
    RationalVector c(f.dim);
    for (auto& x : c) x = g.rational();
    const auto moved = shifted(f, cert.b, lambda, c);
    if (strict) {
      CHECK(check_certificate(f, moved, NormalityMode::Normal).ok);
      CHECK(check_certificate(f, moved, NormalityMode::WeaklyNormal).ok);
    } else {
      CHECK(check_certificate(f, moved, NormalityMode::WeaklyNormal).ok);
    }
    // vertices move to λu - c
    const auto after = fan_vertices(f, moved);
    for (std::size_t k = 0; k < cert.vertices.size(); ++k)
      for (std::size_t j = 0; j < f.dim; ++j) CHECK(after[k][j] == lambda * cert.vertices[k][j] - c[j]);
  }
}

TEST_CASE("property: Fourier-Motzkin agrees with the simplex on small fans") {
  Gen g(52);
  for (int t = 0; t < 200; ++t) {
    const Fan f = t % 4 == 0 ? catalog::cp1_fan() : random_complete_fan_2d(g, 6);
    CHECK(bool(decide_normal(f)) == fm_feasible(normal_system(f), f.ray_count()));
    CHECK(bool(decide_weakly_normal(f)) == fm_feasible(weak_system(f), f.ray_count()));
    // perturbed systems mix feasible and infeasible verdicts
    auto sys = normal_system(f);
    Inequality extra{RationalVector(f.ray_count()), g.integer(-2, 2)};
    for (auto& x : extra.a) x = g.integer(-2, 2);
    sys.push_back(extra);
    LinearProgram lp;
    lp.variables = f.ray_count();
    for (const auto& q : sys) lp.add(q.a, Relation::GreaterEqual, q.c);
    CHECK(lp_feasible(lp) == fm_feasible(sys, f.ray_count()));
  }
}

TEST_CASE("property: flip search output is decided consistently") {
  Gen g(53);
  int refused = 0;
  for (int t = 0; t < 15; ++t) {
    const Fan f = random_flips(g, random_complete_fan_3d(g, 3), 25);
    const auto weak = decide_weakly_normal(f);
    if (weak) {
      CHECK(check_certificate(f, weak->b, NormalityMode::WeaklyNormal).ok);
    } else {
      ++refused;
      CHECK_FALSE(farkas_certificate(weak_system(f), f.ray_count()).empty());
    }
  }
  MESSAGE("not weakly normal: " << refused << " of 15");
}
