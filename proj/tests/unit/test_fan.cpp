#include <doctest.h>

#include "../support/fan_generators.hpp"
#include "maxtorus/catalog.hpp"
#include "maxtorus/fan.hpp"
#include "maxtorus/linalg.hpp"

using namespace maxtorus;
using namespace maxtorus::testing;

namespace {

ConeGenerators gens(std::initializer_list<std::initializer_list<long>> rows) {
  return RationalMatrix::from_rows(rows);
}

bool same_cone(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b, std::size_t n) {
  const auto ma = RationalMatrix::from_rows(a, n), mb = RationalMatrix::from_rows(b, n);
  for (const auto& v : a)
    if (!cone_contains(mb, v)) return false;
  for (const auto& v : b)
    if (!cone_contains(ma, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("cone predicates") {
  CHECK(cone_is_strictly_convex(gens({{1, 0}, {0, 1}})));
  CHECK_FALSE(cone_is_strictly_convex(gens({{1, 0}, {-1, 0}})));
  CHECK_FALSE(cone_is_strictly_convex(gens({{1, 0}, {1, 2}, {-1, -1}})));
  CHECK(cone_is_strictly_convex(RationalMatrix(0, 2)));

  CHECK(cone_is_simplicial(gens({{1, 0}, {0, 1}})));
  CHECK_FALSE(cone_is_simplicial(gens({{1, 0}, {0, 1}, {1, 1}})));
  CHECK(cone_is_simplicial(RationalMatrix(0, 2)));

  CHECK(cone_is_regular(gens({{1, 0}, {0, 1}})));
  CHECK_FALSE(cone_is_regular(gens({{1, 0}, {1, 2}})));
  CHECK(cone_is_regular(gens({{1, 1, 1}})));
}

TEST_CASE("dual cone examples") {
  auto d = dual_cone(gens({{1, 0}, {0, 1}}));
  CHECK(same_cone(d.normals, {{1, 0}, {0, 1}}, 2));
  CHECK(d.normals.size() == 2);

  d = dual_cone(gens({{1, 0}}));
  CHECK(d.normals.size() == 3);
  CHECK(same_cone(d.normals, {{1, 0}, {0, 1}, {0, -1}}, 2));
  for (const auto& u : d.normals) CHECK(dot(u, {1, 0}) >= 0);

  d = dual_cone(RationalMatrix(0, 2));
  CHECK(same_cone(d.normals, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2));
}

TEST_CASE("fan_validate") {
  CHECK(fan_validate(catalog::cp2_fan()).valid);
  CHECK(fan_validate(catalog::fulton7_fan()).valid);
  CHECK(fan_validate(catalog::orthant_fan(3)).valid);

  const Fan overlap = Fan::from_integer_rays(2, {{1, 0}, {1, 1}, {0, 1}, {1, 2}}, {{0, 2}, {1, 3}});
  const auto report = fan_validate(overlap);
  CHECK_FALSE(report.valid);
  REQUIRE(report.issues.size() == 1);
  CHECK(report.issues[0].code == "BAD_INTERSECTION");

  const Fan line = Fan::from_integer_rays(1, {{1}, {-1}}, {{0, 1}});
  CHECK(fan_validate(line).issues.front().code == "CONE_NOT_STRICTLY_CONVEX");
}

TEST_CASE("fan construction normalizes rays") {
  std::vector<std::string> warnings;
  const Fan f = Fan::from_integer_rays(1, {{2}, {-1}}, {{0}, {1}}, &warnings);
  CHECK(f.rays(0, 0) == 1);
  CHECK(warnings.size() == 1);
  CHECK_THROWS_AS(Fan::from_integer_rays(1, {{1}, {2}}, {{0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Fan::from_integer_rays(2, {{0, 0}}, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(Fan::from_integer_rays(2, {{1, 0}, {0, 1}}, {{0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Fan::from_integer_rays(2, {{1, 0}}, {{3}}), std::invalid_argument);
}

TEST_CASE("fan completeness") {
  CHECK(fan_is_complete(catalog::cp1_fan()));
  CHECK(fan_is_complete(catalog::cp2_fan()));
  CHECK(fan_is_complete(catalog::cp1xcp1_fan()));
  CHECK(fan_is_complete(catalog::fulton7_fan()));
  CHECK(catalog::fulton7_fan().max_cones.size() == 10);
  CHECK_FALSE(fan_is_complete(catalog::orthant_fan(2)));
  CHECK_FALSE(fan_is_complete(catalog::hopf_fan()));
  CHECK_FALSE(fan_is_complete(without_cone(catalog::cp2_fan(), 0)));

  const Fan overlap = Fan::from_integer_rays(2, {{1, 0}, {1, 1}, {0, 1}, {1, 2}}, {{0, 2}, {1, 3}});
  CHECK_THROWS_WITH_AS(fan_is_complete(overlap), "not a valid fan", std::domain_error);
}

TEST_CASE("fan_from_complex and underlying_complex") {
  Fan f = fan_from_complex(SimplicialComplex::make(2, {{0}, {1}}));
  CHECK(f.dim == 2);
  CHECK(f.ray_count() == 2);
  CHECK(f.max_cone_dim() == 1);

  f = fan_from_complex(catalog::triangle_boundary());
  CHECK(f.dim == 3);
  CHECK(f.max_cones == std::vector<IndexSet>{{0, 1}, {0, 2}, {1, 2}});

  const SimplicialComplex hopf = SimplicialComplex::make(3, {{0}, {1}});
  f = fan_from_complex(hopf);
  CHECK(f.dim == 3);
  CHECK(f.rays == RationalMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}));
  CHECK(hopf.ghost_vertices() == std::vector<std::size_t>{2});

  CHECK(underlying_complex(catalog::cp2_fan()) == catalog::triangle_boundary());
  const auto k7 = underlying_complex(catalog::fulton7_fan());
  CHECK(k7.vertices == 7);
  CHECK(k7.facets.size() == 10);
  CHECK(underlying_complex(Fan::from_integer_rays(2, {{1, 0}}, {{0}})).facets.size() == 1);
  const Fan nonsimplicial = Fan::from_integer_rays(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1, 2}});
  CHECK_THROWS_AS(underlying_complex(nonsimplicial), std::domain_error);
}

TEST_CASE("point_in_support") {
  const Fan cp2 = catalog::cp2_fan();
  const auto c = point_in_support(cp2, {-5, 3});
  REQUIRE(c);
  CHECK(cp2.max_cones[*c] == IndexSet{1, 2});
  CHECK_FALSE(point_in_support(catalog::orthant_fan(2), {-1, 0}));
  CHECK(point_in_support(catalog::orthant_fan(2), {0, 0}));
}

TEST_CASE("property: complex round trip and validity of the complex fan") {
  Gen g(31);
  for (int t = 0; t < 1000; ++t) {
    const SimplicialComplex k = random_complex(g);
    const Fan f = fan_from_complex(k);
    // drop ghost vertices: renumber used vertices in order
    std::vector<std::size_t> renum(k.vertices, 0);
    std::size_t next = 0;
    std::vector<bool> used(k.vertices, false);
    for (const auto& face : k.facets)
      for (auto v : face) used[v] = true;
    for (std::size_t v = 0; v < k.vertices; ++v)
      if (used[v]) renum[v] = next++;
    std::vector<IndexSet> faces;
    for (const auto& face : k.facets) {
      IndexSet s;
      for (auto v : face) s.push_back(renum[v]);
      faces.push_back(s);
    }
    CHECK(underlying_complex(f) == SimplicialComplex::make(next, faces));
    if (t % 5 == 0) CHECK(fan_validate(f).valid);
  }
}

TEST_CASE("property: complete fans cover 1000 sample points") {
  Gen g(32);
  for (int t = 0; t < 6; ++t) {
    const Fan f = t % 2 == 0 ? random_complete_fan_2d(g) : random_complete_fan_3d(g);
    REQUIRE(fan_is_complete(f, 7 + t));
    CHECK(sampled_support_covers(f, 1000, 100 + t));
  }
}

TEST_CASE("property: cone predicate implications") {
  Gen g(33);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + g.index(3), k = g.index(4);
    std::vector<IntegerVector> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(random_primitive(g, n, 3));
    RationalMatrix m(0, n);
    for (const auto& v : vs) m.append_row(to_rational(v));
    const bool regular = cone_is_regular(m);
    const bool simplicial = cone_is_simplicial(m);
    const bool strict = cone_is_strictly_convex(m);
    if (regular) CHECK(simplicial);
    if (simplicial) CHECK(strict);
  }
}

TEST_CASE("property: dual cone is an involution on full-dimensional strictly convex cones") {
  Gen g(34);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + g.index(2);
    const std::size_t k = n + g.index(2);
    std::vector<RationalVector> vs;
    for (std::size_t i = 0; i < k; ++i) {
      IntegerVector v = random_primitive(g, n, 3);
      v[0] = abs(v[0]) + 1;  // open half-space x0 > 0 keeps the cone pointed
      vs.push_back(to_rational(v));
    }
    const RationalMatrix gm = RationalMatrix::from_rows(vs, n);
    if (rank(gm) < n) continue;
    const auto dual = dual_cone(gm);
    for (const auto& u : dual.normals)
      for (const auto& v : vs) CHECK(dot(u, v) >= 0);
    const auto back = dual_cone(RationalMatrix::from_rows(dual.normals, n));
    if (t % 4 == 0) CHECK(same_cone(back.normals, vs, n));
  }
}
