#include <doctest.h>

#include "../support/quotient_generators.hpp"
#include "maxtorus/catalog.hpp"
#include "maxtorus/lattice.hpp"
#include "maxtorus/linalg.hpp"
#include "maxtorus/normality.hpp"
#include "maxtorus/quotient.hpp"

using namespace maxtorus;
using namespace maxtorus::testing;

namespace {

GaussianRational gq(long re, long im) { return {Rational(re), Rational(im)}; }

bool same_real_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b, std::size_t n) {
  return span_contains(a, b, n) && span_contains(b, a, n);
}

bool has_code(const std::vector<Diagnostic>& ds, const std::string& code) {
  for (const auto& d : ds)
    if (d.code == code) return true;
  return false;
}

// Hopf-type data with rays e1, e2 in R^3 and h = span{(a1, a2, a3)}.
ComplexSubspace hopf_h(Gen& g) {
  for (;;) {
    GaussianVector v{gq(g.integer(-3, 3), g.integer(-3, 3)), gq(g.integer(-3, 3), g.integer(-3, 3)),
                     gq(g.integer(-3, 3), g.integer(-3, 3))};
    if (v[2] == GaussianRational{}) continue;
    return ComplexSubspace(3, {v});
  }
}

}  // namespace

TEST_CASE("projection_p") {
  CHECK(same_real_span(projection_p(catalog::hopf_subspace()), {{0, 0, 1}, {1, 1, 0}}, 3));
  CHECK(projection_p(ComplexSubspace::zero(3)).empty());
  const auto p = projection_p(ComplexSubspace::from_real(3, {{1, 1, 1}}));
  CHECK(p.size() == 1);
  CHECK(same_real_span(p, {{1, 1, 1}}, 3));
}

TEST_CASE("check_h_cap_t") {
  CHECK(check_h_cap_t(catalog::hopf_subspace()).trivial());
  const auto r = check_h_cap_t(ComplexSubspace::from_real(3, {{1, 1, 1}}));
  REQUIRE(r.h_cap_t.size() == 1);
  CHECK(same_real_span(r.h_cap_t, {{1, 1, 1}}, 3));
  CHECK(r.h_cap_it.size() == 1);
  CHECK(check_h_cap_t(ComplexSubspace(2, {{gq(1, 1), gq(0, 1)}})).trivial());
}

TEST_CASE("quotient_map_q") {
  RationalMatrix q = quotient_map_q(3, {{0, 0, 1}, {1, 1, 0}});
  REQUIRE(q.rows() == 1);
  CHECK((q.row_vector(0) == RationalVector{1, -1, 0} || q.row_vector(0) == RationalVector{-1, 1, 0}));
  CHECK(quotient_map_q(2, {}) == RationalMatrix::identity(2));
  CHECK(quotient_map_q(2, {{1, 0}, {0, 1}}).rows() == 0);

  SymbolicSubspace s;
  s.ambient = 2;
  s.symbols = 1;
  SymbolicVector re(2), im(2);
  re.set(0, 0, 1);
  re.set(1, 1, 1);
  s.basis.push_back({re, im});
  CHECK_THROWS_WITH_AS(quotient_map_q(s), "quotient map requires rational data", std::domain_error);
  CHECK_THROWS_WITH_AS(check_condition_b(catalog::cp2_fan(), s), "quotient map requires rational data",
                       std::domain_error);
}

TEST_CASE("check_condition_b") {
  CHECK(check_condition_b(catalog::hopf_fan(), catalog::hopf_subspace()).holds);
  const auto bad = check_condition_b(catalog::hopf_fan(), catalog::hopf_subspace(gq(0, 1), gq(0, -1), gq(-1, 0)));
  CHECK_FALSE(bad.holds);
  CHECK(has_code(bad.diagnostics, "COND_B_NOT_COMPLETE"));
  CHECK(check_condition_b(catalog::cp2_fan(), ComplexSubspace::zero(2)).holds);
  const auto flat = check_condition_b(catalog::hopf_fan(), catalog::hopf_subspace(gq(0, 1), gq(0, 0), gq(-1, 0)));
  CHECK(has_code(flat.diagnostics, "COND_B_NOT_INJECTIVE"));
}

TEST_CASE("check_condition_a_I") {
  const SimplicialComplex hopf = SimplicialComplex::make(3, {{0}, {1}});
  CHECK(check_condition_a_I(hopf, catalog::hopf_subspace()).holds);
  CHECK(check_condition_a_I(catalog::triangle_boundary(), ComplexSubspace::from_real(3, {{1, 1, 1}})).holds);

  const SimplicialComplex two = SimplicialComplex::make(2, {{0}, {1}});
  const auto r = check_condition_a_I(two, ComplexSubspace(2, {{gq(1, 0), gq(1, 1)}}));
  CHECK_FALSE(r.holds);
  CHECK(has_code(r.diagnostics, "COND_A_I_LATTICE"));

  // the full simplex has a fixed point
  const auto full = check_condition_a_I(SimplicialComplex::make(3, {{0, 1, 2}}), catalog::hopf_subspace());
  CHECK(has_code(full.diagnostics, "COND_A_I_SUBSPACE"));
  // (1/2)(1,1,1) has integral outside coordinates for I = {1,2} but is not integral
  CHECK_FALSE(check_condition_a_I(catalog::triangle_boundary(), ComplexSubspace::from_real(3, {{2, 2, 1}})).holds);
}

TEST_CASE("validate_construction_II") {
  auto r = validate_construction_II(catalog::hopf_fan(), catalog::hopf_subspace());
  CHECK(r.valid);
  CHECK(r.descriptor.dim_C_M == 2);
  CHECK(r.descriptor.dim_T == 3);
  CHECK(r.descriptor.max_stabilizer_dim == 1);
  CHECK(r.descriptor.foliation_dim == 1);
  // dim T + dim T_z = dim_R M = 4 for the Hopf surface
  CHECK(r.descriptor.dim_T + r.descriptor.max_stabilizer_dim == 4);

  r = validate_construction_II(catalog::cp2_fan(), ComplexSubspace::zero(2));
  CHECK(r.valid);
  CHECK(r.descriptor.dim_C_M == 2);
  CHECK(r.descriptor.foliation_dim == 0);

  r = validate_construction_II(catalog::hopf_fan(), catalog::hopf_subspace(gq(0, 1), gq(0, -1), gq(-1, 0)));
  CHECK_FALSE(r.valid);
  REQUIRE_FALSE(r.issues.empty());
  CHECK(r.issues.front().message == "condition (b): projected fan not complete");

  r = validate_construction_II(catalog::cp2_fan(), ComplexSubspace::from_real(2, {{1, 1}}));
  CHECK(has_code(r.issues, "COND_A_H_CAP_T"));
  CHECK(has_code(r.issues, "COND_A_P_NOT_INJECTIVE"));

  const Fan weighted = Fan::from_integer_rays(2, {{1, 0}, {1, 2}}, {{0, 1}});
  CHECK(has_code(validate_construction_II(weighted, ComplexSubspace::zero(2)).issues, "FAN_NOT_REGULAR"));
}

TEST_CASE("validate_construction_I") {
  auto r = validate_construction_I(SimplicialComplex::make(3, {{0}, {1}}), catalog::hopf_subspace());
  CHECK(r.valid);
  CHECK(r.descriptor.dim_C_M == 2);

  r = validate_construction_I(catalog::triangle_boundary(), ComplexSubspace::from_real(3, {{1, 1, 1}}));
  CHECK(r.valid);
  CHECK(r.descriptor.dim_C_M == 2);

  CHECK(r.descriptor.dim_T == 2);
  CHECK(r.descriptor.foliation_dim == 0);
  r = validate_construction_I(SimplicialComplex::make(4, {{0, 1}, {0, 2}, {1, 2}}), ComplexSubspace::zero(4));
  CHECK(has_code(r.issues, "COND_B_NOT_COMPLETE"));
  r = validate_construction_I(SimplicialComplex::make(2, {{0}}), ComplexSubspace::zero(2));
  CHECK_FALSE(r.valid);
  CHECK(has_code(r.issues, "COND_B_NOT_COMPLETE"));

  r = validate_construction_I(catalog::moment_angle_cube_complex(), catalog::moment_angle_cube_subspace());
  CHECK(r.valid);
  CHECK(r.descriptor.dim_C_M == 5);
  CHECK(r.descriptor.max_stabilizer_dim == 3);
}

TEST_CASE("canonical_foliation") {
  auto f = canonical_foliation(catalog::hopf_subspace());
  CHECK(f.conjugate.same_span(ComplexSubspace(3, {{gq(0, -1), gq(0, -1), gq(-1, 0)}})));
  CHECK(f.h_cap_hbar_dim == 0);
  CHECK(f.discrete);
  CHECK(f.leaf_dim == 1);
  const Fan hopf = catalog::hopf_fan();
  CHECK(canonical_foliation(catalog::hopf_subspace(), &hopf).consistent_with_fan == true);

  f = canonical_foliation(ComplexSubspace::zero(2));
  CHECK(f.leaf_dim == 0);
  CHECK(f.discrete);

  f = canonical_foliation(ComplexSubspace(2, {{gq(1, 1), gq(1, 1)}}));
  CHECK(f.h_cap_hbar_dim == 1);
  CHECK_FALSE(f.discrete);
}

TEST_CASE("cox_batyrev_lift") {
  auto l = cox_batyrev_lift(catalog::cp2_fan(), ComplexSubspace::zero(2));
  CHECK(l.complex == catalog::triangle_boundary());
  CHECK(l.ghosts == 0);
  CHECK(l.invariants.empty());
  CHECK(l.h.same_span(ComplexSubspace::from_real(3, {{1, 1, 1}})));

  l = cox_batyrev_lift(catalog::hopf_fan(), catalog::hopf_subspace());
  CHECK(l.ghosts == 1);
  CHECK(l.torus_ghosts == 1);
  CHECK(l.complex == SimplicialComplex::make(3, {{0}, {1}}));
  CHECK(l.h.same_span(catalog::hopf_subspace()));
  CHECK(l.invariants.empty());

  std::vector<std::string> warnings;
  const Fan line = Fan::from_integer_rays(1, {{2}, {-1}}, {{0}, {1}}, &warnings);
  CHECK(warnings.size() == 1);
  l = cox_batyrev_lift(line, ComplexSubspace::zero(1));
  CHECK(l.invariants.empty());
  CHECK(l.h.dim() == 1);

  // rays (1,0,0), (1,2,0) span an index-2 sublattice of their saturation
  const Fan index2 = Fan::from_integer_rays(3, {{1, 0, 0}, {1, 2, 0}}, {{0}, {1}});
  l = cox_batyrev_lift(index2, catalog::hopf_subspace());
  CHECK(l.invariants == IntegerVector{2});
  CHECK(l.torus_ghosts == 1);
  CHECK(l.ghosts == 2);
  CHECK(l.h.ambient() - l.h.dim() == 2);

  CHECK_THROWS_AS(cox_batyrev_lift(catalog::hopf_fan(), catalog::hopf_subspace(gq(0, 1), gq(0, -1), gq(-1, 0))),
                  std::invalid_argument);
}

TEST_CASE("divisor_hypotheses") {
  const auto cp2 = divisor_hypotheses(catalog::triangle_boundary(), ComplexSubspace::from_real(3, {{1, 1, 1}}));
  CHECK(cp2.simply_connected);
  CHECK_FALSE(cp2.generic_annihilator);
  CHECK_FALSE(cp2.note.empty());
  CHECK_FALSE(divisor_hypotheses(SimplicialComplex::make(3, {{0}, {1}}), catalog::hopf_subspace()).simply_connected);

  // p(h) spanned by (1, xi_1): Re v = (1, xi_1), Im v = 0
  SymbolicSubspace s;
  s.ambient = 2;
  s.symbols = 1;
  SymbolicVector re(2), im(2);
  re.set(0, 0, 1);
  re.set(1, 1, 1);
  s.basis.push_back({re, im});
  const SimplicialComplex two = SimplicialComplex::make(2, {{0}, {1}});
  CHECK(divisor_hypotheses(two, s).generic_annihilator);
  CHECK(divisor_hypotheses(two, s).note.empty());
  CHECK_FALSE(divisor_hypotheses(two, ComplexSubspace::from_real(2, {{1, 1}})).generic_annihilator);
}

TEST_CASE("coordinate presentations") {
  for (const Fan& target : {catalog::flip7_fan(), catalog::fulton7_fan(), catalog::cp2_fan()}) {
    const auto inst = catalog::coordinate_presentation(target);
    CHECK(validate_construction_II(inst.fan, inst.h).valid);
    const RationalMatrix q = quotient_map_q(inst.fan.dim, projection_p(inst.h));
    const Fan projected = project_fan(inst.fan, q);
    CHECK(projected.dim == target.dim);
    CHECK(bool(decide_weakly_normal(projected)) == bool(decide_weakly_normal(target)));
    CHECK(bool(decide_normal(projected)) == bool(decide_normal(target)));
  }
  const auto flip = catalog::coordinate_presentation(catalog::flip7_fan());
  CHECK(flip.fan.dim == 7);
  CHECK(flip.h.dim() == 2);
  CHECK_FALSE(decide_weakly_normal(project_fan(flip.fan, quotient_map_q(7, projection_p(flip.h)))));
}

TEST_CASE("property: Hopf sign criterion") {
  Gen g(41);
  const Fan fan = catalog::hopf_fan();
  int accepted = 0;
  for (int t = 0; t < 1000; ++t) {
    const ComplexSubspace h = hopf_h(g);
    const auto& v = h.basis()[0];
    const Rational s1 = (v[0] / v[2]).im, s2 = (v[1] / v[2]).im;
    const bool expected = sgn(s1) != 0 && sgn(s1) == sgn(s2);
    const bool valid = validate_construction_II(fan, h).valid;
    CHECK(valid == expected);
    accepted += valid;
  }
  CHECK(accepted > 100);
}

TEST_CASE("property: lift round trip and maximality identity") {
  Gen g(42);
  for (int t = 0; t < 200; ++t) {
    const auto inst = random_valid_instance(g);
    const auto r = validate_construction_II(inst.fan, inst.h);
    REQUIRE(r.valid);
    CHECK(2 * r.descriptor.dim_C_M == r.descriptor.dim_T + r.descriptor.max_stabilizer_dim);
    const auto lift = cox_batyrev_lift(inst.fan, inst.h);
    const auto back = validate_construction_I(lift.complex, lift.h);
    CHECK(back.valid);
    CHECK(lift.h.ambient() - lift.h.dim() == inst.fan.dim - inst.h.dim());
    CHECK(2 * back.descriptor.dim_C_M == back.descriptor.dim_T + back.descriptor.max_stabilizer_dim);
    // the lifted subspace maps onto h
    CHECK(lift.ghosts == lift.torus_ghosts + lift.invariants.size());
  }
}

TEST_CASE("property: condition (b) verdicts do not depend on the choice of q") {
  Gen g(43);
  for (int t = 0; t < 300; ++t) {
    Fan fan;
    ComplexSubspace h;
    if (t % 2 == 0) {
      fan = catalog::hopf_fan();
      h = hopf_h(g);
    } else {
      auto inst = random_valid_instance(g, 4);
      fan = inst.fan;
      h = g.coin() ? inst.h : random_subspace(g, fan.dim, inst.h.dim());
    }
    const RationalMatrix q1 = quotient_map_q(fan.dim, projection_p(h));
    // second deterministic choice: Hermite basis of the same row lattice
    RationalMatrix q2 = q1;
    if (q1.rows() > 0) q2 = to_rational(hermite_normal_form(to_integer(q1)).h);
    const RationalMatrix q3 = to_rational(g.unimodular(q1.rows())) * q1;
    const auto b1 = check_condition_b(fan, q1), b2 = check_condition_b(fan, q2), b3 = check_condition_b(fan, q3);
    CHECK(b1.holds == b2.holds);
    CHECK(b1.holds == b3.holds);
    if (!b1.holds) {
      CHECK(b1.diagnostics.front().code == b2.diagnostics.front().code);
      CHECK(b1.diagnostics.front().code == b3.diagnostics.front().code);
    }
  }
}

TEST_CASE("property: condition (a) of construction I passes to subcomplexes") {
  Gen g(44);
  int held = 0;
  for (int t = 0; t < 400; ++t) {
    SimplicialComplex k;
    ComplexSubspace h;
    if (t % 2 == 0) {
      const auto inst = random_valid_instance(g, 4);
      const auto lift = cox_batyrev_lift(inst.fan, inst.h);
      k = lift.complex;
      h = lift.h;
    } else {
      k = random_complex(g, 4);
      h = random_subspace(g, k.vertices, g.index(k.vertices + 1), 1);
    }
    if (!check_condition_a_I(k, h).holds) continue;
    ++held;
    std::vector<IndexSet> faces;
    for (const auto& f : k.facets) {
      if (g.integer(0, 3) == 0) continue;
      IndexSet s;
      for (auto v : f)
        if (g.integer(0, 4) != 0) s.push_back(v);
      faces.push_back(s);
    }
    CHECK(check_condition_a_I(SimplicialComplex::make(k.vertices, faces), h).holds);
  }
  CHECK(held > 50);
}

TEST_CASE("property: conjugation is an involution") {
  Gen g(45);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t m = 1 + g.index(4);
    const ComplexSubspace h = random_subspace(g, m, g.index(m + 1));
    const ComplexSubspace twice = canonical_foliation(canonical_foliation(h).conjugate).conjugate;
    CHECK(twice.same_span(h));
    for (const auto& v : h.basis()) CHECK(twice.contains(v));
    const auto caps = check_h_cap_t(h);
    CHECK(caps.h_cap_t.size() == caps.h_cap_it.size());
  }
}
