#pragma once

// Bundled instances.

#include "maxtorus/fan.hpp"
#include "maxtorus/subspace.hpp"

namespace maxtorus::catalog {

/// Rays ±1 in R^1.
Fan cp1_fan();
/// Rays (1,0), (0,1), (-1,-1); all pairs are maximal cones.
Fan cp2_fan();
/// Rays e1, -e1, e2, -e2; four quadrants.
Fan cp1xcp1_fan();
/// Seven rays -e1, -e2, -e3, e1+e2+e3, e1+e2, e2+e3, e1+e3 with ten cones;
/// complete and regular, not normal.
Fan fulton7_fan();
/// Single first-orthant cone in R^n.
Fan orthant_fan(std::size_t n);
/// Rays e1, e2 in R^3, no 2-cone: V = (C^2 \ 0) x C^*.
Fan hopf_fan();
/// span{(i, i, -1)}.
ComplexSubspace hopf_subspace();
/// span{(a1, a2, a3)}.
ComplexSubspace hopf_subspace(const GaussianRational& a1, const GaussianRational& a2,
                              const GaussianRational& a3);

/// Complete simplicial fan in R^3 with seven rays that is not weakly
/// normal (found by a seeded flip search).
Fan flip7_fan();

struct Instance {
  Fan fan;
  ComplexSubspace h;
};

/// (Σ_K, h) with K the complex of `target` and p(h) = ker(e_i ↦ v_i), so
/// that q(Σ_K) is linearly isomorphic to `target`. A ghost coordinate is
/// added when the kernel has odd dimension.
Instance coordinate_presentation(const Fan& target);

/// Boundary of the triangle on 3 vertices.
SimplicialComplex triangle_boundary();
/// Boundary of the octahedron on vertices 1..6 (antipodal pairs {1,2},
/// {3,4}, {5,6}) plus ghost vertex 7.
SimplicialComplex moment_angle_cube_complex();
/// span{(1,1,0,0,0,0,i), (0,0,1,1,i,i,0)} ⊂ C^7.
ComplexSubspace moment_angle_cube_subspace();

}  // namespace maxtorus::catalog
