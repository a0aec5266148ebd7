#pragma once

#include "maxtorus/matrix.hpp"

#include <vector>

namespace maxtorus {

/// Generators are the rows of the matrix; `cols()` is the ambient dimension.
using ConeGenerators = RationalMatrix;

/// Inequality description {x : <u, x> >= 0 for all u in normals}. The
/// normals generate the dual cone.
struct HalfspaceDescription {
  std::size_t dim = 0;
  std::vector<RationalVector> normals;
};

bool cone_is_strictly_convex(const ConeGenerators& generators);
bool cone_is_simplicial(const ConeGenerators& generators);
/// Simplicial with all Smith invariants 1. Throws for non-integer generators.
bool cone_is_regular(const ConeGenerators& generators);

/// Fourier-Motzkin elimination of the multipliers in x = G^T λ, λ >= 0;
/// redundant normals removed by exact LP.
HalfspaceDescription dual_cone(const ConeGenerators& generators);

/// x is a non-negative combination of the generators (exact LP).
bool cone_contains(const ConeGenerators& generators, const RationalVector& x);

/// Removes vectors that are non-negative combinations of the others
/// (greedily, in order).
std::vector<RationalVector> irredundant_generators(std::vector<RationalVector> vs, std::size_t dim);

}  // namespace maxtorus
