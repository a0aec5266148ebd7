#pragma once

#include "maxtorus/matrix.hpp"

#include <vector>

namespace maxtorus {

struct HermiteForm {
  IntegerMatrix h;  // row Hermite normal form
  IntegerMatrix u;  // unimodular, h = u * a
};

/// Row-style HNF: pivots positive and strictly moving right, entries above a
/// pivot reduced into [0, pivot), zero rows last.
HermiteForm hermite_normal_form(const IntegerMatrix& a);

struct SmithForm {
  IntegerMatrix d;  // diagonal, d = u * a * v, diagonal entries form a divisibility chain
  IntegerMatrix u;
  IntegerMatrix v;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Nonzero invariant factors d_1 | d_2 | ... | d_r, r = rank(a).
IntegerVector smith_invariants(const IntegerMatrix& a);

/// Lattice basis of {x in Z^k : B x = 0}.
std::vector<IntegerVector> integer_kernel(const IntegerMatrix& b);

/// Integer basis of S ∩ Z^k for S = span(basis) ⊂ Q^k; rows in Hermite form.
std::vector<IntegerVector> subspace_lattice_points(const std::vector<RationalVector>& basis,
                                                   std::size_t k);

Integer determinant(const IntegerMatrix& a);

/// Rows scaled so that each becomes a primitive integer vector.
IntegerMatrix clear_row_denominators(const RationalMatrix& a);

}  // namespace maxtorus
