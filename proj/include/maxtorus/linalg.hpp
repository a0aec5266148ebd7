#pragma once

#include "maxtorus/matrix.hpp"

#include <optional>
#include <vector>

namespace maxtorus {

struct RowEchelon {
  RationalMatrix reduced;             // reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;    // pivot column of row i, i < rank
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan over Q. Pivot: leftmost column, smallest row index.
RowEchelon reduced_row_echelon(RationalMatrix a);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& a);

/// Exact solution of A x = b with free variables set to zero, or nullopt.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

/// Basis of {x : A x = 0}, one vector per free column (in column order).
std::vector<RationalVector> nullspace(const RationalMatrix& a);

/// Canonical basis (nonzero RREF rows) of the row space spanned by `vectors`.
std::vector<RationalVector> row_space_basis(const std::vector<RationalVector>& vectors,
                                            std::size_t dim);

/// Minimum Euclidean-norm solution of A x = b for A with independent rows
/// (x = A^T (A A^T)^{-1} b); nullopt when inconsistent.
std::optional<RationalVector> min_norm_solution(const RationalMatrix& a, const RationalVector& b);

/// True iff every vector of `a` lies in span(b) (both given as row lists).
bool span_contains(const std::vector<RationalVector>& b, const std::vector<RationalVector>& a,
                   std::size_t dim);

}  // namespace maxtorus
