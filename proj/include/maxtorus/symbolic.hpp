#pragma once

#include "maxtorus/matrix.hpp"

#include <map>
#include <vector>

namespace maxtorus {

/// Vector whose coordinates are Q-linear combinations of 1 (symbol 0) and
/// user-declared real constants xi_1..xi_k, assumed Q-linearly independent.
class SymbolicVector {
 public:
  using Coordinate = std::map<std::size_t, Rational>;  // symbol -> nonzero coefficient

  SymbolicVector() = default;
  explicit SymbolicVector(std::size_t dim) : coords_(dim) {}
  explicit SymbolicVector(const RationalVector& constant);

  std::size_t dim() const { return coords_.size(); }
  const Coordinate& at(std::size_t j) const { return coords_.at(j); }
  Rational coefficient(std::size_t j, std::size_t symbol) const;
  void set(std::size_t j, std::size_t symbol, const Rational& value);

  /// Largest symbol index with a nonzero coefficient (0 if purely rational).
  std::size_t max_symbol() const;
  bool is_rational() const { return max_symbol() == 0; }
  /// Coordinate vector of symbol 0; throws if some other symbol is present.
  RationalVector to_rational() const;

  friend SymbolicVector operator+(const SymbolicVector& a, const SymbolicVector& b);
  friend SymbolicVector operator*(const Rational& c, const SymbolicVector& a);
  friend SymbolicVector operator-(const SymbolicVector& a) { return Rational(-1) * a; }
  friend bool operator==(const SymbolicVector&, const SymbolicVector&) = default;

 private:
  std::vector<Coordinate> coords_;
};

/// One row per (vector, symbol) pair holding that symbol's coefficients;
/// all-zero rows are skipped. A rational functional annihilates every input
/// vector iff it lies in the nullspace of the result.
RationalMatrix symbolic_coefficient_matrix(const std::vector<SymbolicVector>& vs);

}  // namespace maxtorus
