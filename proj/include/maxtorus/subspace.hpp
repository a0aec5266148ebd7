#pragma once

#include "maxtorus/symbolic.hpp"

#include <utility>
#include <vector>

namespace maxtorus {

/// Complex subspace h ⊂ C^m with a Gaussian-rational basis.
class ComplexSubspace {
 public:
  ComplexSubspace() = default;
  /// Throws std::invalid_argument on length mismatch or a C-dependent basis.
  ComplexSubspace(std::size_t ambient, std::vector<GaussianVector> basis);

  static ComplexSubspace zero(std::size_t ambient) { return ComplexSubspace(ambient, {}); }
  /// C-span of real vectors.
  static ComplexSubspace from_real(std::size_t ambient, const std::vector<RationalVector>& vs);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<GaussianVector>& basis() const { return basis_; }

  /// Rows Re v, Im v for every basis vector v (2·dim rows).
  RationalMatrix real_imaginary_rows() const;
  ComplexSubspace conjugate() const;
  bool contains(const GaussianVector& v) const;
  /// Same C-span.
  bool same_span(const ComplexSubspace& other) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<GaussianVector> basis_;
};

/// Realification: v ↦ (Re v, Im v) ∈ R^{2m}.
RationalVector realify(const GaussianVector& v);
GaussianVector times_i(const GaussianVector& v);

/// Complex dimension of the C-span of the given vectors.
std::size_t complex_rank(const std::vector<GaussianVector>& vs, std::size_t ambient);

/// Subspace given by pairs (Re, Im) of symbolic vectors over declared
/// Q-independent constants.
struct SymbolicSubspace {
  std::size_t ambient = 0;
  std::size_t symbols = 0;
  std::vector<std::pair<SymbolicVector, SymbolicVector>> basis;

  bool is_rational() const;
  /// Throws std::domain_error("quotient map requires rational data") when
  /// some coefficient involves a declared constant.
  ComplexSubspace to_rational() const;
  static SymbolicSubspace from_rational(const ComplexSubspace& h);
};

}  // namespace maxtorus
