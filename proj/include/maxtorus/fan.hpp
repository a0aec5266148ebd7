#pragma once

#include "maxtorus/cone.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace maxtorus {

/// Sorted, duplicate-free, 0-based ray (or vertex) indices.
using IndexSet = std::vector<std::size_t>;

/// Face system on vertices {0..vertices-1}, stored by maximal faces.
/// Vertices in no face are ghost vertices.
struct SimplicialComplex {
  std::size_t vertices = 0;
  std::vector<IndexSet> facets;

  /// Sorts faces, drops non-maximal ones; throws on out-of-range vertices.
  static SimplicialComplex make(std::size_t vertices, std::vector<IndexSet> faces);

  bool is_face(const IndexSet& s) const;
  std::vector<std::size_t> ghost_vertices() const;
  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

/// Fan stored by its rays and maximal cones. Rays of lattice fans are
/// primitive integer vectors; projected fans may carry rational rays.
struct Fan {
  std::size_t dim = 0;
  RationalMatrix rays;               // one row per ray
  std::vector<IndexSet> max_cones;

  /// Lattice fan: non-primitive rays are divided by their gcd and reported
  /// in `warnings`. Throws std::invalid_argument on structural defects.
  static Fan from_integer_rays(std::size_t dim, const std::vector<IntegerVector>& rays,
                               std::vector<IndexSet> cones,
                               std::vector<std::string>* warnings = nullptr);
  /// Rays taken as given (no primitivity normalization).
  static Fan from_generators(std::size_t dim, RationalMatrix rays, std::vector<IndexSet> cones);

  std::size_t ray_count() const { return rays.rows(); }
  ConeGenerators generators(const IndexSet& cone) const;
  bool is_simplicial() const;
  bool is_regular() const;
  std::size_t max_cone_dim() const;
};

struct FanIssue {
  std::string code;  // CONE_NOT_STRICTLY_CONVEX | BAD_INTERSECTION
  std::size_t first = 0;
  std::size_t second = 0;
  std::string message;
};

struct FanValidity {
  bool valid = true;
  std::vector<FanIssue> issues;  // sorted by (first, second)
};

/// Pairwise face condition, certified by an exact separating functional u
/// with <u,·> = 0 on shared rays, >= 1 on the rest of the first cone and
/// <= -1 on the rest of the second.
FanValidity fan_validate(const Fan& fan);

/// Separating functional for one pair, if it exists.
std::optional<RationalVector> separating_functional(const Fan& fan, const IndexSet& a,
                                                    const IndexSet& b);

inline constexpr std::uint64_t kDefaultSeed = 0xA11CE;

/// Wall condition + facet-graph connectivity, cross-checked against 2n+1
/// seeded sample points. Throws std::domain_error("not a valid fan") if
/// fan_validate fails and std::domain_error for non-simplicial fans.
bool fan_is_complete(const Fan& fan, std::uint64_t seed = kDefaultSeed);

/// Same decision without the validity precondition check.
bool wall_condition_complete(const Fan& fan);

/// Index of a maximal cone containing x, if any (exact solve per cone).
std::optional<std::size_t> point_in_support(const Fan& fan, const RationalVector& x);

/// Pseudorandom nonzero integer points in [-range, range]^dim.
std::vector<RationalVector> sample_points(std::size_t dim, std::size_t count, std::uint64_t seed,
                                          long range = 1000);

/// Every sampled point lies in the support.
bool sampled_support_covers(const Fan& fan, std::size_t count, std::uint64_t seed);

/// Σ_K in R^m: rays e_i for non-ghost vertices (in vertex order), one
/// maximal cone per facet.
Fan fan_from_complex(const SimplicialComplex& complex);

/// Throws std::domain_error for non-simplicial fans.
SimplicialComplex underlying_complex(const Fan& fan);

}  // namespace maxtorus
