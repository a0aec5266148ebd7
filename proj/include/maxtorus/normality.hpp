#pragma once

#include "maxtorus/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace maxtorus {

/// Rational b indexed by rays plus the vertex u_σ of every maximal cone,
/// in the order of fan.max_cones.
struct NormalityCertificate {
  RationalVector b;
  std::vector<RationalVector> vertices;
};

/// u_σ solving <v_i, u_σ> + b_i = 0 for the rays of σ. Throws
/// std::domain_error if a maximal cone does not have dim linearly
/// independent rays.
std::vector<RationalVector> fan_vertices(const Fan& fan, const RationalVector& b);

enum class NormalityMode { Normal, WeaklyNormal };

struct CertificateViolation {
  std::string code;  // NEGATIVE_FORM | ZERO_OFF_CONE | NOT_FULL_DIMENSIONAL
  std::size_t cone = 0;
  std::size_t ray = 0;
  Rational value;
};

struct CertificateCheck {
  bool ok = true;
  std::vector<CertificateViolation> violations;
};

CertificateCheck check_certificate(const Fan& fan, const RationalVector& b, NormalityMode mode);

/// Certificate or nullopt ("not normal"). Throws std::domain_error when the
/// fan is invalid, non-simplicial or incomplete.
std::optional<NormalityCertificate> decide_normal(const Fan& fan, std::uint64_t seed = kDefaultSeed);
std::optional<NormalityCertificate> decide_weakly_normal(const Fan& fan, std::uint64_t seed = kDefaultSeed);

}  // namespace maxtorus
