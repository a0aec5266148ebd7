#pragma once

#include "maxtorus/normality.hpp"
#include "maxtorus/quotient.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace maxtorus {

/// Relative float tolerances, in one place.
struct Tolerances {
  double kernel = 1e-8;
  double angle = 1e-6;
  double cocycle = 1e-9;
  double fd = 1e-4;
};

/// Constant ρ with FD second derivative = (2π)²/ρ · Q(v), where Q is the
/// ordered double sum. Confirmed by calibrate_rho in the test suite.
inline constexpr int kPairFactor = 2;

/// Exact data shared by every chart: q, q(Σ) and a weak-normality
/// certificate of q(Σ).
struct TKSetup {
  Fan fan;
  ComplexSubspace h;
  std::vector<RationalVector> pH;
  RationalMatrix q;
  Fan projected;
  NormalityCertificate certificate;
};

/// Throws std::invalid_argument if (Σ, h) fails Construction II and
/// std::domain_error if q(Σ) is not weakly normal or `b` is rejected.
TKSetup prepare_tk(const Fan& fan, const ComplexSubspace& h, const std::optional<RationalVector>& b = {},
                   std::uint64_t seed = kDefaultSeed);

struct TKFormData {
  std::size_t chart = 0;  // index of the maximal cone σ
  IndexSet cone;
  RationalVector b_sigma;
  Integer kappa = 1;
  std::vector<RationalVector> characters;  // κ·(q^T u_τ + b_σ), one per maximal cone τ
  std::size_t dim = 0;
  std::vector<double> w;  // characters as a row-major float matrix
};

TKFormData build_tk_data(const TKSetup& setup, std::size_t chart, const Integer& kappa = 1);

/// Smallest positive integer κ making each pairing 0 or ≥ k. Throws
/// std::domain_error("character outside dual cone") on a negative pairing.
Integer choose_smoothness_scale(const std::vector<Rational>& pairings, std::size_t k);
/// Pairings of the characters with the rays of the chart cone.
Integer choose_smoothness_scale(const TKSetup& setup, const TKFormData& data, std::size_t k);

/// log Φ(y) with Φ(y) = Σ_τ exp(-2π<w_τ, y>), by log-sum-exp.
double log_phi(const TKFormData& data, const std::vector<double>& y);
double evaluate_phi(const TKFormData& data, const std::vector<double>& y);

/// Q(v) = Φ^{-2} Σ_{τ1,τ2} χ_τ1 χ_τ2 <w_τ1 - w_τ2, v>² as a dim × dim
/// row-major matrix.
std::vector<double> hessian_at(const TKFormData& data, const std::vector<double>& y);
double quadratic_form(const std::vector<double>& hessian, const std::vector<double>& v);

/// Central second difference of λ ↦ log Φ(y + λv), Richardson-extrapolated
/// once.
double hessian_fd_oracle(const TKFormData& data, const std::vector<double>& y, const std::vector<double>& v,
                         double step);

/// Ratio (2π)²·Q(v) / FD(v) at seeded points and directions off ker Q,
/// rounded to the nearest of {1, 2}; throws std::runtime_error if neither
/// fits to 1e-4.
int calibrate_rho(const TKFormData& data, std::uint64_t seed = kDefaultSeed);

struct HessianReport {
  std::vector<double> y;
  std::vector<double> eigenvalues;  // ascending
  std::vector<std::vector<double>> kernel;
  std::vector<double> angles;  // principal angles between kernel and p(h), radians
  double max_angle = 0;
  bool psd = true;
  double fd_error = 0;
  bool passes = true;
};

HessianReport kernel_check(const TKFormData& data, const std::vector<double>& y,
                           const std::vector<RationalVector>& pH, const Tolerances& tol = {},
                           std::uint64_t seed = kDefaultSeed);

/// max over seeded points of |log Φ_σ1 - log Φ_σ2 + 2π<κ(b_σ1 - b_σ2), y>|.
double cocycle_check(const TKFormData& first, const TKFormData& second, std::size_t samples,
                     std::uint64_t seed = kDefaultSeed);

/// Seeded points in [-1, 1]^dim.
std::vector<std::vector<double>> sample_orbit_points(std::size_t dim, std::size_t count, std::uint64_t seed);

struct TKPoint {
  std::vector<double> y;
  bool psd = true;
  std::size_t kernel_dim = 0;
  double max_angle = 0;
  double fd_error = 0;
  bool passes = true;
};

struct TKReport {
  std::vector<TKPoint> pointwise;
  bool psd = true;
  std::size_t kernel_dim = 0;  // common value; mismatches fail the report
  double max_angle = 0;
  double max_cocycle_dev = 0;
  double fd_error = 0;
  Integer kappa = 1;
  bool passes = true;
};

/// Kernel checks at `points` seeded points (chart 0) and cocycle checks over
/// all chart pairs, with one global smoothness scale for smoothness class k.
TKReport tk_check(const TKSetup& setup, std::size_t points, std::uint64_t seed = kDefaultSeed,
                  const Tolerances& tol = {}, std::size_t k = 2, bool parallel = false);

}  // namespace maxtorus
