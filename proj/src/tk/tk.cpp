#include "maxtorus/tk.hpp"

#include "maxtorus/linalg.hpp"
#include "maxtorus/simd.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <stdexcept>

namespace maxtorus {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::vector<double> to_doubles(const RationalVector& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

// -2π<w_τ, y> for every character.
std::vector<double> exponents(const TKFormData& data, const std::vector<double>& y) {
  if (y.size() != data.dim) throw std::invalid_argument("tk: point has wrong dimension");
  std::vector<double> s(data.characters.size());
  simd::dispatch().matvec(data.w.data(), s.size(), data.dim, y.data(), s.data());
  for (auto& x : s) x *= -kTwoPi;
  return s;
}

double log_sum_exp(const std::vector<double>& s) {
  const double top = *std::max_element(s.begin(), s.end());
  double sum = 0;
  for (double x : s) sum += std::exp(x - top);
  return top + std::log(sum);
}

// Step adapted to the fastest exponential rate along v.
double default_step(const TKFormData& data, const std::vector<double>& v) {
  std::vector<double> rates(data.characters.size());
  simd::dispatch().matvec(data.w.data(), rates.size(), data.dim, v.data(), rates.data());
  double spread = 0;
  for (double r : rates) spread = std::max(spread, std::abs(r - rates.front()));
  return 1e-2 / (1 + kTwoPi * spread);
}

Eigen::MatrixXd to_eigen(const std::vector<double>& h, std::size_t n) {
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = h[i * n + j];
  return m;
}

Eigen::MatrixXd orthonormal_basis(const std::vector<RationalVector>& vs, std::size_t n) {
  if (vs.empty()) return Eigen::MatrixXd(n, 0);
  Eigen::MatrixXd a(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) a(i, j) = vs[j][i].get_d();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, vs.size());
}

// Seeded unit directions orthogonal to the columns of p.
std::vector<std::vector<double>> transverse_directions(const Eigen::MatrixXd& p, std::size_t n, std::size_t count,
                                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<std::vector<double>> out;
  if (static_cast<std::size_t>(p.cols()) >= n) return out;
  while (out.size() < count) {
    Eigen::VectorXd v(n);
    for (std::size_t i = 0; i < n; ++i) v(i) = normal(rng);
    if (p.cols() > 0) v -= p * (p.transpose() * v);
    const double norm = v.norm();
    if (norm < 1e-6) continue;
    v /= norm;
    out.emplace_back(v.data(), v.data() + n);
  }
  return out;
}

double fd_relative_error(const TKFormData& data, const std::vector<double>& h, const std::vector<double>& y,
                         const std::vector<double>& v) {
  const double q = quadratic_form(h, v);
  const double fd = hessian_fd_oracle(data, y, v, default_step(data, v));
  return std::abs(kPairFactor * fd / (kTwoPi * kTwoPi) - q) / std::abs(q);
}

}  // namespace

TKSetup prepare_tk(const Fan& fan, const ComplexSubspace& h, const std::optional<RationalVector>& b,
                   std::uint64_t seed) {
  const auto report = validate_construction_II(fan, h, seed);
  if (!report.valid) throw std::invalid_argument(report.issues.front().message);

  TKSetup s;
  // drop rays outside every cone so that ray indices agree with q(Σ)
  std::vector<bool> used(fan.ray_count(), false);
  for (const auto& c : fan.max_cones)
    for (auto i : c) used[i] = true;
  std::vector<std::size_t> index(fan.ray_count(), 0);
  RationalMatrix rays(0, fan.dim);
  for (std::size_t i = 0; i < fan.ray_count(); ++i)
    if (used[i]) {
      index[i] = rays.rows();
      rays.append_row(fan.rays.row_vector(i));
    }
  std::vector<IndexSet> cones;
  for (const auto& c : fan.max_cones) {
    IndexSet t;
    for (auto i : c) t.push_back(index[i]);
    cones.push_back(t);
  }
  s.fan = Fan::from_generators(fan.dim, rays, cones);
  s.h = h;
  s.pH = projection_p(h);
  s.q = quotient_map_q(fan.dim, s.pH);
  s.projected = project_fan(s.fan, s.q);

  if (b) {
    if (b->size() != s.projected.ray_count()) throw std::invalid_argument("certificate has wrong length");
    const auto check = check_certificate(s.projected, *b, NormalityMode::WeaklyNormal);
    if (!check.ok) throw std::domain_error("certificate rejected: " + check.violations.front().code);
    s.certificate = {*b, fan_vertices(s.projected, *b)};
  } else {
    auto cert = decide_weakly_normal(s.projected, seed);
    if (!cert) throw std::domain_error("q(Σ) is not weakly normal");
    s.certificate = std::move(*cert);
  }
  return s;
}

TKFormData build_tk_data(const TKSetup& setup, std::size_t chart, const Integer& kappa) {
  if (chart >= setup.fan.max_cones.size()) throw std::out_of_range("build_tk_data: chart index");
  if (kappa <= 0) throw std::invalid_argument("build_tk_data: kappa must be positive");
  TKFormData d;
  d.chart = chart;
  d.cone = setup.fan.max_cones[chart];
  d.kappa = kappa;
  d.dim = setup.fan.dim;

  RationalVector rhs;
  for (auto i : d.cone) rhs.push_back(setup.certificate.b[i]);
  const auto b_sigma = d.cone.empty() ? std::optional<RationalVector>(RationalVector(d.dim))
                                      : min_norm_solution(setup.fan.generators(d.cone), rhs);
  if (!b_sigma) throw std::domain_error("build_tk_data: b_sigma system is infeasible");
  d.b_sigma = *b_sigma;

  const RationalMatrix qt = setup.q.transpose();
  for (const auto& u : setup.certificate.vertices) {
    RationalVector w = qt * u;
    for (std::size_t j = 0; j < d.dim; ++j) w[j] = kappa * (w[j] + d.b_sigma[j]);
    const auto wf = to_doubles(w);
    d.w.insert(d.w.end(), wf.begin(), wf.end());
    d.characters.push_back(std::move(w));
  }
  return d;
}

Integer choose_smoothness_scale(const std::vector<Rational>& pairings, std::size_t k) {
  Integer kappa = 1;
  for (const auto& p : pairings) {
    if (sgn(p) < 0) throw std::domain_error("character outside dual cone");
    if (sgn(p) == 0) continue;
    const Rational need = Rational(static_cast<unsigned long>(k)) / p;
    Integer c = need.get_num() / need.get_den();
    if (c * need.get_den() < need.get_num()) ++c;
    kappa = std::max(kappa, c);
  }
  return kappa;
}

Integer choose_smoothness_scale(const TKSetup& setup, const TKFormData& data, std::size_t k) {
  std::vector<Rational> pairings;
  for (const auto& w : data.characters)
    for (auto i : data.cone) pairings.push_back(dot(w, setup.fan.rays.row_vector(i)) / data.kappa);
  return choose_smoothness_scale(pairings, k);
}

double log_phi(const TKFormData& data, const std::vector<double>& y) {
  if (data.characters.empty()) throw std::domain_error("log_phi: no characters");
  return log_sum_exp(exponents(data, y));
}

double evaluate_phi(const TKFormData& data, const std::vector<double>& y) { return std::exp(log_phi(data, y)); }

std::vector<double> hessian_at(const TKFormData& data, const std::vector<double>& y) {
  auto s = exponents(data, y);
  const double lse = log_sum_exp(s);
  for (auto& x : s) x = std::exp(x - lse);  // χ_τ / Φ
  std::vector<double> h(data.dim * data.dim);
  simd::dispatch().pair_hessian(data.w.data(), s.data(), s.size(), data.dim, h.data());
  for (std::size_t i = 0; i < data.dim; ++i)
    for (std::size_t j = 0; j < i; ++j) h[i * data.dim + j] = h[j * data.dim + i] = (h[i * data.dim + j] + h[j * data.dim + i]) / 2;
  return h;
}

double quadratic_form(const std::vector<double>& hessian, const std::vector<double>& v) {
  const std::size_t n = v.size();
  double q = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q += v[i] * hessian[i * n + j] * v[j];
  return q;
}

double hessian_fd_oracle(const TKFormData& data, const std::vector<double>& y, const std::vector<double>& v,
                         double step) {
  if (step <= 0) throw std::invalid_argument("hessian_fd_oracle: step must be positive");
  // log Φ(y + λv) = log Φ(y) + λ r̄ + g(λ) with g(λ) = log Σ p_τ e^{λ(r_τ - r̄)}, r̄ = Σ p_τ r_τ;
  // the affine part has no second derivative and is dropped before differencing
  auto p = exponents(data, y);
  const double lse = log_sum_exp(p);
  for (auto& x : p) x = std::exp(x - lse);
  auto r = exponents(data, v);
  double mean = 0;
  for (std::size_t t = 0; t < r.size(); ++t) mean += p[t] * r[t];
  for (auto& x : r) x -= mean;
  const auto g = [&](double lambda) {
    double s = 0;
    for (std::size_t t = 0; t < r.size(); ++t) s += p[t] * std::expm1(lambda * r[t]);
    return std::log1p(s);
  };
  const auto second = [&](double h) { return (g(h) + g(-h)) / (h * h); };
  return (4 * second(step / 2) - second(step)) / 3;
}

int calibrate_rho(const TKFormData& data, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst1 = 0, worst2 = 0;
  int samples = 0;
  for (const auto& y : sample_orbit_points(data.dim, 5, seed)) {
    const auto h = hessian_at(data, y);
    double trace = 0;
    for (std::size_t i = 0; i < data.dim; ++i) trace += h[i * data.dim + i];
    for (int t = 0; t < 5; ++t) {
      std::vector<double> v(data.dim);
      double norm = 0;
      for (auto& x : v) {
        x = normal(rng);
        norm += x * x;
      }
      for (auto& x : v) x /= std::sqrt(norm);
      const double q = quadratic_form(h, v);
      if (q <= 1e-3 * trace) continue;
      const double ratio = kTwoPi * kTwoPi * q / hessian_fd_oracle(data, y, v, default_step(data, v));
      worst1 = std::max(worst1, std::abs(ratio - 1));
      worst2 = std::max(worst2, std::abs(ratio - 2) / 2);
      ++samples;
    }
  }
  if (samples == 0) throw std::runtime_error("calibrate_rho: Hessian vanishes at every sample");
  if (worst2 < 1e-4) return 2;
  if (worst1 < 1e-4) return 1;
  throw std::runtime_error("calibrate_rho: ratio is neither 1 nor 2");
}

HessianReport kernel_check(const TKFormData& data, const std::vector<double>& y,
                           const std::vector<RationalVector>& pH, const Tolerances& tol, std::uint64_t seed) {
  const std::size_t n = data.dim;
  HessianReport r;
  r.y = y;
  const auto h = hessian_at(data, y);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(to_eigen(h, n));
  const Eigen::VectorXd values = eig.eigenvalues();
  r.eigenvalues.assign(values.data(), values.data() + n);
  const double top = n ? values.cwiseAbs().maxCoeff() : 0;
  r.psd = n == 0 || values.minCoeff() >= -tol.kernel * top;

  std::vector<Eigen::Index> kernel_columns;
  for (std::size_t i = 0; i < n; ++i)
    if (top == 0 || std::abs(values(i)) <= tol.kernel * top) kernel_columns.push_back(static_cast<Eigen::Index>(i));
  Eigen::MatrixXd k(n, kernel_columns.size());
  for (std::size_t j = 0; j < kernel_columns.size(); ++j) k.col(j) = eig.eigenvectors().col(kernel_columns[j]);
  for (std::size_t j = 0; j < kernel_columns.size(); ++j)
    r.kernel.emplace_back(k.col(j).data(), k.col(j).data() + n);

  const Eigen::MatrixXd p = orthonormal_basis(pH, n);
  const bool dims_match = kernel_columns.size() == pH.size();
  if (dims_match && !pH.empty()) {
    // sin θ_i are the singular values of (I - PP^T) K
    const Eigen::MatrixXd residual = k - p * (p.transpose() * k);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
    for (Eigen::Index i = svd.singularValues().size(); i-- > 0;)
      r.angles.push_back(std::asin(std::min(1.0, svd.singularValues()(i))));
    r.max_angle = r.angles.empty() ? 0 : r.angles.back();
  } else if (!dims_match) {
    r.max_angle = std::numbers::pi / 2;
  }

  if (top > 0) {
    auto directions = transverse_directions(p, n, 3, seed);
    if (n > pH.size()) directions.emplace_back(eig.eigenvectors().col(n - 1).data(), eig.eigenvectors().col(n - 1).data() + n);
    for (const auto& v : directions) r.fd_error = std::max(r.fd_error, fd_relative_error(data, h, y, v));
  }
  r.passes = r.psd && dims_match && r.max_angle < tol.angle && r.fd_error < tol.fd &&
             !(top == 0 && pH.size() < n);
  return r;
}

double cocycle_check(const TKFormData& first, const TKFormData& second, std::size_t samples, std::uint64_t seed) {
  if (first.dim != second.dim) throw std::invalid_argument("cocycle_check: dimension mismatch");
  RationalVector shift(first.dim);
  for (std::size_t j = 0; j < first.dim; ++j)
    shift[j] = first.kappa * first.b_sigma[j] - second.kappa * second.b_sigma[j];
  const auto sf = to_doubles(shift);
  double worst = 0;
  for (const auto& y : sample_orbit_points(first.dim, samples, seed)) {
    double pairing = 0;
    for (std::size_t j = 0; j < y.size(); ++j) pairing += sf[j] * y[j];
    worst = std::max(worst, std::abs(log_phi(first, y) - log_phi(second, y) + kTwoPi * pairing));
  }
  return worst;
}

std::vector<std::vector<double>> sample_orbit_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1, 1);
  std::vector<std::vector<double>> out(count, std::vector<double>(dim));
  for (auto& y : out)
    for (auto& x : y) x = coord(rng);
  return out;
}

TKReport tk_check(const TKSetup& setup, std::size_t points, std::uint64_t seed, const Tolerances& tol,
                  std::size_t k, bool parallel) {
  TKReport r;
  const std::size_t charts = setup.fan.max_cones.size();
  for (std::size_t c = 0; c < charts; ++c)
    r.kappa = std::max(r.kappa, choose_smoothness_scale(setup, build_tk_data(setup, c), k));
  std::vector<TKFormData> data;
  for (std::size_t c = 0; c < charts; ++c) data.push_back(build_tk_data(setup, c, r.kappa));

  const auto ys = sample_orbit_points(setup.fan.dim, points, seed);
  r.pointwise.resize(ys.size());
  const auto run = [&](std::size_t i) {
    const auto h = kernel_check(data.front(), ys[i], setup.pH, tol, seed + i);
    r.pointwise[i] = {ys[i], h.psd, h.kernel.size(), h.max_angle, h.fd_error, h.passes};
  };
  if (parallel) {
    std::vector<std::future<void>> jobs;
    for (std::size_t i = 0; i < ys.size(); ++i) jobs.push_back(std::async(std::launch::async, run, i));
    for (auto& j : jobs) j.get();
  } else {
    for (std::size_t i = 0; i < ys.size(); ++i) run(i);
  }

  r.kernel_dim = r.pointwise.empty() ? 0 : r.pointwise.front().kernel_dim;
  for (const auto& p : r.pointwise) {
    r.psd = r.psd && p.psd;
    r.max_angle = std::max(r.max_angle, p.max_angle);
    r.fd_error = std::max(r.fd_error, p.fd_error);
    r.passes = r.passes && p.passes && p.kernel_dim == r.kernel_dim;
  }
  for (std::size_t a = 0; a < charts; ++a)
    for (std::size_t b = a + 1; b < charts; ++b)
      r.max_cocycle_dev = std::max(r.max_cocycle_dev, cocycle_check(data[a], data[b], 50, seed));
  r.passes = r.passes && r.max_cocycle_dev < tol.cocycle;
  return r;
}

}  // namespace maxtorus
