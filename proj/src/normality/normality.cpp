#include "maxtorus/normality.hpp"

#include "maxtorus/linalg.hpp"
#include "maxtorus/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxtorus {

namespace {

bool contains(const IndexSet& s, std::size_t i) { return std::binary_search(s.begin(), s.end(), i); }

Rational form(const Fan& fan, std::size_t i, const RationalVector& u, const RationalVector& b) {
  return dot(fan.rays.row_vector(i), u) + b[i];
}

void require_decidable(const Fan& fan, std::uint64_t seed) {
  if (!fan.is_simplicial()) throw std::domain_error("normality requires a simplicial fan");
  if (!fan_is_complete(fan, seed)) throw std::domain_error("normality requires a complete fan");
}

// Row r over b with r·b = <v_i, u_σ(b)> + b_i, where u_σ(b) = -V_σ^{-1} b_σ.
RationalVector form_row(const Fan& fan, const IndexSet& cone, std::size_t i, std::size_t width) {
  const auto lambda = solve(fan.generators(cone).transpose(), fan.rays.row_vector(i));
  if (!lambda) throw std::domain_error("normality: ray outside the span of a maximal cone");
  RationalVector row(width);
  row[i] = 1;
  for (std::size_t j = 0; j < cone.size(); ++j) row[cone[j]] -= (*lambda)[j];
  return row;
}

NormalityCertificate certify(const Fan& fan, RationalVector b, NormalityMode mode) {
  b.resize(fan.ray_count());
  NormalityCertificate c{b, fan_vertices(fan, b)};
  if (!check_certificate(fan, c.b, mode).ok)
    throw std::logic_error("normality: LP solution failed certificate verification");
  return c;
}

}  // namespace

std::vector<RationalVector> fan_vertices(const Fan& fan, const RationalVector& b) {
  if (b.size() != fan.ray_count()) throw std::invalid_argument("fan_vertices: b has wrong length");
  std::vector<RationalVector> out;
  for (const auto& cone : fan.max_cones) {
    if (cone.size() != fan.dim) throw std::domain_error("fan_vertices: maximal cone is not full-dimensional");
    RationalVector rhs;
    for (auto i : cone) rhs.push_back(-b[i]);
    const ConeGenerators g = fan.generators(cone);
    if (rank(g) != fan.dim) throw std::domain_error("fan_vertices: singular vertex system");
    out.push_back(*solve(g, rhs));
  }
  return out;
}

CertificateCheck check_certificate(const Fan& fan, const RationalVector& b, NormalityMode mode) {
  if (!fan.is_simplicial()) throw std::domain_error("check_certificate: fan is not simplicial");
  const auto vertices = fan_vertices(fan, b);
  CertificateCheck r;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    for (std::size_t i = 0; i < fan.ray_count(); ++i) {
      const Rational value = form(fan, i, vertices[c], b);
      if (sgn(value) < 0) {
        r.violations.push_back({"NEGATIVE_FORM", c, i, value});
      } else if (mode == NormalityMode::Normal && sgn(value) == 0 && !contains(fan.max_cones[c], i)) {
        r.violations.push_back({"ZERO_OFF_CONE", c, i, value});
      }
    }
  }
  if (mode == NormalityMode::WeaklyNormal) {
    // maximize t with <v_i, u> + b_i >= t, t <= 1; full-dimensional iff t > 0
    const std::size_t n = fan.dim;
    LinearProgram lp;
    lp.variables = n + 1;
    lp.objective.assign(n + 1, 0);
    lp.objective[n] = 1;
    for (std::size_t i = 0; i < fan.ray_count(); ++i) {
      RationalVector row = fan.rays.row_vector(i);
      row.push_back(-1);
      lp.add(row, Relation::GreaterEqual, -b[i]);
    }
    RationalVector cap(n + 1);
    cap[n] = -1;
    lp.add(cap, Relation::GreaterEqual, -1);
    const auto res = lp_solve(lp);
    if (res.status != LpStatus::Optimal || sgn(res.value) <= 0)
      r.violations.push_back({"NOT_FULL_DIMENSIONAL", 0, 0, res.status == LpStatus::Optimal ? res.value : Rational(0)});
  }
  r.ok = r.violations.empty();
  return r;
}

std::optional<NormalityCertificate> decide_normal(const Fan& fan, std::uint64_t seed) {
  require_decidable(fan, seed);
  const std::size_t m = fan.ray_count();
  LinearProgram lp;
  lp.variables = m;
  for (const auto& cone : fan.max_cones)
    for (std::size_t i = 0; i < m; ++i)
      if (!contains(cone, i)) lp.add(form_row(fan, cone, i, m), Relation::GreaterEqual, 1);
  const auto res = lp_solve(lp);
  if (res.status == LpStatus::Infeasible) return std::nullopt;
  return certify(fan, res.point, NormalityMode::Normal);
}

std::optional<NormalityCertificate> decide_weakly_normal(const Fan& fan, std::uint64_t seed) {
  require_decidable(fan, seed);
  const std::size_t m = fan.ray_count(), n = fan.dim;
  // variables (b, u*)
  LinearProgram lp;
  lp.variables = m + n;
  for (const auto& cone : fan.max_cones)
    for (std::size_t i = 0; i < m; ++i)
      if (!contains(cone, i)) lp.add(form_row(fan, cone, i, m + n), Relation::GreaterEqual, 0);
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(m + n);
    row[i] = 1;
    for (std::size_t j = 0; j < n; ++j) row[m + j] = fan.rays(i, j);
    lp.add(row, Relation::GreaterEqual, 1);
  }
  const auto res = lp_solve(lp);
  if (res.status == LpStatus::Infeasible) return std::nullopt;
  return certify(fan, res.point, NormalityMode::WeaklyNormal);
}

}  // namespace maxtorus
