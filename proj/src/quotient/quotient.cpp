#include "maxtorus/quotient.hpp"

#include "maxtorus/lattice.hpp"
#include "maxtorus/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxtorus {

namespace {

// x = Σ (a_k + i b_k) v_k with real parameters (a, b) ∈ R^{2k}:
// re/im give Re x and Im x as m × 2k matrices.
struct Parametrization {
  RationalMatrix re, im;
};

Parametrization parametrize(const ComplexSubspace& h) {
  const std::size_t m = h.ambient(), k = h.dim();
  Parametrization p{RationalMatrix(m, 2 * k), RationalMatrix(m, 2 * k)};
  for (std::size_t t = 0; t < k; ++t) {
    const auto& v = h.basis()[t];
    for (std::size_t j = 0; j < m; ++j) {
      p.re(j, t) = v[j].re;
      p.re(j, k + t) = -v[j].im;
      p.im(j, t) = v[j].im;
      p.im(j, k + t) = v[j].re;
    }
  }
  return p;
}

std::vector<RationalVector> images(const RationalMatrix& map, const std::vector<RationalVector>& params) {
  std::vector<RationalVector> out;
  for (const auto& x : params) out.push_back(map * x);
  return out;
}

std::string format_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& u) {
  const std::size_t n = u.rows();
  const RationalMatrix ur = to_rational(u);
  RationalMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n);
    e[j] = 1;
    const auto col = solve(ur, e);
    if (!col) throw std::logic_error("unimodular_inverse: singular matrix");
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
  }
  return to_integer(inv);
}

bool saturated_full_basis(const IntegerMatrix& cols) {
  const auto inv = smith_invariants(cols);
  for (const auto& d : inv)
    if (d != 1) return false;
  return true;
}

IntegerMatrix from_columns(const std::vector<IntegerVector>& cols, std::size_t n) {
  IntegerMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

// Complement of the saturated lattice spanned by `sat` inside Z^n; standard
// basis vectors are preferred, the Smith columns are the fallback.
std::vector<IntegerVector> lattice_complement(const std::vector<IntegerVector>& sat,
                                              const std::vector<IntegerVector>& fallback,
                                              std::size_t n) {
  std::vector<IntegerVector> chosen = sat;
  for (std::size_t k = 0; k < n && chosen.size() < n; ++k) {
    IntegerVector e(n);
    e[k] = 1;
    chosen.push_back(e);
    const IntegerMatrix m = from_columns(chosen, n);
    if (rank(to_rational(m)) != chosen.size() || !saturated_full_basis(m)) chosen.pop_back();
  }
  if (chosen.size() == n) return {chosen.begin() + static_cast<std::ptrdiff_t>(sat.size()), chosen.end()};
  return fallback;
}

GaussianVector padded(const GaussianVector& v, std::size_t size) {
  GaussianVector out = v;
  out.resize(size);
  return out;
}

}  // namespace

std::vector<RationalVector> projection_p(const ComplexSubspace& h) {
  return row_space_basis(h.real_imaginary_rows().row_vectors(), h.ambient());
}

RealIntersections check_h_cap_t(const ComplexSubspace& h) {
  const auto p = parametrize(h);
  RealIntersections r;
  r.h_cap_t = row_space_basis(images(p.re, nullspace(p.im)), h.ambient());
  r.h_cap_it = row_space_basis(images(p.im, nullspace(p.re)), h.ambient());
  return r;
}

RationalMatrix quotient_map_q(std::size_t n, const std::vector<RationalVector>& pH) {
  RationalMatrix q(0, n);
  for (const auto& v : nullspace(RationalMatrix::from_rows(pH, n)))
    q.append_row(to_rational(primitive_integer_vector(v)));
  return q;
}

RationalMatrix quotient_map_q(const SymbolicSubspace& h) {
  const ComplexSubspace r = h.to_rational();
  return quotient_map_q(r.ambient(), projection_p(r));
}

Fan project_fan(const Fan& fan, const RationalMatrix& q) {
  // images are merged by direction, cones with equal images are kept once
  std::vector<IntegerVector> directions;
  RationalMatrix rays(0, q.rows());
  std::vector<std::size_t> index(fan.ray_count(), 0);
  std::vector<bool> used(fan.ray_count(), false);
  for (const auto& c : fan.max_cones)
    for (auto i : c) used[i] = true;
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    if (!used[i]) continue;
    const RationalVector image = q * fan.rays.row_vector(i);
    const IntegerVector dir = primitive_integer_vector(image);
    const auto it = std::find(directions.begin(), directions.end(), dir);
    if (it != directions.end()) {
      index[i] = static_cast<std::size_t>(it - directions.begin());
      continue;
    }
    index[i] = directions.size();
    directions.push_back(dir);
    rays.append_row(image);
  }
  std::vector<IndexSet> cones;
  for (const auto& c : fan.max_cones) {
    IndexSet s;
    for (auto i : c) s.push_back(index[i]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (std::find(cones.begin(), cones.end(), s) == cones.end()) cones.push_back(std::move(s));
  }
  return Fan::from_generators(q.rows(), std::move(rays), std::move(cones));
}

ConditionResult check_condition_b(const Fan& fan, const RationalMatrix& q, std::uint64_t seed) {
  if (q.cols() != fan.dim) throw std::invalid_argument("check_condition_b: q has wrong width");
  ConditionResult r;
  for (const auto& c : fan.max_cones) {
    const ConeGenerators g = fan.generators(c);
    if (rank(g * q.transpose()) != c.size()) {
      r.fail("COND_B_NOT_INJECTIVE", "condition (b): q is not injective on cone " + format_set(c));
      return r;
    }
  }
  if (q.rows() == 0) return r;  // every cone is the origin; R^0 is covered
  Fan projected;
  try {
    projected = project_fan(fan, q);
  } catch (const std::invalid_argument& e) {
    r.fail("COND_B_NOT_A_FAN", std::string("condition (b): projected cones do not form a fan (") + e.what() + ")");
    return r;
  }
  const auto validity = fan_validate(projected);
  if (!validity.valid) {
    const auto& issue = validity.issues.front();
    r.fail("COND_B_NOT_A_FAN", "condition (b): projected cones " + std::to_string(issue.first + 1) + " and " +
                                   std::to_string(issue.second + 1) + " overlap");
    return r;
  }
  if (!fan_is_complete(projected, seed))
    r.fail("COND_B_NOT_COMPLETE", "condition (b): projected fan not complete");
  if (projected.max_cones.size() != fan.max_cones.size())
    r.fail("COND_B_NOT_BIJECTIVE", "condition (b): distinct cones have the same image");
  return r;
}

ConditionResult check_condition_b(const Fan& fan, const ComplexSubspace& h, std::uint64_t seed) {
  if (h.ambient() != fan.dim) throw std::invalid_argument("check_condition_b: subspace and fan dimensions differ");
  return check_condition_b(fan, quotient_map_q(fan.dim, projection_p(h)), seed);
}

ConditionResult check_condition_b(const Fan& fan, const SymbolicSubspace& h, std::uint64_t seed) {
  return check_condition_b(fan, h.to_rational(), seed);
}

ConditionResult check_condition_a_I(const SimplicialComplex& k, const ComplexSubspace& h) {
  if (h.ambient() != k.vertices)
    throw std::invalid_argument("check_condition_a_I: subspace and complex dimensions differ");
  const std::size_t m = k.vertices;
  const auto p = parametrize(h);
  std::vector<IndexSet> faces = k.facets;
  if (faces.empty()) faces.push_back({});

  ConditionResult r;
  for (const auto& face : faces) {
    IndexSet out;
    for (std::size_t j = 0, f = 0; j < m; ++j) {
      if (f < face.size() && face[f] == j) {
        ++f;
        continue;
      }
      out.push_back(j);
    }
    const RationalMatrix re_out = p.re.select_rows(out), im_out = p.im.select_rows(out);

    RationalMatrix both = re_out;
    for (std::size_t i = 0; i < im_out.rows(); ++i) both.append_row(im_out.row_vector(i));
    if (both.rows() == 0) both = RationalMatrix(0, p.re.cols());
    if (!nullspace(both).empty()) {
      r.fail("COND_A_I_SUBSPACE", "condition (a): h meets the coordinate subspace of face " + format_set(face));
      continue;
    }

    const auto s = nullspace(im_out.rows() ? im_out : RationalMatrix(0, p.re.cols()));
    if (s.empty()) continue;
    const auto w = images(re_out, s);
    RationalMatrix wm(out.size(), s.size());
    for (std::size_t t = 0; t < s.size(); ++t)
      for (std::size_t i = 0; i < out.size(); ++i) wm(i, t) = w[t][i];

    for (const auto& lambda : subspace_lattice_points(w, out.size())) {
      const auto c = solve(wm, to_rational(lambda));
      if (!c) throw std::logic_error("check_condition_a_I: lattice point outside the projection");
      RationalVector params(p.re.cols());
      for (std::size_t t = 0; t < s.size(); ++t)
        for (std::size_t q = 0; q < params.size(); ++q) params[q] += (*c)[t] * s[t][q];
      const auto x_re = p.re * params, x_im = p.im * params;
      bool integral = true;
      for (std::size_t j = 0; j < m; ++j) integral = integral && sgn(x_im[j]) == 0 && is_integer(x_re[j]);
      if (!integral) {
        r.fail("COND_A_I_LATTICE",
               "condition (a): exp(h) meets the coordinate subtorus of face " + format_set(face));
        break;
      }
    }
  }
  return r;
}

namespace {

void finish_descriptor(ValidationReport& report) {
  auto& d = report.descriptor;
  d.maximality = 2 * d.dim_C_M == d.dim_T + d.max_stabilizer_dim;
  if (!d.maximality)
    report.issues.push_back({"MAXIMALITY_IDENTITY", "dim_R M != dim T + dim of maximal stabilizer"});
  report.valid = report.issues.empty();
}

void append(ValidationReport& report, const ConditionResult& c) {
  report.issues.insert(report.issues.end(), c.diagnostics.begin(), c.diagnostics.end());
}

}  // namespace

ValidationReport validate_construction_II(const Fan& fan, const ComplexSubspace& h, std::uint64_t seed) {
  if (h.ambient() != fan.dim)
    throw std::invalid_argument("validate_construction_II: subspace and fan dimensions differ");
  ValidationReport report;
  auto& d = report.descriptor;
  d.construction = Construction::II;
  d.dim_T = fan.dim;
  d.foliation_dim = h.dim();
  d.dim_C_M = fan.dim - h.dim();
  d.max_stabilizer_dim = fan.max_cone_dim();

  const auto validity = fan_validate(fan);
  if (!validity.valid) {
    for (const auto& issue : validity.issues)
      report.issues.push_back({"FAN_INVALID", issue.message});
  } else if (!fan.is_regular()) {
    report.issues.push_back({"FAN_NOT_REGULAR", "fan has a non-regular cone"});
  }

  const auto caps = check_h_cap_t(h);
  d.h_cap_t_trivial = caps.h_cap_t.empty();
  d.h_cap_it_trivial = caps.h_cap_it.empty();
  d.condition_a = d.h_cap_t_trivial;
  if (!d.h_cap_t_trivial) report.issues.push_back({"COND_A_H_CAP_T", "condition (a): h ∩ t is nonzero"});
  if (!d.h_cap_it_trivial)
    report.issues.push_back({"COND_A_P_NOT_INJECTIVE", "condition (a): p is not injective on h"});

  if (validity.valid) {
    const auto b = check_condition_b(fan, h, seed);
    d.condition_b = b.holds;
    append(report, b);
  } else {
    d.condition_b = false;
  }
  finish_descriptor(report);
  return report;
}

ValidationReport validate_construction_I(const SimplicialComplex& k, const ComplexSubspace& h,
                                         std::uint64_t seed) {
  if (h.ambient() != k.vertices)
    throw std::invalid_argument("validate_construction_I: subspace and complex dimensions differ");
  ValidationReport report;
  auto& d = report.descriptor;
  d.construction = Construction::I;
  const auto caps = check_h_cap_t(h);
  d.h_cap_t_trivial = caps.h_cap_t.empty();
  d.h_cap_it_trivial = caps.h_cap_it.empty();
  // the compact torus acting effectively is T^m / (H ∩ T^m)
  const std::size_t real_part = caps.h_cap_t.size();
  d.dim_T = k.vertices - real_part;
  d.foliation_dim = h.dim() - real_part;
  d.dim_C_M = k.vertices - h.dim();
  for (const auto& f : k.facets) d.max_stabilizer_dim = std::max(d.max_stabilizer_dim, f.size());

  const auto a = check_condition_a_I(k, h);
  d.condition_a = a.holds;
  append(report, a);
  const auto b = check_condition_b(fan_from_complex(k), h, seed);
  d.condition_b = b.holds;
  append(report, b);
  finish_descriptor(report);
  return report;
}

FoliationData canonical_foliation(const ComplexSubspace& h, const Fan* fan) {
  FoliationData f;
  f.conjugate = h.conjugate();
  std::vector<GaussianVector> all = h.basis();
  all.insert(all.end(), f.conjugate.basis().begin(), f.conjugate.basis().end());
  f.h_cap_hbar_dim = 2 * h.dim() - complex_rank(all, h.ambient());
  f.leaf_dim = h.dim();
  f.discrete = f.h_cap_hbar_dim == 0;
  if (fan) f.consistent_with_fan = 2 * f.leaf_dim + fan->max_cone_dim() == fan->dim;
  return f;
}

LiftResult cox_batyrev_lift(const Fan& fan, const ComplexSubspace& h, std::uint64_t seed) {
  const auto check = validate_construction_II(fan, h, seed);
  if (!check.valid)
    throw std::invalid_argument("cox_batyrev_lift: " + check.issues.front().message);

  const std::size_t n = fan.dim, m = fan.ray_count();
  // A: Z^m -> Z^n, columns are the rays.
  const IntegerMatrix a = to_integer(fan.rays.transpose());
  const SmithForm snf = smith_normal_form(a);
  const IntegerMatrix uinv = unimodular_inverse(snf.u);
  std::size_t rk = 0;
  while (rk < std::min(n, m) && snf.d(rk, rk) != 0) ++rk;

  std::vector<IntegerVector> sat, fallback;
  for (std::size_t j = 0; j < n; ++j) (j < rk ? sat : fallback).push_back(uinv.column_vector(j));
  const auto complement = lattice_complement(sat, fallback, n);

  LiftResult out;
  out.torus_ghosts = n - rk;
  for (std::size_t j = 0; j < rk; ++j)
    if (snf.d(j, j) > 1) out.invariants.push_back(snf.d(j, j));
  out.ghosts = out.torus_ghosts + out.invariants.size();
  const std::size_t mr = m + out.torus_ghosts, total = m + out.ghosts;

  // A_hat = [A | C]: Z^{m+r0} -> Z^n, surjective over Q.
  RationalMatrix a_hat(n, mr);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a_hat(i, j) = a(i, j);
    for (std::size_t j = 0; j < complement.size(); ++j) a_hat(i, m + j) = complement[j][i];
  }

  std::vector<GaussianVector> basis;
  for (const auto& v : nullspace(a_hat)) basis.push_back(padded(GaussianVector(v.begin(), v.end()), total));
  for (const auto& v : h.basis()) {
    RationalVector re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
      re[i] = v[i].re;
      im[i] = v[i].im;
    }
    const auto x = solve(a_hat, re), y = solve(a_hat, im);
    if (!x || !y) throw std::logic_error("cox_batyrev_lift: A_hat is not surjective");
    GaussianVector g(total);
    for (std::size_t j = 0; j < mr; ++j) g[j] = {(*x)[j], (*y)[j]};
    basis.push_back(std::move(g));
  }
  for (std::size_t j = 0, extra = 0; j < rk; ++j) {
    const Integer& k = snf.d(j, j);
    if (k <= 1) continue;
    GaussianVector g(total);
    for (std::size_t i = 0; i < m; ++i) g[i] = {Rational(snf.v(i, j), k), 0};
    g[mr + extra++] = {1, 0};
    basis.push_back(std::move(g));
  }

  out.complex = SimplicialComplex::make(total, underlying_complex(fan).facets);
  out.h = ComplexSubspace(total, std::move(basis));

  const auto lifted = validate_construction_I(out.complex, out.h, seed);
  if (!lifted.valid)
    throw std::logic_error("cox_batyrev_lift: lifted data rejected: " + lifted.issues.front().message);
  if (total - out.h.dim() != n - h.dim()) throw std::logic_error("cox_batyrev_lift: dimension mismatch");
  return out;
}

DivisorHypotheses divisor_hypotheses(const SimplicialComplex& k, const SymbolicSubspace& h) {
  if (h.ambient != k.vertices)
    throw std::invalid_argument("divisor_hypotheses: subspace and complex dimensions differ");
  DivisorHypotheses out;
  out.simply_connected = k.ghost_vertices().empty();

  std::vector<SymbolicVector> spanning;
  for (const auto& [re, im] : h.basis) {
    spanning.push_back(re);
    spanning.push_back(im);
  }
  const RationalMatrix coeffs =
      spanning.empty() ? RationalMatrix(0, h.ambient) : symbolic_coefficient_matrix(spanning);
  const RationalMatrix sized = coeffs.rows() ? coeffs : RationalMatrix(0, h.ambient);
  out.generic_annihilator = nullspace(sized).empty();
  if (!out.generic_annihilator && h.is_rational())
    out.note = "rational data: p(h) is a proper rational subspace, so a nonzero rational annihilator "
               "exists; declare irrational constants to test genericity";
  return out;
}

DivisorHypotheses divisor_hypotheses(const SimplicialComplex& k, const ComplexSubspace& h) {
  return divisor_hypotheses(k, SymbolicSubspace::from_rational(h));
}

}  // namespace maxtorus
