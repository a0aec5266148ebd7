#include "maxtorus/fan.hpp"

#include "maxtorus/linalg.hpp"
#include "maxtorus/lp.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

namespace maxtorus {

namespace {

IndexSet canonical(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool subset_of(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<IndexSet> canonical_cones(std::vector<IndexSet> cones, std::size_t bound,
                                      const char* what) {
  for (auto& c : cones) {
    c = canonical(std::move(c));
    for (auto i : c)
      if (i >= bound) throw std::invalid_argument(std::string(what) + ": index out of range");
  }
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = 0; j < cones.size(); ++j)
      if (i != j && subset_of(cones[i], cones[j]))
        throw std::invalid_argument(std::string(what) + ": a maximal face is contained in another");
  return cones;
}

IndexSet intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::make(std::size_t vertices, std::vector<IndexSet> faces) {
  for (auto& f : faces) f = canonical(std::move(f));
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<IndexSet> maximal;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < faces.size() && !contained; ++j)
      contained = i != j && faces[i].size() < faces[j].size() && subset_of(faces[i], faces[j]);
    if (!contained) maximal.push_back(faces[i]);
  }
  for (const auto& f : maximal)
    for (auto v : f)
      if (v >= vertices) throw std::invalid_argument("simplicial complex: vertex out of range");
  return {vertices, std::move(maximal)};
}

bool SimplicialComplex::is_face(const IndexSet& s) const {
  const IndexSet c = canonical(s);
  if (c.empty()) return true;
  return std::any_of(facets.begin(), facets.end(), [&](const IndexSet& f) { return subset_of(c, f); });
}

std::vector<std::size_t> SimplicialComplex::ghost_vertices() const {
  std::vector<bool> used(vertices, false);
  for (const auto& f : facets)
    for (auto v : f) used[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices; ++v)
    if (!used[v]) out.push_back(v);
  return out;
}

Fan Fan::from_generators(std::size_t dim, RationalMatrix rays, std::vector<IndexSet> cones) {
  if (rays.rows() > 0 && rays.cols() != dim) throw std::invalid_argument("fan: ray dimension mismatch");
  if (rays.rows() == 0) rays = RationalMatrix(0, dim);
  for (std::size_t i = 0; i < rays.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < dim && zero; ++j) zero = sgn(rays(i, j)) == 0;
    if (zero) throw std::invalid_argument("fan: zero ray " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < rays.rows(); ++i)
    for (std::size_t j = i + 1; j < rays.rows(); ++j)
      if (rays.row_vector(i) == rays.row_vector(j))
        throw std::invalid_argument("fan: repeated ray " + std::to_string(j + 1));
  Fan f;
  f.dim = dim;
  f.rays = std::move(rays);
  f.max_cones = canonical_cones(std::move(cones), f.rays.rows(), "fan");
  return f;
}

Fan Fan::from_integer_rays(std::size_t dim, const std::vector<IntegerVector>& rays,
                           std::vector<IndexSet> cones, std::vector<std::string>* warnings) {
  RationalMatrix m(0, dim);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != dim) throw std::invalid_argument("fan: ray dimension mismatch");
    const Integer g = gcd_of(rays[i]);
    if (g > 1) {
      if (warnings) {
        warnings->push_back("ray " + std::to_string(i + 1) + " is not primitive; divided by " +
                            g.get_str());
      }
      IntegerVector p = rays[i];
      for (auto& x : p) x /= g;
      m.append_row(to_rational(p));
    } else {
      m.append_row(to_rational(rays[i]));
    }
  }
  return from_generators(dim, std::move(m), std::move(cones));
}

ConeGenerators Fan::generators(const IndexSet& cone) const {
  return rays.select_rows(cone);
}

bool Fan::is_simplicial() const {
  return std::all_of(max_cones.begin(), max_cones.end(),
                     [&](const IndexSet& c) { return cone_is_simplicial(generators(c)); });
}

bool Fan::is_regular() const {
  return std::all_of(max_cones.begin(), max_cones.end(),
                     [&](const IndexSet& c) { return cone_is_regular(generators(c)); });
}

std::size_t Fan::max_cone_dim() const {
  std::size_t d = 0;
  for (const auto& c : max_cones) d = std::max(d, rank(generators(c)));
  return d;
}

std::optional<RationalVector> separating_functional(const Fan& fan, const IndexSet& a,
                                                    const IndexSet& b) {
  const IndexSet shared = intersection(a, b);
  LinearProgram lp;
  lp.variables = fan.dim;
  for (auto i : shared) lp.add(fan.rays.row_vector(i), Relation::Equal, 0);
  for (auto i : difference(a, shared)) lp.add(fan.rays.row_vector(i), Relation::GreaterEqual, 1);
  for (auto i : difference(b, shared)) {
    RationalVector r = fan.rays.row_vector(i);
    for (auto& x : r) x = -x;
    lp.add(std::move(r), Relation::GreaterEqual, 1);
  }
  const LpResult res = lp_solve(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.point;
}

FanValidity fan_validate(const Fan& fan) {
  FanValidity report;
  for (std::size_t i = 0; i < fan.max_cones.size(); ++i) {
    if (!cone_is_strictly_convex(fan.generators(fan.max_cones[i]))) {
      report.issues.push_back({"CONE_NOT_STRICTLY_CONVEX", i, i,
                               "maximal cone " + std::to_string(i + 1) + " contains a line"});
    }
  }
  for (std::size_t i = 0; i < fan.max_cones.size(); ++i)
    for (std::size_t j = i + 1; j < fan.max_cones.size(); ++j) {
      if (!separating_functional(fan, fan.max_cones[i], fan.max_cones[j])) {
        report.issues.push_back({"BAD_INTERSECTION", i, j,
                                 "maximal cones " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1) +
                                     " do not meet in the cone on their shared rays"});
      }
    }
  std::sort(report.issues.begin(), report.issues.end(), [](const FanIssue& x, const FanIssue& y) {
    return std::tie(x.first, x.second, x.code) < std::tie(y.first, y.second, y.code);
  });
  report.valid = report.issues.empty();
  return report;
}

bool wall_condition_complete(const Fan& fan) {
  const std::size_t n = fan.dim;
  if (n == 0) return true;
  if (fan.max_cones.empty()) return false;
  for (const auto& c : fan.max_cones)
    if (c.size() != n || rank(fan.generators(c)) != n) return false;
  std::map<IndexSet, std::vector<std::size_t>> walls;
  for (std::size_t i = 0; i < fan.max_cones.size(); ++i) {
    const auto& c = fan.max_cones[i];
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      IndexSet facet;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (k != drop) facet.push_back(c[k]);
      walls[facet].push_back(i);
    }
  }
  std::vector<std::vector<std::size_t>> adjacent(fan.max_cones.size());
  for (const auto& [facet, owners] : walls) {
    if (owners.size() != 2) return false;
    adjacent[owners[0]].push_back(owners[1]);
    adjacent[owners[1]].push_back(owners[0]);
  }
  std::vector<bool> seen(fan.max_cones.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adjacent[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool fan_is_complete(const Fan& fan, std::uint64_t seed) {
  if (!fan_validate(fan).valid) throw std::domain_error("not a valid fan");
  if (!fan.is_simplicial()) throw std::domain_error("completeness check requires a simplicial fan");
  const bool complete = wall_condition_complete(fan);
  if (complete && !sampled_support_covers(fan, 2 * fan.dim + 1, seed))
    throw std::logic_error("fan_is_complete: sampling cross-check disagrees with wall condition");
  return complete;
}

std::optional<std::size_t> point_in_support(const Fan& fan, const RationalVector& x) {
  if (x.size() != fan.dim) throw std::invalid_argument("point_in_support: dimension mismatch");
  const bool origin = std::all_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) == 0; });
  for (std::size_t i = 0; i < fan.max_cones.size(); ++i) {
    if (origin) return i;
    const ConeGenerators g = fan.generators(fan.max_cones[i]);
    if (g.rows() == 0) continue;
    if (!cone_is_simplicial(g)) {
      if (cone_contains(g, x)) return i;
      continue;
    }
    const auto lambda = solve(g.transpose(), x);
    if (lambda && std::all_of(lambda->begin(), lambda->end(),
                              [](const Rational& v) { return sgn(v) >= 0; }))
      return i;
  }
  return std::nullopt;
}

std::vector<RationalVector> sample_points(std::size_t dim, std::size_t count, std::uint64_t seed,
                                          long range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-range, range);
  std::vector<RationalVector> out;
  while (out.size() < count) {
    RationalVector p(dim);
    bool zero = true;
    for (auto& x : p) {
      x = coord(rng);
      zero = zero && sgn(x) == 0;
    }
    if (!zero || dim == 0) out.push_back(std::move(p));
  }
  return out;
}

bool sampled_support_covers(const Fan& fan, std::size_t count, std::uint64_t seed) {
  for (const auto& p : sample_points(fan.dim, count, seed))
    if (!point_in_support(fan, p)) return false;
  return true;
}

Fan fan_from_complex(const SimplicialComplex& complex) {
  const std::size_t m = complex.vertices;
  std::vector<bool> used(m, false);
  for (const auto& f : complex.facets)
    for (auto v : f) used[v] = true;
  std::vector<std::size_t> ray_of(m, 0);
  RationalMatrix rays(0, m);
  for (std::size_t v = 0; v < m; ++v) {
    if (!used[v]) continue;
    ray_of[v] = rays.rows();
    RationalVector e(m);
    e[v] = 1;
    rays.append_row(e);
  }
  std::vector<IndexSet> cones;
  for (const auto& f : complex.facets) {
    IndexSet c;
    for (auto v : f) c.push_back(ray_of[v]);
    cones.push_back(std::move(c));
  }
  return Fan::from_generators(m, std::move(rays), std::move(cones));
}

SimplicialComplex underlying_complex(const Fan& fan) {
  if (!fan.is_simplicial()) throw std::domain_error("underlying_complex: fan is not simplicial");
  return SimplicialComplex::make(fan.ray_count(), fan.max_cones);
}

}  // namespace maxtorus
