#include "maxtorus/cone.hpp"

#include "maxtorus/lattice.hpp"
#include "maxtorus/linalg.hpp"
#include "maxtorus/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxtorus {

bool cone_is_strictly_convex(const ConeGenerators& g) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (k == 0) return true;
  // a line exists iff 0 = Σ λ_i g_i with λ >= 0, Σ λ_i = 1
  LinearProgram lp;
  lp.variables = k;
  for (std::size_t j = 0; j < n; ++j) lp.add(g.column_vector(j), Relation::Equal, 0);
  lp.add(RationalVector(k, 1), Relation::Equal, 1);
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector e(k);
    e[i] = 1;
    lp.add(std::move(e), Relation::GreaterEqual, 0);
  }
  return !lp_feasible(lp);
}

bool cone_is_simplicial(const ConeGenerators& g) { return rank(g) == g.rows(); }

bool cone_is_regular(const ConeGenerators& g) {
  if (!cone_is_simplicial(g)) return false;
  const IntegerVector inv = smith_invariants(to_integer(g));
  return std::all_of(inv.begin(), inv.end(), [](const Integer& d) { return d == 1; });
}

bool cone_contains(const ConeGenerators& g, const RationalVector& x) {
  if (x.size() != g.cols()) throw std::invalid_argument("cone_contains: dimension mismatch");
  const std::size_t k = g.rows();
  LinearProgram lp;
  lp.variables = k;
  for (std::size_t j = 0; j < g.cols(); ++j) lp.add(g.column_vector(j), Relation::Equal, x[j]);
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector e(k);
    e[i] = 1;
    lp.add(std::move(e), Relation::GreaterEqual, 0);
  }
  return lp_feasible(lp);
}

std::vector<RationalVector> irredundant_generators(std::vector<RationalVector> vs, std::size_t dim) {
  for (std::size_t i = 0; i < vs.size();) {
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (j != i) others.push_back(vs[j]);
    if (cone_contains(RationalMatrix::from_rows(others, dim), vs[i])) {
      vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return vs;
}

namespace {

// homogeneous row over (x, λ): Σ coeff * var  (>= 0 or == 0)
using Row = RationalVector;

Row normalized(const Row& r) {
  const IntegerVector p = primitive_integer_vector(r);
  return Row(p.begin(), p.end());
}

bool is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Rational& v) { return sgn(v) == 0; });
}

void push_unique(std::vector<Row>& rows, Row r) {
  if (is_zero(r)) return;
  r = normalized(r);
  if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(std::move(r));
}

}  // namespace

HalfspaceDescription dual_cone(const ConeGenerators& g) {
  const std::size_t n = g.cols();
  const std::size_t k = g.rows();
  const std::size_t width = n + k;
  std::vector<Row> equalities;
  std::vector<Row> inequalities;
  for (std::size_t j = 0; j < n; ++j) {
    Row r(width);
    r[j] = 1;
    for (std::size_t i = 0; i < k; ++i) r[n + i] = -g(i, j);
    equalities.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < k; ++i) {
    Row r(width);
    r[n + i] = 1;
    inequalities.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t var = n + i;
    auto eq = std::find_if(equalities.begin(), equalities.end(),
                           [&](const Row& r) { return sgn(r[var]) != 0; });
    if (eq != equalities.end()) {
      const Row pivot = *eq;
      equalities.erase(eq);
      auto eliminate = [&](Row r) {
        const Rational f = r[var] / pivot[var];
        for (std::size_t c = 0; c < width; ++c) r[c] -= f * pivot[c];
        return r;
      };
      std::vector<Row> next_eq, next_ineq;
      for (auto& r : equalities) push_unique(next_eq, eliminate(r));
      for (auto& r : inequalities) push_unique(next_ineq, eliminate(r));
      equalities = std::move(next_eq);
      inequalities = std::move(next_ineq);
      continue;
    }
    std::vector<Row> pos, neg, next;
    for (auto& r : inequalities) {
      const int s = sgn(r[var]);
      if (s > 0) pos.push_back(r);
      else if (s < 0) neg.push_back(r);
      else push_unique(next, r);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Row r(width);
        const Rational a = p[var];
        const Rational b = -q[var];
        for (std::size_t c = 0; c < width; ++c) r[c] = b * p[c] + a * q[c];
        push_unique(next, std::move(r));
      }
    inequalities = std::move(next);
  }

  std::vector<RationalVector> normals;
  auto head = [&](const Row& r) { return RationalVector(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n)); };
  for (const auto& r : inequalities) normals.push_back(head(r));
  for (const auto& r : row_space_basis([&] {
         std::vector<RationalVector> e;
         for (const auto& r2 : equalities) e.push_back(head(r2));
         return e;
       }(), n)) {
    const IntegerVector p = primitive_integer_vector(r);
    RationalVector v(p.begin(), p.end());
    normals.push_back(v);
    for (auto& x : v) x = -x;
    normals.push_back(std::move(v));
  }
  std::vector<RationalVector> dedup;
  for (auto& v : normals)
    if (std::find(dedup.begin(), dedup.end(), v) == dedup.end()) dedup.push_back(std::move(v));
  return {n, irredundant_generators(std::move(dedup), n)};
}

}  // namespace maxtorus
