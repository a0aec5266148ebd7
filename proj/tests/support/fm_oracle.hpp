#pragma once

// Fourier-Motzkin feasibility of {a·x >= c}: an LP-free oracle for small
// systems.

#include "maxtorus/lp.hpp"
#include "maxtorus/rational.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace maxtorus::testing {

struct Inequality {
  RationalVector a;  // a·x >= c
  Rational c;
  friend bool operator<(const Inequality& x, const Inequality& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.c < y.c;
  }
};

inline Inequality normalized(Inequality q) {
  Rational scale = 0;
  for (const auto& v : q.a)
    if (sgn(v) != 0) {
      scale = abs(v);
      break;
    }
  if (sgn(scale) == 0) return q;
  for (auto& v : q.a) v /= scale;
  q.c /= scale;
  return q;
}

inline bool fm_feasible(std::vector<Inequality> system, std::size_t variables) {
  std::vector<bool> done(variables, false);
  for (std::size_t step = 0; step < variables; ++step) {
    // eliminate the variable producing the fewest combinations
    std::size_t k = variables, best = 0;
    for (std::size_t j = 0; j < variables; ++j) {
      if (done[j]) continue;
      std::size_t p = 0, n = 0;
      for (const auto& q : system) (sgn(q.a[j]) > 0 ? p : sgn(q.a[j]) < 0 ? n : p) += sgn(q.a[j]) != 0;
      if (k == variables || p * n < best) {
        k = j;
        best = p * n;
      }
    }
    done[k] = true;
    std::vector<Inequality> pos, neg;
    std::set<Inequality> next;
    for (auto& q : system) {
      const int s = sgn(q.a[k]);
      if (s > 0) pos.push_back(q);
      else if (s < 0) neg.push_back(q);
      else next.insert(normalized(q));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        const Rational fp = -n.a[k], fn = p.a[k];
        Inequality r{RationalVector(variables), fp * p.c + fn * n.c};
        for (std::size_t j = 0; j < variables; ++j) r.a[j] = fp * p.a[j] + fn * n.a[j];
        r.a[k] = 0;
        next.insert(normalized(r));
      }
    system.assign(next.begin(), next.end());
  }
  return std::all_of(system.begin(), system.end(), [](const Inequality& q) { return sgn(q.c) <= 0; });
}

/// Exactly verified Farkas multipliers y >= 0 with A^T y = 0 and c·y > 0,
/// proving {a·x >= c} infeasible; empty when none is found.
inline std::vector<Rational> farkas_certificate(const std::vector<Inequality>& system, std::size_t variables) {
  LinearProgram lp;
  lp.variables = system.size();
  for (std::size_t k = 0; k < system.size(); ++k) {
    RationalVector e(system.size());
    e[k] = 1;
    lp.add(e, Relation::GreaterEqual, 0);
  }
  for (std::size_t j = 0; j < variables; ++j) {
    RationalVector col;
    for (const auto& q : system) col.push_back(q.a[j]);
    lp.add(col, Relation::Equal, 0);
  }
  RationalVector c;
  for (const auto& q : system) c.push_back(q.c);
  lp.add(c, Relation::Equal, 1);
  const auto r = lp_solve(lp);
  if (r.status != LpStatus::Optimal) return {};

  // independent exact verification
  Rational gain = 0;
  RationalVector combo(variables);
  for (std::size_t k = 0; k < system.size(); ++k) {
    if (sgn(r.point[k]) < 0) return {};
    gain += r.point[k] * system[k].c;
    for (std::size_t j = 0; j < variables; ++j) combo[j] += r.point[k] * system[k].a[j];
  }
  for (const auto& v : combo)
    if (sgn(v) != 0) return {};
  if (sgn(gain) <= 0) return {};
  return r.point;
}

}  // namespace maxtorus::testing
