#pragma once

#include "maxtorus/matrix.hpp"

#include <vector>

namespace maxtorus {

enum class Relation { GreaterEqual, Equal };

struct Constraint {
  RationalVector coefficients;
  Relation relation = Relation::GreaterEqual;
  Rational rhs;
};

/// maximize objective·x subject to constraints; variables are free (sign
/// restrictions are ordinary constraints).
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<Constraint> constraints;
  RationalVector objective;  // empty means the zero objective

  void add(RationalVector row, Relation rel, Rational rhs) {
    constraints.push_back({std::move(row), rel, std::move(rhs)});
  }
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector point;
  /// One multiplier per constraint (<= 0 on >= rows) with A^T y = c and b·y = value.
  RationalVector duals;
};

/// Exact two-phase simplex with Bland's rule. Optimal results are verified
/// (primal feasibility, dual feasibility, zero gap) before returning;
/// a failed verification throws std::logic_error.
LpResult lp_solve(const LinearProgram& program);

bool lp_feasible(const LinearProgram& program);

}  // namespace maxtorus
