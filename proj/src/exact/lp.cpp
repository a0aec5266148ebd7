#include "maxtorus/lp.hpp"

#include "maxtorus/linalg.hpp"

#include <optional>
#include <stdexcept>

namespace maxtorus {

namespace {

// Standard form  max c·z  s.t.  A z = b, z >= 0, b >= 0, over columns
// [x+ | x- | slacks | artificials].
struct Tableau {
  RationalMatrix t;                    // rows x (columns + 1), last column = rhs
  std::vector<std::size_t> basis;      // basic column of each row
  std::vector<std::size_t> row_origin; // original constraint index of each row
  std::size_t columns = 0;

  const Rational& rhs(std::size_t i) const { return t(i, columns); }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t(r, c);
    for (std::size_t j = 0; j <= columns; ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (i == r || sgn(t(i, c)) == 0) continue;
      const Rational f = t(i, c);
      for (std::size_t j = 0; j <= columns; ++j) t(i, j) -= f * t(r, j);
    }
    basis[r] = c;
  }

  void remove_row(std::size_t r) {
    RationalMatrix next(0, t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
      if (i != r) next.append_row(t.row(i));
    t = std::move(next);
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    row_origin.erase(row_origin.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

enum class Phase { Optimal, Unbounded };

// Bland's rule: entering = lowest-index improving column, leaving = minimum
// ratio with ties broken by lowest basic column index.
Phase run_simplex(Tableau& tab, const RationalVector& cost, std::size_t allowed_columns) {
  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < allowed_columns && !entering; ++j) {
      Rational d = cost[j];
      for (std::size_t i = 0; i < tab.t.rows(); ++i) d -= cost[tab.basis[i]] * tab.t(i, j);
      if (sgn(d) > 0) entering = j;
    }
    if (!entering) return Phase::Optimal;
    const std::size_t c = *entering;
    std::optional<std::size_t> leaving;
    Rational best;
    for (std::size_t i = 0; i < tab.t.rows(); ++i) {
      if (sgn(tab.t(i, c)) <= 0) continue;
      const Rational ratio = tab.rhs(i) / tab.t(i, c);
      if (!leaving || ratio < best || (ratio == best && tab.basis[i] < tab.basis[*leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    if (!leaving) return Phase::Unbounded;
    tab.pivot(*leaving, c);
  }
}

void verify_optimal(const LinearProgram& p, const LpResult& r, const RationalVector& objective) {
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& con = p.constraints[i];
    const Rational lhs = dot(con.coefficients, r.point);
    const bool ok = con.relation == Relation::Equal ? lhs == con.rhs : lhs >= con.rhs;
    if (!ok) throw std::logic_error("lp_solve: primal point violates a constraint");
    if (con.relation == Relation::GreaterEqual && sgn(r.duals[i]) > 0)
      throw std::logic_error("lp_solve: dual multiplier has the wrong sign");
  }
  RationalVector aty(p.variables);
  Rational by = 0;
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    for (std::size_t j = 0; j < p.variables; ++j)
      aty[j] += p.constraints[i].coefficients[j] * r.duals[i];
    by += p.constraints[i].rhs * r.duals[i];
  }
  if (aty != objective) throw std::logic_error("lp_solve: dual certificate infeasible");
  if (by != r.value || dot(objective, r.point) != r.value)
    throw std::logic_error("lp_solve: nonzero duality gap");
}

}  // namespace

LpResult lp_solve(const LinearProgram& p) {
  const std::size_t n = p.variables;
  const std::size_t m = p.constraints.size();
  RationalVector objective = p.objective.empty() ? RationalVector(n) : p.objective;
  if (objective.size() != n) throw std::invalid_argument("lp_solve: objective length mismatch");
  std::size_t slacks = 0;
  for (const auto& con : p.constraints) {
    if (con.coefficients.size() != n) throw std::invalid_argument("lp_solve: row length mismatch");
    if (con.relation == Relation::GreaterEqual) ++slacks;
  }

  const std::size_t structural = 2 * n + slacks;
  Tableau tab;
  tab.columns = structural + m;
  tab.t = RationalMatrix(m, tab.columns + 1);
  tab.basis.resize(m);
  tab.row_origin.resize(m);
  std::vector<int> row_sign(m, 1);
  std::size_t slack = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = p.constraints[i];
    const int s = sgn(con.rhs) < 0 ? -1 : 1;
    row_sign[i] = s;
    for (std::size_t j = 0; j < n; ++j) {
      tab.t(i, j) = s * con.coefficients[j];
      tab.t(i, n + j) = -s * con.coefficients[j];
    }
    if (con.relation == Relation::GreaterEqual) tab.t(i, slack++) = -s;
    tab.t(i, structural + i) = 1;
    tab.t(i, tab.columns) = s * con.rhs;
    tab.basis[i] = structural + i;
    tab.row_origin[i] = i;
  }
  const RationalMatrix standard = tab.t;  // before any pivot

  RationalVector phase1(tab.columns);
  for (std::size_t i = 0; i < m; ++i) phase1[structural + i] = -1;
  run_simplex(tab, phase1, tab.columns);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < tab.t.rows(); ++i)
    if (tab.basis[i] >= structural) infeasibility += tab.rhs(i);
  LpResult result;
  if (sgn(infeasibility) != 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }

  // Drive remaining (zero-level) artificials out of the basis; rows where
  // that is impossible are linearly redundant and dropped.
  for (std::size_t i = 0; i < tab.t.rows();) {
    if (tab.basis[i] < structural) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < structural && !col; ++j)
      if (sgn(tab.t(i, j)) != 0) col = j;
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.remove_row(i);
    }
  }

  RationalVector cost(tab.columns);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = objective[j];
    cost[n + j] = -objective[j];
  }
  if (run_simplex(tab, cost, structural) == Phase::Unbounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  RationalVector z(structural);
  for (std::size_t i = 0; i < tab.t.rows(); ++i) z[tab.basis[i]] = tab.rhs(i);
  result.status = LpStatus::Optimal;
  result.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) result.point[j] = z[j] - z[n + j];
  result.value = dot(objective, result.point);

  // Duals of the standard form: B^T y = c_B over the surviving rows.
  const std::size_t rows = tab.t.rows();
  RationalMatrix bt(rows, rows);
  RationalVector cb(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    cb[k] = cost[tab.basis[k]];
    for (std::size_t r = 0; r < rows; ++r) bt(k, r) = standard(tab.row_origin[r], tab.basis[k]);
  }
  const auto y = solve(bt, cb);
  if (!y) throw std::logic_error("lp_solve: singular final basis");
  result.duals.assign(m, 0);
  for (std::size_t r = 0; r < rows; ++r)
    result.duals[tab.row_origin[r]] = row_sign[tab.row_origin[r]] * (*y)[r];
  verify_optimal(p, result, objective);
  return result;
}

bool lp_feasible(const LinearProgram& program) {
  LinearProgram p = program;
  p.objective.clear();
  return lp_solve(p).status == LpStatus::Optimal;
}

}  // namespace maxtorus
