#include "maxtorus/linalg.hpp"

#include <stdexcept>

namespace maxtorus {

RowEchelon reduced_row_echelon(RationalMatrix a) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& a) {
  IntegerMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) l = lcm(l, a(i, j).get_den());
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: rows(A) != length(b)");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = reduced_row_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  const RowEchelon e = reduced_row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> row_space_basis(const std::vector<RationalVector>& vectors,
                                            std::size_t dim) {
  const RowEchelon e = reduced_row_echelon(RationalMatrix::from_rows(vectors, dim));
  std::vector<RationalVector> out;
  for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.reduced.row_vector(r));
  return out;
}

std::optional<RationalVector> min_norm_solution(const RationalMatrix& a, const RationalVector& b) {
  const RationalMatrix at = a.transpose();
  const auto y = solve(a * at, b);
  if (!y) return std::nullopt;
  RationalVector x = at * *y;
  if (a * x != b) return std::nullopt;
  return x;
}

bool span_contains(const std::vector<RationalVector>& b, const std::vector<RationalVector>& a,
                   std::size_t dim) {
  std::vector<RationalVector> all = b;
  const std::size_t base = rank(RationalMatrix::from_rows(b, dim));
  all.insert(all.end(), a.begin(), a.end());
  return rank(RationalMatrix::from_rows(all, dim)) == base;
}

}  // namespace maxtorus
