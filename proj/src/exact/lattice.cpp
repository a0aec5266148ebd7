#include "maxtorus/lattice.hpp"

#include "maxtorus/linalg.hpp"

#include <stdexcept>

namespace maxtorus {

namespace {

// rows (a, b) <- (s a + t b, -(y/g) a + (x/g) b) where g = s x + t y
void combine_rows(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                  const Integer& t, const Integer& p, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer ra = s * m(a, j) + t * m(b, j);
    Integer rb = p * m(a, j) + q * m(b, j);
    m(a, j) = std::move(ra);
    m(b, j) = std::move(rb);
  }
}

void add_row_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  IntegerMatrix u = IntegerMatrix::identity(a.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(),
                 h(i, c).get_mpz_t());
      const Integer p = -h(i, c) / g;
      const Integer q = h(r, c) / g;
      combine_rows(h, r, i, s, t, p, q);
      combine_rows(u, r, i, s, t, p, q);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer f = floor_div(h(i, c), h(r, c));
      if (f == 0) continue;
      add_row_multiple(h, i, r, -f);
      add_row_multiple(u, i, r, -f);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SmithForm smith_normal_form(const IntegerMatrix& a) {
  IntegerMatrix d = a;
  IntegerMatrix u = IntegerMatrix::identity(a.rows());
  IntegerMatrix v = IntegerMatrix::identity(a.cols());
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    bool done = false;
    while (!done) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d(i, j) == 0) continue;
          if (!found || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) return {std::move(d), std::move(u), std::move(v)};
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool residue = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Integer f = trunc_div(d(i, t), d(t, t));
        add_row_multiple(d, i, t, -f);
        add_row_multiple(u, i, t, -f);
        if (d(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Integer f = trunc_div(d(t, j), d(t, t));
        add_col_multiple(d, j, t, -f);
        add_col_multiple(v, j, t, -f);
        if (d(t, j) != 0) residue = true;
      }
      if (residue) continue;

      done = true;
      for (std::size_t i = t + 1; i < d.rows() && done; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d(i, j) % d(t, t) != 0) {
            add_row_multiple(d, t, i, 1);
            add_row_multiple(u, t, i, 1);
            done = false;
            break;
          }
        }
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

IntegerVector smith_invariants(const IntegerMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  IntegerVector out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    if (s.d(i, i) != 0) out.push_back(s.d(i, i));
  }
  return out;
}

std::vector<IntegerVector> integer_kernel(const IntegerMatrix& b) {
  const HermiteForm hf = hermite_normal_form(b.transpose());
  std::vector<IntegerVector> out;
  for (std::size_t i = 0; i < hf.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < hf.h.cols() && zero; ++j) zero = hf.h(i, j) == 0;
    if (zero) out.push_back(hf.u.row_vector(i));
  }
  return out;
}

IntegerMatrix clear_row_denominators(const RationalMatrix& a) {
  IntegerMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const IntegerVector p = primitive_integer_vector(a.row_vector(i));
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = p[j];
  }
  return m;
}

std::vector<IntegerVector> subspace_lattice_points(const std::vector<RationalVector>& basis,
                                                   std::size_t k) {
  if (rank(RationalMatrix::from_rows(basis, k)) == 0) return {};
  const auto annihilator = nullspace(RationalMatrix::from_rows(basis, k));
  std::vector<IntegerVector> gens;
  if (annihilator.empty()) {
    const IntegerMatrix id = IntegerMatrix::identity(k);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(id.row_vector(i));
  } else {
    gens = integer_kernel(clear_row_denominators(RationalMatrix::from_rows(annihilator, k)));
  }
  const HermiteForm hf = hermite_normal_form(IntegerMatrix::from_rows(gens, k));
  std::vector<IntegerVector> out;
  for (std::size_t i = 0; i < hf.h.rows(); ++i) {
    IntegerVector r = hf.h.row_vector(i);
    if (gcd_of(r) != 0) out.push_back(std::move(r));
  }
  return out;
}

Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = a.rows();
  IntegerMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * m(n - 1, n - 1));
}

}  // namespace maxtorus
