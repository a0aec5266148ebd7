#include "maxtorus/subspace.hpp"

#include "maxtorus/linalg.hpp"

#include <stdexcept>

namespace maxtorus {

RationalVector realify(const GaussianVector& v) {
  RationalVector r(2 * v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    r[j] = v[j].re;
    r[v.size() + j] = v[j].im;
  }
  return r;
}

GaussianVector times_i(const GaussianVector& v) {
  GaussianVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back({-z.im, z.re});
  return out;
}

std::size_t complex_rank(const std::vector<GaussianVector>& vs, std::size_t ambient) {
  std::vector<RationalVector> rows;
  for (const auto& v : vs) {
    if (v.size() != ambient) throw std::invalid_argument("complex_rank: length mismatch");
    rows.push_back(realify(v));
    rows.push_back(realify(times_i(v)));
  }
  return rank(RationalMatrix::from_rows(rows, 2 * ambient)) / 2;
}

ComplexSubspace::ComplexSubspace(std::size_t ambient, std::vector<GaussianVector> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_) throw std::invalid_argument("subspace: basis vector length != m");
  if (complex_rank(basis_, ambient_) != basis_.size())
    throw std::invalid_argument("subspace: basis is not linearly independent over C");
}

ComplexSubspace ComplexSubspace::from_real(std::size_t ambient, const std::vector<RationalVector>& vs) {
  std::vector<GaussianVector> basis;
  for (const auto& v : vs) basis.emplace_back(v.begin(), v.end());
  return ComplexSubspace(ambient, std::move(basis));
}

RationalMatrix ComplexSubspace::real_imaginary_rows() const {
  RationalMatrix m(0, ambient_);
  for (const auto& v : basis_) {
    RationalVector re(ambient_), im(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) {
      re[j] = v[j].re;
      im[j] = v[j].im;
    }
    m.append_row(re);
    m.append_row(im);
  }
  return m;
}

ComplexSubspace ComplexSubspace::conjugate() const {
  std::vector<GaussianVector> b;
  for (const auto& v : basis_) {
    GaussianVector c;
    for (const auto& z : v) c.push_back(z.conj());
    b.push_back(std::move(c));
  }
  return ComplexSubspace(ambient_, std::move(b));
}

bool ComplexSubspace::contains(const GaussianVector& v) const {
  std::vector<GaussianVector> all = basis_;
  all.push_back(v);
  return complex_rank(all, ambient_) == basis_.size();
}

bool ComplexSubspace::same_span(const ComplexSubspace& other) const {
  if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

bool SymbolicSubspace::is_rational() const {
  for (const auto& [re, im] : basis)
    if (!re.is_rational() || !im.is_rational()) return false;
  return true;
}

ComplexSubspace SymbolicSubspace::to_rational() const {
  if (!is_rational()) throw std::domain_error("quotient map requires rational data");
  std::vector<GaussianVector> b;
  for (const auto& [re, im] : basis) {
    const RationalVector r = re.to_rational(), i = im.to_rational();
    GaussianVector v;
    for (std::size_t j = 0; j < ambient; ++j) v.push_back({r[j], i[j]});
    b.push_back(std::move(v));
  }
  return ComplexSubspace(ambient, std::move(b));
}

SymbolicSubspace SymbolicSubspace::from_rational(const ComplexSubspace& h) {
  SymbolicSubspace s;
  s.ambient = h.ambient();
  for (const auto& v : h.basis()) {
    RationalVector re, im;
    for (const auto& z : v) {
      re.push_back(z.re);
      im.push_back(z.im);
    }
    s.basis.emplace_back(SymbolicVector(re), SymbolicVector(im));
  }
  return s;
}

}  // namespace maxtorus
