#include "maxtorus/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxtorus {

SymbolicVector::SymbolicVector(const RationalVector& constant) : coords_(constant.size()) {
  for (std::size_t j = 0; j < constant.size(); ++j) set(j, 0, constant[j]);
}

Rational SymbolicVector::coefficient(std::size_t j, std::size_t symbol) const {
  const auto& c = coords_.at(j);
  auto it = c.find(symbol);
  return it == c.end() ? Rational(0) : it->second;
}

void SymbolicVector::set(std::size_t j, std::size_t symbol, const Rational& value) {
  auto& c = coords_.at(j);
  if (sgn(value) == 0) {
    c.erase(symbol);
  } else {
    c[symbol] = value;
  }
}

std::size_t SymbolicVector::max_symbol() const {
  std::size_t m = 0;
  for (const auto& c : coords_)
    if (!c.empty()) m = std::max(m, c.rbegin()->first);
  return m;
}

RationalVector SymbolicVector::to_rational() const {
  if (!is_rational()) throw std::domain_error("symbolic vector has irrational coefficients");
  RationalVector out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[j] = coefficient(j, 0);
  return out;
}

SymbolicVector operator+(const SymbolicVector& a, const SymbolicVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("SymbolicVector: dimension mismatch");
  SymbolicVector out = a;
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (const auto& [s, c] : b.coords_[j]) out.set(j, s, out.coefficient(j, s) + c);
  return out;
}

SymbolicVector operator*(const Rational& f, const SymbolicVector& a) {
  SymbolicVector out(a.dim());
  if (sgn(f) == 0) return out;
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (const auto& [s, c] : a.coords_[j]) out.coords_[j][s] = f * c;
  return out;
}

RationalMatrix symbolic_coefficient_matrix(const std::vector<SymbolicVector>& vs) {
  if (vs.empty()) return {};
  const std::size_t m = vs.front().dim();
  std::size_t k = 0;
  for (const auto& v : vs) {
    if (v.dim() != m) throw std::invalid_argument("symbolic_coefficient_matrix: dimension mismatch");
    k = std::max(k, v.max_symbol());
  }
  RationalMatrix out(0, m);
  for (const auto& v : vs) {
    for (std::size_t s = 0; s <= k; ++s) {
      RationalVector row(m);
      bool nonzero = false;
      for (std::size_t j = 0; j < m; ++j) {
        row[j] = v.coefficient(j, s);
        nonzero = nonzero || sgn(row[j]) != 0;
      }
      if (nonzero) out.append_row(row);
    }
  }
  return out;
}

}  // namespace maxtorus
