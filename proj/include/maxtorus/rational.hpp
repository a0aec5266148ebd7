#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace maxtorus {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Parses "p/q", "p" or "-p/q". The result is canonical (q > 0, gcd 1).
/// Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag = 0)
      : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  /// Throws std::domain_error on division by zero.
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

using GaussianVector = std::vector<GaussianRational>;

std::string to_string(const GaussianRational& value);

/// Scales a rational vector by a positive rational so that it becomes a
/// primitive integer vector. The zero vector is returned unchanged.
IntegerVector primitive_integer_vector(const RationalVector& v);

Integer gcd_of(const IntegerVector& v);

RationalVector to_rational(const IntegerVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace maxtorus
