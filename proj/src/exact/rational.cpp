#include "maxtorus/rational.hpp"

#include <stdexcept>

namespace maxtorus {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) {
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw std::invalid_argument("malformed rational: negative denominator in '" +
                                std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) {
    throw std::invalid_argument("malformed rational: zero denominator in '" +
                                std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::domain_error("Gaussian rational division by zero");
  const Rational n = b.norm();
  const GaussianRational num = a * b.conj();
  return {num.re / n, num.im / n};
}

std::string to_string(const GaussianRational& value) {
  if (sgn(value.im) == 0) return to_string(value.re);
  std::string im = to_string(value.im) + "i";
  if (sgn(value.re) == 0) return im;
  return to_string(value.re) + (sgn(value.im) > 0 ? "+" : "") + im;
}

Integer gcd_of(const IntegerVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntegerVector primitive_integer_vector(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntegerVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x.get_num() * (l / x.get_den()));
  const Integer g = gcd_of(out);
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

RationalVector to_rational(const IntegerVector& v) {
  return RationalVector(v.begin(), v.end());
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace maxtorus
