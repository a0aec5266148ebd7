#include "maxtorus/matrix.hpp"

namespace maxtorus {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw std::invalid_argument("to_integer: non-integer entry");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

}  // namespace maxtorus
