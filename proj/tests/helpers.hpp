#pragma once

#include <cmath>
#include <initializer_list>

#include "uj/operators.hpp"

namespace uj::test {

inline Matrix diag(std::initializer_list<double> values) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

inline Matrix ket_bra(std::initializer_list<Complex> ket) {
  Vector v(static_cast<Eigen::Index>(ket.size()));
  Eigen::Index i = 0;
  for (Complex c : ket) v(i++) = c;
  return v * v.adjoint();
}

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace uj::test
