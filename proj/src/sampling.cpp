#include "uj/sampling.hpp"

#include <cmath>

namespace uj {

namespace {

Matrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

}  // namespace

Matrix random_unitary(std::size_t dim, Rng& rng) {
  const Matrix z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(z.rows(), z.cols());
  const Matrix r = qr.matrixQR();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex d = r(k, k);
    const double a = std::abs(d);
    if (a > 0) q.col(k) *= d / a;
  }
  return q;
}

Vector random_state_vector(std::size_t dim, Rng& rng) {
  Vector v = ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

Projector random_projector(std::size_t dim, std::size_t rank, Rng& rng) {
  const Matrix u = random_unitary(dim, rng);
  return Projector::onto(u.leftCols(static_cast<Eigen::Index>(rank)));
}

Effect random_effect(std::size_t dim, Rng& rng) {
  const Matrix u = random_unitary(dim, rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RealVector ev(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = unit(rng);
  return Effect::validate(u * ev.asDiagonal() * u.adjoint());
}

DensityMatrix random_density(std::size_t dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::validate(rho);
}

BlochVector random_bloch(Rng& rng) {
  std::normal_distribution<double> g;
  return BlochVector::normalized({g(rng), g(rng), g(rng)});
}

std::array<std::array<double, 3>, 3> random_rotation(Rng& rng) {
  std::normal_distribution<double> g;
  double w = g(rng), x = g(rng), y = g(rng), z = g(rng);
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n, x /= n, y /= n, z /= n;
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
           {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
           {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}};
}

BlochVector rotate(const std::array<std::array<double, 3>, 3>& r, const BlochVector& v) {
  std::array<double, 3> out{};
  for (int a = 0; a < 3; ++a) out[a] = r[a][0] * v[0] + r[a][1] * v[1] + r[a][2] * v[2];
  return BlochVector::normalized(out);
}

}  // namespace uj
