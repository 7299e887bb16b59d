#include "uj/operators.hpp"

#include <cmath>
#include <sstream>

namespace uj {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::SpectrumOutOfRange: return "SpectrumOutOfRange";
    case ErrorCode::NotProjector: return "NotProjector";
    case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::NotEffect: return "NotEffect";
    case ErrorCode::InvalidLambda: return "InvalidLambda";
    case ErrorCode::InvalidBlochVector: return "InvalidBlochVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::LambdaTooLarge: return "LambdaTooLarge";
    case ErrorCode::InvalidBox: return "InvalidBox";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermitian_residual(const Matrix& m) { return max_abs(m - m.adjoint()); }

bool is_square(const Matrix& m) { return m.rows() == m.cols() && m.rows() > 0; }

bool is_finite(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void require_hermitian(const Matrix& m, double tol) {
  if (!is_square(m)) {
    std::ostringstream os;
    os << "expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorCode::NotSquare, os.str());
  }
  if (!is_finite(m)) throw Error(ErrorCode::NotSquare, "matrix has non-finite entries");
  const double r = hermitian_residual(m);
  if (r > tol) {
    std::ostringstream os;
    os << "max |m - m^dagger| = " << r << " exceeds " << tol;
    throw Error(ErrorCode::NotHermitian, os.str());
  }
}

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

EigenSystem eigh(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(m));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const Matrix& m) {
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double max_eigenvalue(const Matrix& m) {
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(solver.eigenvalues().size() - 1);
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j) out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

Matrix identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Matrix::Identity(n, n);
}

const Matrix& pauli_x() {
  static const Matrix m = [] {
    Matrix s(2, 2);
    s << 0, 1, 1, 0;
    return s;
  }();
  return m;
}

const Matrix& pauli_y() {
  static const Matrix m = [] {
    Matrix s(2, 2);
    s << 0, Complex(0, -1), Complex(0, 1), 0;
    return s;
  }();
  return m;
}

const Matrix& pauli_z() {
  static const Matrix m = [] {
    Matrix s(2, 2);
    s << 1, 0, 0, -1;
    return s;
  }();
  return m;
}

Matrix pauli_dot(const std::array<double, 3>& v) {
  return v[0] * pauli_x() + v[1] * pauli_y() + v[2] * pauli_z();
}

Matrix outer(const Vector& psi) { return psi * psi.adjoint(); }

double trace_product(const Matrix& a, const Matrix& b) {
  // Tr[ab] = sum_ij a_ij b_ji
  return (a.transpose().cwiseProduct(b)).sum().real();
}

// ---------------------------------------------------------------------------

Effect Effect::validate(const Matrix& m, double tol) {
  require_hermitian(m);
  const RealVector ev = eigh(m).values;
  const double lo = ev(0);
  const double hi = ev(ev.size() - 1);
  if (lo < -tol || hi > 1.0 + tol) {
    std::ostringstream os;
    os.precision(17);
    os << "eigenvalue " << (lo < -tol ? lo : hi) << " outside [" << -tol << ", " << 1.0 + tol << "]";
    throw Error(ErrorCode::SpectrumOutOfRange, os.str());
  }
  return Effect(hermitian_part(m));
}

DichotomicObservable DichotomicObservable::from_yes(const Effect& yes) {
  Matrix no = identity(yes.dim()) - yes.matrix();
  return DichotomicObservable(yes, Effect::validate(no));
}

DichotomicObservable DichotomicObservable::validate(const Matrix& yes, const Matrix& no) {
  if (yes.rows() != no.rows() || yes.cols() != no.cols())
    throw Error(ErrorCode::DimensionMismatch, "yes and no effects differ in dimension");
  Effect y = Effect::validate(yes);
  Effect n = Effect::validate(no);
  const double r = max_abs(y.matrix() + n.matrix() - identity(y.dim()));
  if (r > kAffineTol) {
    std::ostringstream os;
    os << "yes + no deviates from identity by " << r;
    throw Error(ErrorCode::NotEffect, os.str());
  }
  return DichotomicObservable(std::move(y), std::move(n));
}

Projector Projector::validate(const Matrix& m, double tol) {
  require_hermitian(m);
  const Matrix h = hermitian_part(m);
  const double idem = max_abs(h * h - h);
  if (idem > tol) {
    std::ostringstream os;
    os << "idempotency residual |P^2 - P| = " << idem << " exceeds " << tol;
    throw Error(ErrorCode::NotProjector, os.str());
  }
  const double tr = h.trace().real();
  const double rounded = std::round(tr);
  if (std::abs(tr - rounded) > kRankTol || rounded < 0) {
    std::ostringstream os;
    os << "trace " << tr << " is not an integer rank";
    throw Error(ErrorCode::NotProjector, os.str());
  }
  return Projector(h, static_cast<std::size_t>(rounded));
}

Projector Projector::qubit(const std::array<double, 3>& bloch) {
  return validate(0.5 * (identity(2) + pauli_dot(bloch)), 1e-9);
}

Projector Projector::onto(const Matrix& orthonormal_columns) {
  return validate(orthonormal_columns * orthonormal_columns.adjoint(), 1e-9);
}

Effect Projector::as_effect() const { return Effect::validate(m_); }

DichotomicObservable Projector::observable() const { return DichotomicObservable::from_yes(as_effect()); }

DensityMatrix DensityMatrix::validate(const Matrix& m, double tol) {
  require_hermitian(m);
  const Matrix h = hermitian_part(m);
  const double lo = eigh(h).values(0);
  if (lo < -tol) {
    std::ostringstream os;
    os << "min eigenvalue " << lo << " below " << -tol;
    throw Error(ErrorCode::NotDensityMatrix, os.str());
  }
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os.precision(17);
    os << "trace " << tr << " differs from 1";
    throw Error(ErrorCode::NotDensityMatrix, os.str());
  }
  return DensityMatrix(h);
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double n = psi.norm();
  if (!(n > 0)) throw Error(ErrorCode::NotDensityMatrix, "zero state vector");
  return validate(outer(psi / n));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return validate(identity(dim) / static_cast<double>(dim));
}

DensityMatrix singlet() {
  Vector psi = Vector::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(psi);
}

}  // namespace uj
