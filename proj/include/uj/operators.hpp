#pragma once

// Validated operator types on C^d: effects, dichotomic observables, projectors
// and density matrices, plus the little bit of algebra everything else needs.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>

#include "uj/error.hpp"

namespace uj {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Construction tolerances. Hermiticity and affine identities use the tight
// tier, positivity the loose one.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kAffineTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kProjectorTol = 1e-10;
inline constexpr double kRankTol = 1e-8;
inline constexpr double kTraceTol = 1e-10;

/// Largest |m(i,j)| over all entries.
double max_abs(const Matrix& m);

/// max |m - m^dagger|.
double hermitian_residual(const Matrix& m);

bool is_square(const Matrix& m);
bool is_finite(const Matrix& m);

/// Throws NotSquare / NotHermitian unless m is a finite square Hermitian matrix.
void require_hermitian(const Matrix& m, double tol = kHermitianTol);

/// (m + m^dagger) / 2
Matrix hermitian_part(const Matrix& m);

struct EigenSystem {
  RealVector values;  // ascending
  Matrix vectors;     // columns, orthonormal
};

/// Hermitian eigendecomposition with ascending eigenvalues. The input is
/// symmetrized before diagonalization.
EigenSystem eigh(const Matrix& m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix& m);
double max_eigenvalue(const Matrix& m);

/// Kronecker product; entry (i*db + k, j*db + l) = a(i,j) * b(k,l).
Matrix tensor(const Matrix& a, const Matrix& b);

Matrix identity(std::size_t dim);

/// Pauli matrices sigma_x, sigma_y, sigma_z.
const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();

/// v.sigma for a real 3-vector.
Matrix pauli_dot(const std::array<double, 3>& v);

/// |psi><psi| (psi need not be normalized).
Matrix outer(const Vector& psi);

/// Hermitian operator E with 0 <= E <= I.
class Effect {
 public:
  static Effect validate(const Matrix& m, double tol = kPsdTol);

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

 private:
  explicit Effect(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Two-outcome observable {E_yes, E_no} with E_yes + E_no = I.
class DichotomicObservable {
 public:
  /// Builds {yes, I - yes}.
  static DichotomicObservable from_yes(const Effect& yes);
  static DichotomicObservable validate(const Matrix& yes, const Matrix& no);

  const Effect& yes() const { return yes_; }
  const Effect& no() const { return no_; }
  std::size_t dim() const { return yes_.dim(); }

  /// E_yes - E_no, the +-1 valued operator whose expectation is the mean value.
  Matrix difference() const { return yes_.matrix() - no_.matrix(); }

 private:
  DichotomicObservable(Effect yes, Effect no) : yes_(std::move(yes)), no_(std::move(no)) {}
  Effect yes_;
  Effect no_;
};

/// Orthogonal projector P = P^dagger = P^2.
class Projector {
 public:
  static Projector validate(const Matrix& m, double tol = kProjectorTol);
  /// Rank-1 qubit projector (I + v.sigma)/2 for a unit Bloch vector.
  static Projector qubit(const std::array<double, 3>& bloch);
  /// Projector onto the span of orthonormal columns.
  static Projector onto(const Matrix& orthonormal_columns);

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t rank() const { return rank_; }

  Effect as_effect() const;
  /// {P, I - P}
  DichotomicObservable observable() const;

 private:
  Projector(Matrix m, std::size_t rank) : m_(std::move(m)), rank_(rank) {}
  Matrix m_;
  std::size_t rank_;
};

/// Positive semidefinite, unit trace.
class DensityMatrix {
 public:
  static DensityMatrix validate(const Matrix& m, double tol = kPsdTol);
  /// Normalizes psi.
  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

 private:
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Re Tr[a b].
double trace_product(const Matrix& a, const Matrix& b);

/// Singlet (|01> - |10>)/sqrt(2).
DensityMatrix singlet();

}  // namespace uj
