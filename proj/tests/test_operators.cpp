#include <doctest.h>

#include "helpers.hpp"
#include "uj/sampling.hpp"

using namespace uj;
using uj::test::diag;

TEST_SUITE("operators") {

TEST_CASE("identity is an effect") {
  const Effect e = Effect::validate(identity(2));
  CHECK(max_abs(e.matrix() - identity(2)) == 0.0);
}

TEST_CASE("eigenvalue above one is rejected") {
  try {
    Effect::validate(diag({0.5, 1.2}));
    FAIL("expected SpectrumOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpectrumOutOfRange);
    CHECK(std::string(e.what()).find("1.2") != std::string::npos);
  }
}

TEST_CASE("non-Hermitian matrix is rejected") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 0.3;
  CHECK_THROWS_AS(Effect::validate(m), Error);
  try {
    Effect::validate(m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
  CHECK_THROWS_AS(min_eigenvalue(m), Error);
}

TEST_CASE("half-smeared sigma_z effect") {
  // (1/2)(I + sigma_z/sqrt2) by hand: diag((2+sqrt2)/4, (2-sqrt2)/4)
  const double s2 = std::sqrt(2.0);
  const Matrix built = 0.5 * (identity(2) + pauli_z() / s2);
  const Effect e = Effect::validate(built);
  CHECK(max_abs(e.matrix() - diag({(2 + s2) / 4, (2 - s2) / 4})) < 1e-15);
}

TEST_CASE("tensor products") {
  CHECK(max_abs(tensor(identity(2), identity(2)) - identity(4)) == 0.0);
  CHECK(max_abs(tensor(pauli_z(), pauli_z()) - diag({1, -1, -1, 1})) == 0.0);

  // sigma_x (x) sigma_x swaps |00>,|11> and |01>,|10>
  Matrix xx = Matrix::Zero(4, 4);
  xx(0, 3) = xx(3, 0) = xx(1, 2) = xx(2, 1) = 1;
  CHECK(max_abs(tensor(pauli_x(), pauli_x()) - xx) == 0.0);
  Vector singlet = Vector::Zero(4);
  singlet(1) = test::kInvSqrt2;
  singlet(2) = -test::kInvSqrt2;
  CHECK((singlet.adjoint() * xx * singlet)(0).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(trace_product(uj::singlet().matrix(), tensor(pauli_x(), pauli_x())) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("tensor index convention") {
  Rng rng(11);
  const Matrix a = random_unitary(2, rng);
  const Matrix b = random_unitary(3, rng);
  const Matrix k = tensor(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) CHECK(k(i * 3 + p, j * 3 + q) == a(i, j) * b(p, q));
}

TEST_CASE("tensor is associative") {
  Rng rng(12);
  std::normal_distribution<double> g;
  for (int t = 0; t < 50; ++t) {
    Matrix m[3];
    for (auto& x : m) {
      x = Matrix(2, 2);
      for (int i = 0; i < 4; ++i) x.data()[i] = Complex(g(rng), g(rng));
    }
    CHECK(max_abs(tensor(tensor(m[0], m[1]), m[2]) - tensor(m[0], tensor(m[1], m[2]))) <= 1e-12);
  }
}

TEST_CASE("min eigenvalue") {
  CHECK(min_eigenvalue(diag({0.2, 0.8})) == doctest::Approx(0.2).epsilon(1e-15));
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto v = random_bloch(rng).v();
    CHECK(std::abs(min_eigenvalue(0.5 * (identity(2) + pauli_dot(v)))) <= 1e-12);
  }
  // G++ of the orthogonal-pair witness at lambda = 1/sqrt2:
  // (1/4)[I + (z + x).sigma / sqrt2], eigenvalues (1 +- 1)/4
  const double l = test::kInvSqrt2;
  const Matrix gpp = 0.25 * (identity(2) + l * pauli_dot({1, 0, 1}));
  CHECK(std::abs(min_eigenvalue(gpp)) <= 1e-9);
}

TEST_CASE("eigh is ascending and orthonormal") {
  Rng rng(14);
  const Effect e = random_effect(6, rng);
  const EigenSystem es = eigh(e.matrix());
  for (Eigen::Index i = 1; i < es.values.size(); ++i) CHECK(es.values(i - 1) <= es.values(i));
  CHECK(max_abs(es.vectors.adjoint() * es.vectors - identity(6)) < 1e-12);
  CHECK(max_abs(es.vectors * es.values.asDiagonal() * es.vectors.adjoint() - e.matrix()) < 1e-12);
}

TEST_CASE("dichotomic observables") {
  Rng rng(15);
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto obs = DichotomicObservable::from_yes(random_effect(d, rng));
    CHECK(obs.yes().matrix().trace().real() + obs.no().matrix().trace().real() ==
          doctest::Approx(static_cast<double>(d)).epsilon(1e-12));
    CHECK(min_eigenvalue(obs.yes().matrix()) >= -1e-9);
    CHECK(max_eigenvalue(obs.no().matrix()) <= 1 + 1e-9);
  }
  CHECK_THROWS_AS(DichotomicObservable::validate(diag({0.5, 0.5}), diag({0.5, 0.6})), Error);
  CHECK_THROWS_AS(DichotomicObservable::validate(diag({0.5, 0.5}), diag({0.5, 0.5, 0.5})), Error);
}

TEST_CASE("projectors") {
  const Projector p = Projector::qubit({0, 0, 1});
  CHECK(p.rank() == 1);
  CHECK(max_abs(p.matrix() - diag({1, 0})) < 1e-15);
  CHECK_THROWS_AS(Projector::validate(diag({0.5, 1})), Error);
  Rng rng(16);
  const Projector r = random_projector(7, 3, rng);
  CHECK(r.rank() == 3);
}

TEST_CASE("density matrices") {
  CHECK(singlet().dim() == 4);
  CHECK(DensityMatrix::maximally_mixed(3).matrix()(0, 0).real() == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(DensityMatrix::validate(diag({0.5, 0.6})), Error);
  CHECK_THROWS_AS(DensityMatrix::validate(diag({1.5, -0.5})), Error);
}

}
