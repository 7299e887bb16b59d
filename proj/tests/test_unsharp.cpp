#include <doctest.h>

#include "helpers.hpp"
#include "uj/sampling.hpp"
#include "uj/unsharp.hpp"

using namespace uj;
using uj::test::diag;

TEST_SUITE("unsharp") {

TEST_CASE("lambda is validated") {
  CHECK_THROWS_AS(UnsharpParam(0.0), Error);
  CHECK_THROWS_AS(UnsharpParam(-0.1), Error);
  CHECK_THROWS_AS(UnsharpParam(1.0 + 1e-12), Error);
  CHECK(UnsharpParam(1.0).value() == 1.0);
}

TEST_CASE("sharp smearing is the identity") {
  Rng rng(21);
  const auto obs = DichotomicObservable::from_yes(random_effect(4, rng));
  const auto same = smear(obs, UnsharpParam(1.0));
  CHECK(max_abs(same.yes().matrix() - obs.yes().matrix()) == 0.0);
  CHECK(max_abs(same.no().matrix() - obs.no().matrix()) == 0.0);
}

TEST_CASE("smeared |0><0| at 1/sqrt2") {
  const double s2 = std::sqrt(2.0);
  const auto obs = Projector::qubit({0, 0, 1}).observable();
  const auto sm = smear(obs, UnsharpParam(1.0 / s2));
  CHECK(max_abs(sm.yes().matrix() - diag({(2 + s2) / 4, (2 - s2) / 4})) < 1e-15);
  CHECK(max_abs(sm.yes().matrix() + sm.no().matrix() - identity(2)) < 1e-15);
}

TEST_CASE("eigenvalue map a -> (1 - l)/2 + l a") {
  Rng rng(22);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + t % 5;
    Matrix m = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = unit(rng);
    const double l = std::max(1e-6, unit(rng));
    const auto sm = smear(DichotomicObservable::from_yes(Effect::validate(m)), UnsharpParam(l));
    for (int i = 0; i < d; ++i) {
      const double expected = (1 - l) / 2 + l * m(i, i).real();
      CHECK(std::abs(sm.yes().matrix()(i, i).real() - expected) <= 1e-15);
    }
  }
}

TEST_CASE("smearing composes multiplicatively") {
  Rng rng(23);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  for (int t = 0; t < 100; ++t) {
    const auto obs = DichotomicObservable::from_yes(random_effect(3, rng));
    const double l1 = unit(rng), l2 = unit(rng);
    const auto twice = smear(smear(obs, UnsharpParam(l1)), UnsharpParam(l2));
    const auto once = smear(obs, UnsharpParam(l1 * l2));
    CHECK(max_abs(twice.yes().matrix() - once.yes().matrix()) <= 1e-12);
    CHECK(max_abs(twice.no().matrix() - once.no().matrix()) <= 1e-12);
  }
}

TEST_CASE("mean values") {
  const auto zero = Projector::qubit({0, 0, 1}).observable();
  const auto plus = Projector::qubit({1, 0, 0}).observable();
  const auto rho0 = DensityMatrix::validate(diag({1, 0}));
  CHECK(mean_value(zero, rho0) == doctest::Approx(1.0).epsilon(1e-15));
  // <0|(2|+><+| - I)|0> = 2 * 1/2 - 1
  CHECK(std::abs(mean_value(plus, rho0)) <= 1e-15);
  Rng rng(24);
  for (int t = 0; t < 20; ++t) {
    const auto obs = random_bloch(rng).projector().observable();
    CHECK(std::abs(mean_value(obs, DensityMatrix::maximally_mixed(2))) <= 1e-15);
  }
  CHECK_THROWS_AS(mean_value(zero, DensityMatrix::maximally_mixed(3)), Error);
}

TEST_CASE("smeared mean") {
  const auto zero = Projector::qubit({0, 0, 1}).observable();
  const auto rho0 = DensityMatrix::validate(diag({1, 0}));
  const auto half = smeared_mean(zero, UnsharpParam(0.5), rho0);
  CHECK(half.via_smearing == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(half.via_scaling == doctest::Approx(0.5).epsilon(1e-15));
  const auto sharp = smeared_mean(zero, UnsharpParam(1.0), rho0);
  CHECK(sharp.via_smearing == mean_value(zero, rho0));
}

TEST_CASE("smeared mean scales by lambda on random qubit pairs") {
  Rng rng(25);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto obs = DichotomicObservable::from_yes(random_effect(2, rng));
    const auto rho = random_density(2, rng);
    const auto r = smeared_mean(obs, UnsharpParam(std::max(1e-9, unit(rng))), rho);
    worst = std::max(worst, r.discrepancy);
    CHECK(std::abs(r.via_smearing) <= 1 + 1e-9);
  }
  CHECK(worst <= 1e-12);
}

}
