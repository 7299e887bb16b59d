#include <doctest.h>

#include "helpers.hpp"
#include "uj/joint.hpp"
#include "uj/sampling.hpp"

using namespace uj;
using uj::test::diag;

namespace {

double dot(const BlochVector& a, const BlochVector& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Threshold for unit Bloch vectors at angle theta: 1 / (cos(theta/2) + sin(theta/2)).
double threshold(const BlochVector& m, const BlochVector& n) {
  const double theta = std::acos(std::clamp(dot(m, n), -1.0, 1.0));
  return 1.0 / (std::cos(theta / 2) + std::sin(theta / 2));
}

const BlochVector kZ({0, 0, 1});
const BlochVector kX({1, 0, 0});

}  // namespace

TEST_SUITE("joint") {

TEST_CASE("Bloch vectors are unit") {
  CHECK_THROWS_AS(BlochVector({0, 0, 1.1}), Error);
  CHECK_THROWS_AS(BlochVector({0, 0, 0}), Error);
  CHECK(BlochVector::normalized({0, 3, 4})[1] == doctest::Approx(0.6));
}

TEST_CASE("criterion for orthogonal pair") {
  CHECK(qubit_criterion(kZ, kX, 1.0) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(qubit_criterion(kZ, kX, test::kInvSqrt2) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("criterion matches the half-angle threshold") {
  Rng rng(41);
  for (int t = 0; t < 500; ++t) {
    const auto m = random_bloch(rng), n = random_bloch(rng);
    CHECK(qubit_criterion(m, n, threshold(m, n)) == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("witness at lambda = 1/sqrt2 for z and x") {
  const auto r = qubit_joint_observable(kZ, kX, UnsharpParam(test::kInvSqrt2));
  CHECK(r.feasible == Verdict::Yes);
  REQUIRE(r.witness);
  // t = 0, so G_jk = [I + (j z + k x).sigma / sqrt2] / 4
  const double l = test::kInvSqrt2;
  for (int j : {1, -1})
    for (int k : {1, -1}) {
      const Matrix expected = 0.25 * (identity(2) + l * pauli_dot({double(k), 0, double(j)}));
      const std::size_t idx = (j == 1 ? 0 : 2) + (k == 1 ? 0 : 1);
      CHECK(max_abs((*r.witness)[idx].matrix() - expected) <= 1e-15);
    }
  CHECK(r.min_eigenvalue >= -1e-9);
  CHECK(r.marginal_residual <= 1e-12);
}

TEST_CASE("z and x above 1/sqrt2 are infeasible") {
  const auto r = qubit_joint_observable(kZ, kX, UnsharpParam(0.72));
  CHECK(r.feasible == Verdict::No);
  CHECK_FALSE(r.witness);
  CHECK(r.min_eigenvalue < 0);
}

TEST_CASE("qubit witness valid iff below threshold") {
  Rng rng(42);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_bloch(rng), n = random_bloch(rng);
    const double l = unit(rng);
    const auto r = qubit_joint_observable(m, n, UnsharpParam(l));
    const double th = threshold(m, n);
    if (std::abs(l - th) < 1e-9) continue;
    CHECK((r.feasible == Verdict::Yes) == (l < th));
    if (r.witness) {
      const auto a1 = smear(m.projector().observable(), UnsharpParam(l));
      const auto a2 = smear(n.projector().observable(), UnsharpParam(l));
      CHECK(check_joint(*r.witness, a1, a2).passes(1e-9));
    }
  }
}

TEST_CASE("feasibility is monotone in lambda") {
  Rng rng(43);
  const double grid[] = {0.3, 0.5, 0.6, 0.7, 0.7071, 0.72, 0.8, 0.9, 1.0};
  for (int t = 0; t < 200; ++t) {
    const auto m = random_bloch(rng), n = random_bloch(rng);
    bool seen_infeasible = false;
    for (double l : grid) {
      const bool ok = qubit_joint_observable(m, n, UnsharpParam(l)).feasible == Verdict::Yes;
      if (seen_infeasible) CHECK_FALSE(ok);
      seen_infeasible = seen_infeasible || !ok;
    }
  }
}

TEST_CASE("criterion invariant under common rotation") {
  Rng rng(44);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_bloch(rng), n = random_bloch(rng);
    const auto r = random_rotation(rng);
    CHECK(qubit_criterion(rotate(r, m), rotate(r, n), 0.8) ==
          doctest::Approx(qubit_criterion(m, n, 0.8)).epsilon(1e-12));
  }
}

TEST_CASE("parallel and antiparallel pairs are always feasible") {
  Rng rng(45);
  for (int t = 0; t < 20; ++t) {
    const auto m = random_bloch(rng);
    const BlochVector neg({-m[0], -m[1], -m[2]});
    CHECK(qubit_joint_observable(m, m, UnsharpParam(1.0)).feasible == Verdict::Yes);
    CHECK(qubit_joint_observable(m, neg, UnsharpParam(1.0)).feasible == Verdict::Yes);
  }
}

TEST_CASE("projector pairs at lambda 0.70") {
  Rng rng(46);
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t) % 7;
    const auto p1 = random_projector(d, static_cast<std::size_t>(rng() % (d + 1)), rng);
    const auto p2 = random_projector(d, static_cast<std::size_t>(rng() % (d + 1)), rng);
    const UnsharpParam l(0.70);
    const auto r = pvm_joint_observable(p1, p2, l);
    REQUIRE(r.feasible == Verdict::Yes);
    const auto res = check_joint(*r.witness, smear(p1.observable(), l), smear(p2.observable(), l));
    CHECK(res.max_marginal() <= 1e-9);
    CHECK(res.normalization <= 1e-9);
    CHECK(res.min_eigenvalue >= -1e-9);
  }
}

TEST_CASE("commuting projectors are sharp jointly measurable") {
  Rng rng(47);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 4;
    const Matrix u = random_unitary(d, rng);
    Matrix d1 = Matrix::Zero(4, 4), d2 = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) d1(i, i) = double(rng() % 2), d2(i, i) = double(rng() % 2);
    const auto p1 = Projector::validate(u * d1 * u.adjoint(), 1e-9);
    const auto p2 = Projector::validate(u * d2 * u.adjoint(), 1e-9);
    const auto r = pvm_joint_observable(p1, p2, UnsharpParam(1.0));
    REQUIRE(r.feasible == Verdict::Yes);
    // product form: G++ = P1 P2
    CHECK(max_abs((*r.witness)[0].matrix() - p1.matrix() * p2.matrix()) <= 1e-9);
    CHECK(check_joint(*r.witness, p1.observable(), p2.observable()).passes(1e-9));
  }
}

TEST_CASE("embedded qubit pair fails above threshold") {
  const Matrix p1 = diag({1, 0, 1});
  Matrix p2 = Matrix::Zero(3, 3);
  p2.block(0, 0, 2, 2) = Projector::qubit({1, 0, 0}).matrix();
  const auto r = pvm_joint_observable(Projector::validate(p1), Projector::validate(p2), UnsharpParam(0.75));
  CHECK(r.feasible == Verdict::No);
}

TEST_CASE("POVM pairs at 1/sqrt2 via dilation") {
  Rng rng(48);
  const UnsharpParam l(kQuantumLambdaOpt);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 1 + static_cast<std::size_t>(t) % 4;
    const auto o1 = DichotomicObservable::from_yes(random_effect(d, rng));
    const auto o2 = DichotomicObservable::from_yes(random_effect(d, rng));
    const auto r = povm_joint_observable(o1, o2, l);
    REQUIRE(r.feasible == Verdict::Yes);
    CHECK(r.witness->dim() == d);
    CHECK(check_joint(*r.witness, smear(o1, l), smear(o2, l)).passes(1e-9));
  }
  const auto o = Projector::qubit({0, 0, 1}).observable();
  try {
    povm_joint_observable(o, o, UnsharpParam(0.72));
    FAIL("expected LambdaTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LambdaTooLarge);
  }
}

TEST_CASE("joint observable validation") {
  std::array<Matrix, 4> g;
  g.fill(0.25 * identity(2));
  CHECK_NOTHROW(JointObservable::validate(g));
  g[0] = 0.3 * identity(2);
  CHECK_THROWS_AS(JointObservable::validate(g), Error);
  g[0] = diag({0.5, 0.0});
  g[1] = diag({-0.25, 0.5});
  CHECK_THROWS_AS(JointObservable::validate(g), Error);
}

TEST_CASE("check_joint reports marginal errors") {
  std::array<Matrix, 4> g;
  g.fill(0.25 * identity(2));
  const auto z = Projector::qubit({0, 0, 1}).observable();
  const auto res = check_joint(g, z, z);
  CHECK(res.normalization <= 1e-15);
  CHECK(res.marginal1 == doctest::Approx(0.5));
  CHECK_FALSE(res.passes(1e-9));
}

TEST_CASE("lambda_opt for a fixed orthogonal pair") {
  const auto r = lambda_opt_search(BlochPair{kZ, kX}, 1e-6);
  CHECK(std::abs(r.lambda_opt - test::kInvSqrt2) <= 1e-6);
  CHECK(r.lambda_opt <= r.upper);
  CHECK(r.oracle_below != Verdict::No);
  CHECK(r.oracle_above != Verdict::Yes);
}

TEST_CASE("lambda_opt for a fixed pair at 60 degrees") {
  const BlochVector n({std::sin(M_PI / 3), 0, std::cos(M_PI / 3)});
  const auto r = lambda_opt_search(BlochPair{kZ, n}, 1e-6);
  CHECK(std::abs(r.lambda_opt - threshold(kZ, n)) <= 1e-6);
}

TEST_CASE("lambda_opt for an observable pair") {
  const auto r = lambda_opt_search(ObservablePair{kZ.projector().observable(), kX.projector().observable()}, 1e-4);
  CHECK(std::abs(r.lambda_opt - test::kInvSqrt2) <= 1e-3);
}

TEST_CASE("lambda_opt worst case on a small mesh") {
  WorstCase wc;
  wc.mesh_size = 200;
  const auto r = lambda_opt_search(wc, 1e-4);
  CHECK(std::abs(r.lambda_opt - test::kInvSqrt2) <= 1e-3);
  REQUIRE(r.attaining_pair);
  CHECK(std::abs(dot(r.attaining_pair->m, r.attaining_pair->n)) <= 0.1);
}

TEST_CASE("lambda_opt tolerance bounds") {
  CHECK_THROWS_AS(lambda_opt_search(BlochPair{kZ, kX}, 1e-7), Error);
  CHECK_THROWS_AS(lambda_opt_search(BlochPair{kZ, kX}, 0.6), Error);
}

}
