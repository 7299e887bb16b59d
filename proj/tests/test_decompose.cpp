#include <doctest.h>

#include "helpers.hpp"
#include "uj/decompose.hpp"
#include "uj/sampling.hpp"

using namespace uj;
using uj::test::diag;

namespace {

int rank_of(const Matrix& m) {
  int r = 0;
  for (double v : eigh(m).values) r += v > 0.5;
  return r;
}

void check_blocks(const Projector& p, const Projector& q) {
  const BlockDecomposition bd = two_projector_blocks(p, q);
  const auto d = static_cast<Eigen::Index>(p.dim());
  CHECK(max_abs(bd.unitary.adjoint() * bd.unitary - identity(d)) <= 1e-9);
  CHECK(bd.off_block_residual(p.matrix()) <= 1e-9);
  CHECK(bd.off_block_residual(q.matrix()) <= 1e-9);
  CHECK(bd.reconstruction_residual(p.matrix()) <= 1e-9);
  CHECK(bd.reconstruction_residual(q.matrix()) <= 1e-9);
  std::size_t total = 0;
  int rp = 0, rq = 0;
  for (const Block& b : bd.blocks) {
    CHECK((b.dim == 1 || b.dim == 2));
    total += b.dim;
    rp += b.rank_p;
    rq += b.rank_q;
    const Matrix pb = bd.restrict(p.matrix(), b);
    const Matrix qb = bd.restrict(q.matrix(), b);
    CHECK(rank_of(pb) == b.rank_p);
    CHECK(rank_of(qb) == b.rank_q);
    if (b.dim == 2 && b.rank_p == 1 && b.rank_q == 1) {
      // overlap^2 = Tr(pb qb) for rank-one restrictions
      REQUIRE(b.overlap.has_value());
      CHECK(*b.overlap * *b.overlap == doctest::Approx(trace_product(pb, qb)).epsilon(1e-9));
      CHECK(*b.overlap > 0);
      CHECK(*b.overlap < 1);
    }
  }
  CHECK(total == p.dim());
  CHECK(rp == static_cast<int>(p.rank()));
  CHECK(rq == static_cast<int>(q.rank()));
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("z and x qubit projectors form one block") {
  const auto bd = two_projector_blocks(Projector::qubit({0, 0, 1}), Projector::qubit({1, 0, 0}));
  REQUIRE(bd.blocks.size() == 1);
  CHECK(bd.blocks[0].dim == 2);
  CHECK(*bd.blocks[0].overlap == doctest::Approx(test::kInvSqrt2).epsilon(1e-12));
}

TEST_CASE("overlap is cos(theta/2) for qubit projectors") {
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_bloch(rng), n = random_bloch(rng);
    double dot = 0;
    for (int k = 0; k < 3; ++k) dot += m[k] * n[k];
    const auto bd = two_projector_blocks(m.projector(), n.projector());
    REQUIRE(bd.blocks.size() == 1);
    CHECK(*bd.blocks[0].overlap == doctest::Approx(std::sqrt((1 + dot) / 2)).epsilon(1e-9));
  }
}

TEST_CASE("commuting diagonal projectors split into singles") {
  const auto p = Projector::validate(diag({1, 1, 0, 0}));
  const auto q = Projector::validate(diag({1, 0, 1, 0}));
  const auto bd = two_projector_blocks(p, q);
  REQUIRE(bd.blocks.size() == 4);
  const int expected[4][2] = {{1, 1}, {1, 0}, {0, 1}, {0, 0}};
  for (int i = 0; i < 4; ++i) {
    CHECK(bd.blocks[i].dim == 1);
    CHECK(bd.blocks[i].rank_p == expected[i][0]);
    CHECK(bd.blocks[i].rank_q == expected[i][1]);
  }
  check_blocks(p, q);
}

TEST_CASE("coincident projectors") {
  Rng rng(32);
  const auto p = random_projector(5, 2, rng);
  const auto bd = two_projector_blocks(p, p);
  for (const Block& b : bd.blocks) {
    CHECK(b.dim == 1);
    CHECK(b.rank_p == b.rank_q);
  }
  check_blocks(p, p);
}

TEST_CASE("random projector pairs") {
  Rng rng(33);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t) % 10;
    const std::size_t r1 = static_cast<std::size_t>(rng() % (d + 1));
    const std::size_t r2 = static_cast<std::size_t>(rng() % (d + 1));
    check_blocks(random_projector(d, r1, rng), random_projector(d, r2, rng));
  }
}

TEST_CASE("blocks ordered by descending overlap") {
  Rng rng(34);
  const auto bd = two_projector_blocks(random_projector(8, 4, rng), random_projector(8, 4, rng));
  double prev = 2;
  bool seen_single = false;
  for (const Block& b : bd.blocks) {
    if (b.dim == 2) {
      CHECK_FALSE(seen_single);
      CHECK(*b.overlap <= prev);
      prev = *b.overlap;
    } else {
      seen_single = true;
    }
  }
}

TEST_CASE("raw matrix overload validates") {
  CHECK_THROWS_AS(two_projector_blocks(diag({1, 0.5}), diag({1, 0})), Error);
  CHECK_THROWS_AS(two_projector_blocks(diag({1, 0}), diag({1, 0, 0})), Error);
  Matrix near = diag({1, 0});
  near(1, 1) = 1e-9;
  CHECK_NOTHROW(two_projector_blocks(near, diag({0, 1})));
}

TEST_CASE("dilation of the maximally uninformative effect") {
  const auto obs = DichotomicObservable::from_yes(Effect::validate(0.5 * identity(2)));
  const Dilation dil = neumark_dilate(obs);
  CHECK(dil.convention == kAncillaConvention);
  // basis |i a> at index 2i + a; v_i = (|i0> + |i1>)/sqrt2
  Matrix expected = Matrix::Zero(4, 4);
  expected.block(0, 0, 2, 2).setConstant(0.5);
  expected.block(2, 2, 2, 2).setConstant(0.5);
  CHECK(max_abs(dil.projector.matrix() - expected) <= 1e-15);
  CHECK(max_abs(compress(dil.projector.matrix()) - 0.5 * identity(2)) <= 1e-15);
}

TEST_CASE("dilate then compress round trip") {
  Rng rng(35);
  for (std::size_t d : {1u, 2u, 3u, 4u, 8u}) {
    for (int t = 0; t < 20; ++t) {
      const auto obs = DichotomicObservable::from_yes(random_effect(d, rng));
      const Dilation dil = neumark_dilate(obs);
      CHECK(dil.projector.dim() == 2 * d);
      CHECK(max_abs(compress(dil.projector.matrix()) - obs.yes().matrix()) <= 1e-12);
      const Matrix comp = identity(static_cast<Eigen::Index>(2 * d)) - dil.projector.matrix();
      CHECK(max_abs(compress(comp) - obs.no().matrix()) <= 1e-12);
    }
  }
}

TEST_CASE("dilation of a sharp effect") {
  const auto obs = Projector::qubit({0, 0, 1}).observable();
  const Matrix p = neumark_dilate(obs).projector.matrix();
  CHECK(max_abs(p - diag({1, 0, 0, 1})) <= 1e-15);
}

TEST_CASE("compress rejects odd dimension") {
  try {
    compress(Matrix(identity(3)));
    FAIL("expected OddDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddDimension);
  }
}

}
