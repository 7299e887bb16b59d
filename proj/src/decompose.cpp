#include "uj/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace uj {

namespace {

// Orthonormal basis (columns) of the eigenspace of a Hermitian projector-like
// matrix with eigenvalue above / below 1/2.
Matrix range_basis(const Matrix& proj, bool upper) {
  const EigenSystem es = eigh(proj);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.values.size(); ++i)
    if ((es.values(i) > 0.5) == upper) keep.push_back(i);
  Matrix out(proj.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = es.vectors.col(keep[k]);
  return out;
}

struct PendingBlock {
  std::vector<Vector> vectors;
  int rank_p = 0;
  int rank_q = 0;
  std::optional<double> overlap;
};

int one_dim_order(const PendingBlock& b) {
  if (b.rank_p == 1 && b.rank_q == 1) return 0;
  if (b.rank_p == 1) return 1;
  if (b.rank_q == 1) return 2;
  return 3;
}

}  // namespace

Matrix BlockDecomposition::restrict(const Matrix& m, const Block& block) const {
  const auto n = static_cast<Eigen::Index>(block.dim);
  Matrix cols(unitary.rows(), n);
  for (Eigen::Index k = 0; k < n; ++k) cols.col(k) = unitary.col(static_cast<Eigen::Index>(block.columns[k]));
  return cols.adjoint() * m * cols;
}

double BlockDecomposition::off_block_residual(const Matrix& m) const {
  Matrix conj = unitary.adjoint() * m * unitary;
  for (const Block& b : blocks)
    for (std::size_t i : b.columns)
      for (std::size_t j : b.columns) conj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 0;
  return max_abs(conj);
}

double BlockDecomposition::reconstruction_residual(const Matrix& m) const {
  const Matrix conj = unitary.adjoint() * m * unitary;
  Matrix diag = Matrix::Zero(conj.rows(), conj.cols());
  for (const Block& b : blocks)
    for (std::size_t i : b.columns)
      for (std::size_t j : b.columns) {
        const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
        diag(ii, jj) = conj(ii, jj);
      }
  return max_abs(unitary * diag * unitary.adjoint() - m);
}

BlockDecomposition two_projector_blocks(const Projector& p, const Projector& q) {
  if (p.dim() != q.dim()) {
    std::ostringstream os;
    os << "projectors on C^" << p.dim() << " and C^" << q.dim();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  const Matrix& P = p.matrix();
  const Matrix& Q = q.matrix();
  const auto d = static_cast<Eigen::Index>(p.dim());
  const Matrix I = Matrix::Identity(d, d);

  std::vector<PendingBlock> generic;
  std::vector<PendingBlock> singles;

  // ran p: diagonalize p q p there. Eigenvalue c = cos^2 of the Jordan angle.
  const Matrix ran_p = range_basis(P, true);
  std::vector<Vector> partners;  // the ker-p halves of the generic blocks
  if (ran_p.cols() > 0) {
    const EigenSystem es = eigh(ran_p.adjoint() * Q * ran_p);
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
      const double c = es.values(i);
      Vector x = ran_p * es.vectors.col(i);
      if (c >= 1.0 - kOverlapClusterTol) {
        singles.push_back({{x}, 1, 1, 1.0});
      } else if (c <= kOverlapClusterTol) {
        singles.push_back({{x}, 1, 0, 0.0});
      } else {
        Vector y = (I - P) * (Q * x);
        y /= y.norm();
        partners.push_back(y);
        generic.push_back({{x, y}, 1, 1, std::sqrt(c)});
      }
    }
  }

  // ker p minus the partners: q acts there as a projector.
  const Matrix ker_p = range_basis(P, false);
  if (ker_p.cols() > 0) {
    Matrix rest = ker_p;
    if (!partners.empty()) {
      Matrix y(ker_p.cols(), static_cast<Eigen::Index>(partners.size()));
      for (std::size_t k = 0; k < partners.size(); ++k)
        y.col(static_cast<Eigen::Index>(k)) = ker_p.adjoint() * partners[k];
      const Matrix complement = Matrix::Identity(ker_p.cols(), ker_p.cols()) - y * y.adjoint();
      rest = ker_p * range_basis(complement, true);
    }
    if (rest.cols() > 0) {
      const EigenSystem es = eigh(rest.adjoint() * Q * rest);
      for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        Vector v = rest * es.vectors.col(i);
        if (es.values(i) > 0.5)
          singles.push_back({{v}, 0, 1, 0.0});
        else
          singles.push_back({{v}, 0, 0, 1.0});
      }
    }
  }

  std::stable_sort(generic.begin(), generic.end(),
                   [](const PendingBlock& a, const PendingBlock& b) { return *a.overlap > *b.overlap; });
  std::stable_sort(singles.begin(), singles.end(), [](const PendingBlock& a, const PendingBlock& b) {
    return one_dim_order(a) < one_dim_order(b);
  });

  BlockDecomposition out;
  out.unitary = Matrix(d, d);
  Eigen::Index col = 0;
  auto emit = [&](const PendingBlock& pb) {
    Block b;
    b.dim = pb.vectors.size();
    b.rank_p = pb.rank_p;
    b.rank_q = pb.rank_q;
    b.overlap = pb.overlap;
    for (const Vector& v : pb.vectors) {
      out.unitary.col(col) = v;
      b.columns.push_back(static_cast<std::size_t>(col));
      ++col;
    }
    out.blocks.push_back(std::move(b));
  };
  for (const auto& b : generic) emit(b);
  for (const auto& b : singles) emit(b);
  if (col != d) {
    std::ostringstream os;
    os << "adapted basis has " << col << " vectors for C^" << d;
    throw Error(ErrorCode::ValidationError, os.str());
  }
  return out;
}

BlockDecomposition two_projector_blocks(const Matrix& p, const Matrix& q) {
  return two_projector_blocks(Projector::validate(p, 1e-8), Projector::validate(q, 1e-8));
}

Dilation neumark_dilate(const DichotomicObservable& obs) {
  const std::size_t d = obs.dim();
  const EigenSystem es = eigh(obs.yes().matrix());
  Matrix v = Matrix::Zero(static_cast<Eigen::Index>(2 * d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    const double a = std::clamp(es.values(ii), 0.0, 1.0);
    const double on = std::sqrt(a), off = std::sqrt(1.0 - a);
    for (std::size_t s = 0; s < d; ++s) {
      const auto ss = static_cast<Eigen::Index>(s);
      v(2 * ss, ii) = on * es.vectors(ss, ii);
      v(2 * ss + 1, ii) = off * es.vectors(ss, ii);
    }
  }
  return Dilation{Projector::validate(v * v.adjoint(), 1e-9)};
}

Matrix compress(const Matrix& g) {
  if (!is_square(g)) throw Error(ErrorCode::NotSquare, "compress expects a square matrix");
  if (g.rows() % 2 != 0) {
    std::ostringstream os;
    os << "dimension " << g.rows() << " is not system(x)C^2";
    throw Error(ErrorCode::OddDimension, os.str());
  }
  const Eigen::Index d = g.rows() / 2;
  Matrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) out(i, j) = g(2 * i, 2 * j);
  return out;
}

Effect compress(const Effect& g) { return Effect::validate(compress(g.matrix())); }

}  // namespace uj
