#include "uj/joint.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "uj/parallel.hpp"

namespace uj {

namespace {

using Quad = std::array<Matrix, 4>;

constexpr std::array<int, 4> kFirstSign = {+1, +1, -1, -1};
constexpr std::array<int, 4> kSecondSign = {+1, -1, +1, -1};

double norm3(const std::array<double, 3>& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

std::array<double, 3> add(const std::array<double, 3>& a, const std::array<double, 3>& b, double s = 1.0) {
  return {a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]};
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": C^" << a << " vs C^" << b;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

std::array<Matrix, 2> smeared_pair(const Matrix& proj, double lambda) {
  const auto n = proj.rows();
  Matrix yes = 0.5 * (1.0 - lambda) * Matrix::Identity(n, n) + lambda * proj;
  Matrix no = Matrix::Identity(n, n) - yes;
  return {yes, no};
}

std::array<double, 3> bloch_of(const Matrix& rank_one_2x2) {
  // R = (I + v.s)/2  =>  v_k = Tr[s_k R]
  return {trace_product(pauli_x(), rank_one_2x2), trace_product(pauli_y(), rank_one_2x2),
          trace_product(pauli_z(), rank_one_2x2)};
}

double quad_min_eig(const Quad& g) {
  double lo = std::numeric_limits<double>::infinity();
  for (const Matrix& m : g) lo = std::min(lo, eigh(m).values(0));
  return lo;
}

}  // namespace

// ---------------------------------------------------------------------------

JointObservable JointObservable::validate(const std::array<Matrix, 4>& g, double tol) {
  const auto d = g[0].rows();
  for (const Matrix& m : g) require_same_dim(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(d), "joint effects");
  const double norm = max_abs(g[0] + g[1] + g[2] + g[3] - Matrix::Identity(d, d));
  if (norm > tol) {
    std::ostringstream os;
    os << "effects sum to identity only within " << norm;
    throw Error(ErrorCode::ValidationError, os.str());
  }
  return JointObservable({Effect::validate(g[0], tol), Effect::validate(g[1], tol), Effect::validate(g[2], tol),
                          Effect::validate(g[3], tol)});
}

std::array<Matrix, 4> JointObservable::matrices() const {
  return {g_[0].matrix(), g_[1].matrix(), g_[2].matrix(), g_[3].matrix()};
}

double JointResiduals::max_marginal() const { return std::max({normalization, marginal1, marginal2}); }

bool JointResiduals::passes(double tol) const { return max_marginal() <= tol && min_eigenvalue >= -tol; }

JointResiduals check_joint(const std::array<Matrix, 4>& g, const DichotomicObservable& first,
                           const DichotomicObservable& second) {
  require_same_dim(first.dim(), second.dim(), "marginal observables");
  for (const Matrix& m : g) {
    if (!is_square(m)) throw Error(ErrorCode::NotSquare, "joint effect is not square");
    require_same_dim(static_cast<std::size_t>(m.rows()), first.dim(), "joint effect vs marginal");
  }
  JointResiduals r;
  r.normalization = max_abs(g[kPP] + g[kPM] + g[kMP] + g[kMM] - identity(first.dim()));
  r.marginal1 = std::max(max_abs(g[kPP] + g[kPM] - first.yes().matrix()),
                         max_abs(g[kMP] + g[kMM] - first.no().matrix()));
  r.marginal2 = std::max(max_abs(g[kPP] + g[kMP] - second.yes().matrix()),
                         max_abs(g[kPM] + g[kMM] - second.no().matrix()));
  r.min_eigenvalue = quad_min_eig(g);
  return r;
}

JointResiduals check_joint(const JointObservable& j, const DichotomicObservable& first,
                           const DichotomicObservable& second) {
  return check_joint(j.matrices(), first, second);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

BlochVector::BlochVector(const std::array<double, 3>& v) : v_(v) {
  const double n = norm3(v);
  if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "Bloch vector norm " << n << " is not 1";
    throw Error(ErrorCode::InvalidBlochVector, os.str());
  }
}

BlochVector BlochVector::normalized(const std::array<double, 3>& v) {
  const double n = norm3(v);
  if (!(n > 0) || !std::isfinite(n)) throw Error(ErrorCode::InvalidBlochVector, "cannot normalize zero vector");
  return BlochVector({v[0] / n, v[1] / n, v[2] / n});
}

// ---------------------------------------------------------------------------

double qubit_criterion(const BlochVector& m, const BlochVector& n, double lambda) {
  return lambda * (norm3(add(m.v(), n.v())) + norm3(add(m.v(), n.v(), -1.0)));
}

FeasibilityReport qubit_joint_observable(const BlochVector& m, const BlochVector& n, UnsharpParam lambda) {
  const double l = lambda.value();
  const double sum = norm3(add(m.v(), n.v()));
  const double diff = norm3(add(m.v(), n.v(), -1.0));
  const double t = l * (sum - diff) / 2.0;

  Quad g;
  for (std::size_t k = 0; k < 4; ++k) {
    const int j = kFirstSign[k], s = kSecondSign[k];
    const std::array<double, 3> dir = {j * m[0] + s * n[0], j * m[1] + s * n[1], j * m[2] + s * n[2]};
    g[k] = 0.25 * ((1.0 + j * s * t) * identity(2) + l * pauli_dot(dir));
  }

  FeasibilityReport report;
  report.min_eigenvalue = quad_min_eig(g);
  if (l * (sum + diff) > 2.0 + kCriterionSlack) {
    report.feasible = Verdict::No;
    return report;
  }
  const auto first = smear(m.projector().observable(), lambda);
  const auto second = smear(n.projector().observable(), lambda);
  report.witness = JointObservable::validate(g);
  const JointResiduals r = check_joint(g, first, second);
  report.marginal_residual = r.max_marginal();
  report.feasible = Verdict::Yes;
  return report;
}

FeasibilityReport pvm_joint_observable(const Projector& p1, const Projector& p2, UnsharpParam lambda) {
  require_same_dim(p1.dim(), p2.dim(), "projector pair");
  const double l = lambda.value();
  const BlockDecomposition dec = two_projector_blocks(p1, p2);
  const auto d = static_cast<Eigen::Index>(p1.dim());

  Quad total;
  for (auto& m : total) m = Matrix::Zero(d, d);
  bool all_feasible = true;
  double worst_eig = std::numeric_limits<double>::infinity();

  for (const Block& b : dec.blocks) {
    const Matrix r1 = hermitian_part(dec.restrict(p1.matrix(), b));
    const Matrix r2 = hermitian_part(dec.restrict(p2.matrix(), b));
    const auto a1 = smeared_pair(r1, l);
    const auto a2 = smeared_pair(r2, l);
    const auto n = static_cast<Eigen::Index>(b.dim);

    Quad local;
    if (max_abs(r1 - r2) <= kJointTol) {
      // coincident: outcomes always agree
      local = {a1[0], Matrix::Zero(n, n), Matrix::Zero(n, n), a1[1]};
    } else if (max_abs(r1 * r2 - r2 * r1) <= kJointTol) {
      // commuting: products of commuting effects are effects
      for (std::size_t k = 0; k < 4; ++k)
        local[k] = hermitian_part(a1[kFirstSign[k] > 0 ? 0 : 1] * a2[kSecondSign[k] > 0 ? 0 : 1]);
    } else {
      if (b.dim != 2 || b.rank_p != 1 || b.rank_q != 1 || !b.overlap)
        throw Error(ErrorCode::ValidationError, "non-commuting block outside the rank-1 qubit case");
      const BlochVector m = BlochVector::normalized(bloch_of(r1));
      const BlochVector v = BlochVector::normalized(bloch_of(r2));
      // cos(theta/2) must equal the recorded overlap
      const double dot = m[0] * v[0] + m[1] * v[1] + m[2] * v[2];
      const double half_angle_cos = std::sqrt(std::max(0.0, (1.0 + dot) / 2.0));
      if (std::abs(half_angle_cos - *b.overlap) > 1e-9) {
        std::ostringstream os;
        os << "block overlap " << *b.overlap << " disagrees with Bloch angle cos(theta/2) = " << half_angle_cos;
        throw Error(ErrorCode::ValidationError, os.str());
      }
      const FeasibilityReport qr = qubit_joint_observable(m, v, lambda);
      if (qr.feasible != Verdict::Yes) {
        all_feasible = false;
        worst_eig = std::min(worst_eig, qr.min_eigenvalue);
        continue;
      }
      local = qr.witness->matrices();
    }

    Matrix cols(d, n);
    for (Eigen::Index k = 0; k < n; ++k) cols.col(k) = dec.unitary.col(static_cast<Eigen::Index>(b.columns[k]));
    for (std::size_t k = 0; k < 4; ++k) total[k] += cols * local[k] * cols.adjoint();
  }

  FeasibilityReport report;
  if (!all_feasible) {
    report.feasible = Verdict::No;
    report.min_eigenvalue = worst_eig;
    return report;
  }
  for (auto& m : total) m = hermitian_part(m);
  const JointResiduals r = check_joint(total, smear(p1.observable(), lambda), smear(p2.observable(), lambda));
  report.witness = JointObservable::validate(total);
  report.feasible = Verdict::Yes;
  report.marginal_residual = r.max_marginal();
  report.min_eigenvalue = r.min_eigenvalue;
  return report;
}

FeasibilityReport povm_joint_observable(const DichotomicObservable& o1, const DichotomicObservable& o2,
                                        UnsharpParam lambda) {
  require_same_dim(o1.dim(), o2.dim(), "observable pair");
  if (lambda.value() > kQuantumLambdaOpt + 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "lambda " << lambda.value() << " exceeds 1/sqrt(2); use the oracle instead";
    throw Error(ErrorCode::LambdaTooLarge, os.str());
  }
  const Dilation d1 = neumark_dilate(o1);
  const Dilation d2 = neumark_dilate(o2);
  const FeasibilityReport big = pvm_joint_observable(d1.projector, d2.projector, lambda);
  if (big.feasible != Verdict::Yes)
    throw Error(ErrorCode::ValidationError, "dilated projector pair not jointly measurable below 1/sqrt(2)");

  Quad g;
  for (std::size_t k = 0; k < 4; ++k) g[k] = hermitian_part(compress((*big.witness)[k].matrix()));
  const JointResiduals r = check_joint(g, smear(o1, lambda), smear(o2, lambda));
  FeasibilityReport report;
  report.witness = JointObservable::validate(g);
  report.feasible = Verdict::Yes;
  report.marginal_residual = r.max_marginal();
  report.min_eigenvalue = r.min_eigenvalue;
  return report;
}

// ---------------------------------------------------------------------------
// Oracle. Unknowns are four Hermitian matrices (G++, G+-, G-+, G--). The
// affine set is parametrized by X = G++:
//   G+- = Y1 - X,  G-+ = Y2 - X,  G-- = N1 - Y2 + X.

namespace {

class AffineSet {
 public:
  AffineSet(const Matrix& y1, const Matrix& n1, const Matrix& y2) : y1_(y1), n1_(n1), y2_(y2) {}

  Quad point(const Matrix& x) const { return {x, y1_ - x, y2_ - x, n1_ - y2_ + x}; }

  /// Frobenius-nearest point of the affine set.
  Quad project(const Quad& z) const {
    Matrix x = 0.25 * (z[0] - z[1] - z[2] + z[3] + y1_ + 2.0 * y2_ - n1_);
    return point(hermitian_part(x));
  }

  /// Base point at X = 0.
  Quad base() const { return point(Matrix::Zero(y1_.rows(), y1_.cols())); }

 private:
  Matrix y1_, n1_, y2_;
};

Quad project_psd(const Quad& z) {
  Quad out;
  for (std::size_t k = 0; k < 4; ++k) {
    const EigenSystem es = eigh(z[k]);
    const RealVector clipped = es.values.cwiseMax(0.0);
    out[k] = es.vectors * clipped.asDiagonal() * es.vectors.adjoint();
  }
  return out;
}

Quad plus(const Quad& a, const Quad& b, double s = 1.0) {
  Quad out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = a[k] + s * b[k];
  return out;
}

double frobenius(const Quad& a) {
  double s = 0;
  for (const Matrix& m : a) s += m.squaredNorm();
  return std::sqrt(s);
}

double inner(const Quad& a, const Quad& b) {
  double s = 0;
  for (std::size_t k = 0; k < 4; ++k) s += (a[k].adjoint() * b[k]).trace().real();
  return s;
}

// w is normal to the affine set and each w_k >= -eps I. Any feasible G then
// has <w, G> = <w, base> and <w, G> >= -eps Tr[sum G] = -eps d, so
// <w, base> < -eps d rules feasibility out.
bool certifies_infeasible(Quad w, const AffineSet& set, std::size_t dim) {
  const Matrix tangent = 0.25 * (w[0] - w[1] - w[2] + w[3]);
  w[0] -= tangent;
  w[1] += tangent;
  w[2] += tangent;
  w[3] -= tangent;
  const double scale = frobenius(w);
  if (!(scale > 0)) return false;
  for (auto& m : w) m /= scale;
  double eps = 0;
  for (const Matrix& m : w) eps = std::max(eps, -eigh(m).values(0));
  const double value = inner(w, set.base());
  return value < -eps * static_cast<double>(dim) - 1e-12;
}

}  // namespace

FeasibilityReport feasibility_oracle(const DichotomicObservable& first, const DichotomicObservable& second,
                                     const OracleOptions& options) {
  require_same_dim(first.dim(), second.dim(), "observable pair");
  const std::size_t dim = first.dim();
  const auto d = static_cast<Eigen::Index>(dim);
  const AffineSet set(first.yes().matrix(), first.no().matrix(), second.yes().matrix());

  Quad x;
  for (auto& m : x) m = 0.25 * Matrix::Identity(d, d);
  Quad p, q;
  for (std::size_t k = 0; k < 4; ++k) {
    p[k] = Matrix::Zero(d, d);
    q[k] = Matrix::Zero(d, d);
  }

  FeasibilityReport report;
  double best = std::numeric_limits<double>::infinity();
  long stalled = 0;
  for (long it = 1; it <= options.max_iter; ++it) {
    // Dykstra: affine step, then cone step, each with its correction term.
    const Quad y = set.project(plus(x, p));
    p = plus(plus(x, p), y, -1.0);
    const Quad yq = plus(y, q);
    x = project_psd(yq);
    q = plus(yq, x, -1.0);

    const Quad a = set.project(x);
    const double lo = quad_min_eig(a);
    const Quad gap = plus(x, a, -1.0);
    const double dist = frobenius(gap);
    report.iterations = it;
    report.min_eigenvalue = lo;
    if (lo >= -options.tol) {
      const JointResiduals r = check_joint(a, first, second);
      report.feasible = Verdict::Yes;
      report.witness = JointObservable::validate(a, std::max(options.tol, kJointTol));
      report.marginal_residual = r.max_marginal();
      return report;
    }
    if (dist < best * (1.0 - 1e-3)) {
      best = dist;
      stalled = 0;
    } else if (++stalled >= options.stall_window && dist > 10.0 * options.tol) {
      if (certifies_infeasible(gap, set, dim)) {
        report.feasible = Verdict::No;
        report.certified = true;
        report.marginal_residual = dist;
        return report;
      }
      stalled = 0;
    }
    report.marginal_residual = dist;
  }
  report.feasible = Verdict::Undetermined;
  return report;
}

FeasibilityReport decide_joint(const DichotomicObservable& o1, const DichotomicObservable& o2, UnsharpParam lambda) {
  auto as_projector = [](const DichotomicObservable& o) -> std::optional<Projector> {
    const Matrix& y = o.yes().matrix();
    if (max_abs(y * y - y) > 1e-9) return std::nullopt;
    return Projector::validate(y, 1e-9);
  };
  const auto p1 = as_projector(o1);
  const auto p2 = as_projector(o2);
  if (p1 && p2) return pvm_joint_observable(*p1, *p2, lambda);
  if (lambda.value() <= kQuantumLambdaOpt + 1e-12) return povm_joint_observable(o1, o2, lambda);
  return feasibility_oracle(smear(o1, lambda), smear(o2, lambda));
}

// ---------------------------------------------------------------------------

namespace {

struct Bracket {
  double lo = 0;  // feasible (0 means nothing feasible was seen)
  double hi = 1;  // infeasible
  long evaluations = 0;
};

Bracket bisect(const std::function<bool(double)>& feasible, double tol) {
  Bracket b;
  ++b.evaluations;
  if (feasible(1.0)) {
    b.lo = b.hi = 1.0;
    return b;
  }
  constexpr long kBudget = 200;
  long steps = 0;
  while (b.hi - b.lo > tol) {
    if (++steps > kBudget) throw Error(ErrorCode::NonConvergence, "bisection exceeded its iteration budget");
    const double mid = 0.5 * (b.lo + b.hi);
    ++b.evaluations;
    (feasible(mid) ? b.lo : b.hi) = mid;
  }
  if (b.lo <= 0.0) throw Error(ErrorCode::NonConvergence, "no feasible unsharpness found above 0");
  return b;
}

double bloch_threshold(const BlochVector& m, const BlochVector& n, double tol, long* evals) {
  const Bracket b = bisect(
      [&](double l) { return qubit_joint_observable(m, n, UnsharpParam(l)).feasible == Verdict::Yes; }, tol);
  if (evals) *evals += b.evaluations;
  return b.lo;
}

std::vector<std::array<double, 3>> fibonacci_sphere(std::size_t n, std::uint64_t seed) {
  // Random rotation from a normalized Gaussian quaternion.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  double qw = gauss(rng), qx = gauss(rng), qy = gauss(rng), qz = gauss(rng);
  const double qn = std::sqrt(qw * qw + qx * qx + qy * qy + qz * qz);
  qw /= qn, qx /= qn, qy /= qn, qz /= qn;
  const double r[3][3] = {
      {1 - 2 * (qy * qy + qz * qz), 2 * (qx * qy - qz * qw), 2 * (qx * qz + qy * qw)},
      {2 * (qx * qy + qz * qw), 1 - 2 * (qx * qx + qz * qz), 2 * (qy * qz - qx * qw)},
      {2 * (qx * qz - qy * qw), 2 * (qy * qz + qx * qw), 1 - 2 * (qx * qx + qy * qy)},
  };
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  std::vector<std::array<double, 3>> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    const double v[3] = {rho * std::cos(phi), rho * std::sin(phi), z};
    std::array<double, 3> w{};
    for (int a = 0; a < 3; ++a) w[a] = r[a][0] * v[0] + r[a][1] * v[1] + r[a][2] * v[2];
    const double wn = norm3(w);
    pts[i] = {w[0] / wn, w[1] / wn, w[2] / wn};
  }
  return pts;
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

struct Candidate {
  double threshold = 2.0;
  std::size_t anchor = 0;
  std::size_t partner = 0;
};

// Minimizes the threshold over n near n0 with m fixed. The two search
// directions (towards m along the great circle, and around m) keep separate
// step sizes.
std::pair<BlochVector, double> refine(const BlochVector& m, BlochVector n, double value, double step, double tol,
                                      long* evals) {
  double steps[2] = {step, step};
  const double floor = std::max(tol, 1e-6);
  for (int round = 0; round < 400 && (steps[0] > floor || steps[1] > floor); ++round) {
    std::array<double, 3> around = cross(m.v(), n.v());
    if (norm3(around) < 1e-12) around = cross(n.v(), {1.0, 0.0, 0.0});
    if (norm3(around) < 1e-12) around = cross(n.v(), {0.0, 1.0, 0.0});
    const std::array<double, 3> polar = cross(around, n.v());
    const std::array<double, 3> dirs[2] = {polar, around};
    for (int k = 0; k < 2; ++k) {
      if (steps[k] <= floor) continue;
      const double dn = norm3(dirs[k]);
      bool moved = false;
      for (double sign : {+1.0, -1.0}) {
        const BlochVector trial = BlochVector::normalized(add(n.v(), dirs[k], sign * steps[k] / dn));
        const double t = bloch_threshold(m, trial, tol, evals);
        if (t < value) {
          n = trial;
          value = t;
          moved = true;
          break;
        }
      }
      steps[k] *= moved ? 1.5 : 0.5;
    }
  }
  return {n, value};
}

}  // namespace

LambdaOptResult lambda_opt_search(const PairSource& source, double tol) {
  if (!(tol >= 1e-6) || !(tol <= 0.5)) {
    std::ostringstream os;
    os << "tolerance " << tol << " must lie in [1e-6, 0.5]";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  LambdaOptResult result;
  std::optional<ObservablePair> confirm;

  if (const auto* bp = std::get_if<BlochPair>(&source)) {
    const Bracket b = bisect(
        [&](double l) { return qubit_joint_observable(bp->m, bp->n, UnsharpParam(l)).feasible == Verdict::Yes; },
        tol);
    result.lambda_opt = b.lo;
    result.upper = b.hi;
    result.evaluations = b.evaluations;
    result.attaining_pair = *bp;
    confirm = ObservablePair{bp->m.projector().observable(), bp->n.projector().observable()};
  } else if (const auto* op = std::get_if<ObservablePair>(&source)) {
    const Bracket b = bisect(
        [&](double l) { return decide_joint(op->first, op->second, UnsharpParam(l)).feasible == Verdict::Yes; },
        tol);
    result.lambda_opt = b.lo;
    result.upper = b.hi;
    result.evaluations = b.evaluations;
    confirm = *op;
  } else {
    const auto& wc = std::get<WorstCase>(source);
    if (wc.mesh_size < 8) throw Error(ErrorCode::InvalidArgument, "worst-case mesh needs at least 8 points");
    const auto mesh = fibonacci_sphere(wc.mesh_size, wc.seed);
    const std::size_t anchors = std::min<std::size_t>(16, wc.mesh_size);
    const std::size_t stride = wc.mesh_size / anchors;

    std::vector<Candidate> best_per_anchor(anchors);
    std::vector<long> evals(anchors, 0);
    parallel_for(anchors, wc.threads, [&](std::size_t a) {
      const BlochVector m(mesh[a * stride]);
      Candidate c;
      c.anchor = a * stride;
      for (std::size_t j = 0; j < mesh.size(); ++j) {
        const double t = bloch_threshold(m, BlochVector(mesh[j]), tol, &evals[a]);
        if (t < c.threshold) {
          c.threshold = t;
          c.partner = j;
        }
      }
      best_per_anchor[a] = c;
    });
    Candidate best = best_per_anchor.front();
    for (const auto& c : best_per_anchor)
      if (c.threshold < best.threshold) best = c;
    for (long e : evals) result.evaluations += e;

    const BlochVector m(mesh[best.anchor]);
    const double spacing = std::sqrt(4.0 * M_PI / static_cast<double>(wc.mesh_size));
    auto [n, value] = refine(m, BlochVector(mesh[best.partner]), best.threshold, spacing, tol, &result.evaluations);

    const Bracket b = bisect(
        [&](double l) { return qubit_joint_observable(m, n, UnsharpParam(l)).feasible == Verdict::Yes; }, tol);
    result.lambda_opt = b.lo;
    result.upper = b.hi;
    result.attaining_pair = BlochPair{m, n};
    confirm = ObservablePair{m.projector().observable(), n.projector().observable()};
  }

  OracleOptions oracle;
  oracle.tol = 1e-9;
  oracle.max_iter = 20000;
  result.oracle_below =
      feasibility_oracle(smear(confirm->first, UnsharpParam(result.lambda_opt)),
                         smear(confirm->second, UnsharpParam(result.lambda_opt)), oracle)
          .feasible;
  if (result.oracle_below == Verdict::No) {
    std::ostringstream os;
    os << "oracle rejects the returned lambda " << result.lambda_opt;
    throw Error(ErrorCode::ValidationError, os.str());
  }
  if (result.upper > result.lambda_opt) {
    result.oracle_above = feasibility_oracle(smear(confirm->first, UnsharpParam(result.upper)),
                                             smear(confirm->second, UnsharpParam(result.upper)), oracle)
                              .feasible;
    if (result.oracle_above == Verdict::Yes) {
      std::ostringstream os;
      os << "oracle accepts lambda " << result.upper << " that the construction rejects";
      throw Error(ErrorCode::ValidationError, os.str());
    }
  }
  return result;
}

}  // namespace uj
