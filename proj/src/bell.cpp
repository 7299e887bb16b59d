#include "uj/bell.hpp"

#include <cmath>

namespace uj {

double correlation(const DensityMatrix& state, const DichotomicObservable& a, const DichotomicObservable& b) {
  if (state.dim() != a.dim() * b.dim()) {
    std::ostringstream os;
    os << "state on C^" << state.dim() << " vs observables on C^" << a.dim() << " (x) C^" << b.dim();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  return trace_product(state.matrix(), tensor(a.difference(), b.difference()));
}

ChshSettings optimal_qubit_settings() {
  const double s = 1.0 / std::sqrt(2.0);
  auto obs = [](std::array<double, 3> v) { return Projector::qubit(v).observable(); };
  return {obs({0, 0, 1}), obs({1, 0, 0}), obs({s, 0, s}), obs({-s, 0, s})};
}

namespace {

ChshReport combine(const DensityMatrix& state, const DichotomicObservable& a1, const DichotomicObservable& a2,
                   const ChshSettings& s) {
  ChshReport r;
  const DichotomicObservable* alice[2] = {&a1, &a2};
  const DichotomicObservable* bob[2] = {&s.b1, &s.b2};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) r.correlators[x][y] = correlation(state, *alice[x], *bob[y]);
  r.signed_value = r.correlators[0][0] + r.correlators[0][1] + r.correlators[1][0] - r.correlators[1][1];
  r.value = std::abs(r.signed_value);
  return r;
}

}  // namespace

ChshReport chsh(const DensityMatrix& state, const ChshSettings& s) {
  ChshReport r = combine(state, s.a1, s.a2, s);
  r.bound = kTsirelsonBound;
  r.within_bound = r.value <= r.bound + kBoundTol;
  return r;
}

ChshReport smeared_chsh(const DensityMatrix& state, const ChshSettings& s, UnsharpParam lambda) {
  const ChshReport sharp = chsh(state, s);
  ChshReport r = combine(state, smear(s.a1, lambda), smear(s.a2, lambda), s);
  const double expected = lambda.value() * sharp.value;
  if (std::abs(r.value - expected) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "smeared CHSH " << r.value << " differs from lambda * CHSH = " << expected;
    throw Error(ErrorCode::ValidationError, os.str());
  }
  r.lambda = lambda.value();
  r.sharp_value = sharp.value;
  r.bound = lambda.value() * kTsirelsonBound;
  r.within_bound = r.value <= r.bound + kBoundTol;
  return r;
}

ExactBox pr_box() {
  BoxTable<Rational> t;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) t.at(x, y, a, b) = ((a ^ b) == (x & y)) ? Rational(1, 2) : Rational(0);
  return ExactBox::validate(t);
}

ExactBox deterministic_box(std::array<int, 2> alice, std::array<int, 2> bob) {
  BoxTable<Rational> t;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) t.at(x, y, a, b) = (a == alice[x] && b == bob[y]) ? Rational(1) : Rational(0);
  return ExactBox::validate(t);
}

ExactBox white_noise_box() {
  BoxTable<Rational> t;
  for (auto& xy : t.p)
    for (auto& y : xy)
      for (auto& a : y)
        for (auto& v : a) v = Rational(1, 4);
  return ExactBox::validate(t);
}

JointDistribution joint_distribution_exists(const OutcomeDistribution& first, const OutcomeDistribution& second) {
  for (const auto* d : {&first, &second}) {
    if (!std::isfinite(d->yes) || !std::isfinite(d->no) || d->yes < 0 || d->no < 0) {
      std::ostringstream os;
      os << "negative or non-finite probability (" << d->yes << ", " << d->no << ")";
      throw Error(ErrorCode::InvalidDistribution, os.str());
    }
    if (std::abs(d->yes + d->no - 1.0) > kBoxTol) {
      std::ostringstream os;
      os << "distribution (" << d->yes << ", " << d->no << ") does not sum to 1";
      throw Error(ErrorCode::InvalidDistribution, os.str());
    }
  }
  JointDistribution out;
  const double f[2] = {first.yes, first.no};
  const double s[2] = {second.yes, second.no};
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) out.p[j][k] = f[j] * s[k];
  double r = 0;
  for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(out.p[j][0] + out.p[j][1] - f[j]));
  for (int k = 0; k < 2; ++k) r = std::max(r, std::abs(out.p[0][k] + out.p[1][k] - s[k]));
  out.marginal_residual = r;
  return out;
}

}  // namespace uj
