#pragma once

// Bipartite correlations: CHSH values for quantum states, the same with
// unsharp measurements on Alice's side, and no-signaling boxes.

#include <boost/rational.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>

#include "uj/unsharp.hpp"

namespace uj {

using Rational = boost::rational<std::int64_t>;

/// <A (x) B> = Tr[rho (A_yes - A_no) (x) (B_yes - B_no)].
double correlation(const DensityMatrix& state, const DichotomicObservable& a, const DichotomicObservable& b);

/// 2 / lambda_opt for quantum theory, i.e. 2 sqrt(2).
inline constexpr double kTsirelsonBound = 2.0 / kQuantumLambdaOpt;
inline constexpr double kBoundTol = 1e-9;

struct ChshReport {
  /// correlators[x][y] = <A_{x+1} B_{y+1}>
  std::array<std::array<double, 2>, 2> correlators{};
  double signed_value = 0;  // t11 + t12 + t21 - t22
  double value = 0;         // |signed_value|
  double bound = kTsirelsonBound;
  bool within_bound = true;
  std::optional<double> lambda;        // set for smeared reports
  std::optional<double> sharp_value;   // set for smeared reports
};

struct ChshSettings {
  DichotomicObservable a1, a2, b1, b2;
};

/// Alice sigma_z, sigma_x; Bob (sigma_z +- sigma_x)/sqrt(2), as projector
/// observables. With the singlet these reach 2 sqrt(2).
ChshSettings optimal_qubit_settings();

/// Four correlators and their CHSH combination; flags value <= 2/lambda_opt.
ChshReport chsh(const DensityMatrix& state, const ChshSettings& s);

/// CHSH with Alice's two observables smeared by lambda. The value equals
/// lambda * chsh(...).value (checked to 1e-12, ValidationError otherwise); the
/// bound is lambda * 2/lambda_opt, which is 2 at lambda = 1/sqrt(2).
ChshReport smeared_chsh(const DensityMatrix& state, const ChshSettings& s, UnsharpParam lambda);

// ---------------------------------------------------------------------------
// No-signaling boxes. Index convention: p[x][y][a][b] with settings x, y in
// {0, 1} (standing for 1, 2) and outcomes a, b in {0, 1} (standing for +1, -1).

template <class Scalar>
struct BoxTable {
  std::array<std::array<std::array<std::array<Scalar, 2>, 2>, 2>, 2> p{};

  Scalar& at(int x, int y, int a, int b) { return p[x][y][a][b]; }
  const Scalar& at(int x, int y, int a, int b) const { return p[x][y][a][b]; }
};

template <class Scalar>
double to_double(const Scalar& s) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return boost::rational_cast<double>(s);
  else
    return static_cast<double>(s);
}

inline constexpr double kBoxTol = 1e-12;

/// Conditional probability table p(ab|xy) that is normalized and no-signaling.
/// Exact (Rational) tables are checked exactly; floating tables to 1e-12.
template <class Scalar>
class NoSignalingBox {
 public:
  static NoSignalingBox validate(const BoxTable<Scalar>& t);

  const BoxTable<Scalar>& table() const { return t_; }
  Scalar operator()(int x, int y, int a, int b) const { return t_.at(x, y, a, b); }

 private:
  explicit NoSignalingBox(BoxTable<Scalar> t) : t_(t) {}
  BoxTable<Scalar> t_;
};

using ExactBox = NoSignalingBox<Rational>;
using RealBox = NoSignalingBox<double>;

template <class Scalar>
struct BoxChsh {
  std::array<std::array<Scalar, 2>, 2> correlators{};
  Scalar signed_value{};
  Scalar value{};  // |signed_value|
};

/// t_xy = sum_ab (ab) p(ab|xy); CHSH = t11 + t12 + t21 - t22.
template <class Scalar>
BoxChsh<Scalar> box_chsh(const NoSignalingBox<Scalar>& box);

/// p(ab|xy) = 1/2 iff a xor b = x and y.
ExactBox pr_box();
/// a = alice[x], b = bob[y] with outcome bits (0 = +1).
ExactBox deterministic_box(std::array<int, 2> alice, std::array<int, 2> bob);
/// All p = 1/4.
ExactBox white_noise_box();

// ---------------------------------------------------------------------------

struct OutcomeDistribution {
  double yes = 0;
  double no = 0;
};

struct JointDistribution {
  /// p[j][k], j for the first observable, k for the second; 0 = yes.
  std::array<std::array<double, 2>, 2> p{};
  double marginal_residual = 0;  // max deviation from both marginals
};

/// Existence of a 2x2 joint distribution with the given dichotomic marginals.
/// Always exists; returns the product witness. Throws InvalidDistribution on
/// negative or unnormalized input (tolerance 1e-12).
JointDistribution joint_distribution_exists(const OutcomeDistribution& first, const OutcomeDistribution& second);

// ---------------------------------------------------------------------------

template <class Scalar>
NoSignalingBox<Scalar> NoSignalingBox<Scalar>::validate(const BoxTable<Scalar>& t) {
  auto close = [](const Scalar& a, const Scalar& b) {
    if constexpr (std::is_same_v<Scalar, Rational>)
      return a == b;
    else
      return std::abs(a - b) <= kBoxTol;
  };
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidBox, what); };
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      Scalar total{};
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const Scalar& v = t.at(x, y, a, b);
          if constexpr (!std::is_same_v<Scalar, Rational>) {
            if (!std::isfinite(v)) fail("non-finite probability");
          }
          if (v < Scalar{}) {
            std::ostringstream os;
            os << "negativity: p(" << a << b << "|" << x + 1 << y + 1 << ") = " << to_double(v);
            fail(os.str());
          }
          total += v;
        }
      if (!close(total, Scalar{1})) {
        std::ostringstream os;
        os << "normalization: sum_ab p(ab|" << x + 1 << y + 1 << ") = " << to_double(total);
        fail(os.str());
      }
    }
  // Alice's marginal independent of y, Bob's independent of x.
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a) {
      const Scalar m0 = t.at(x, 0, a, 0) + t.at(x, 0, a, 1);
      const Scalar m1 = t.at(x, 1, a, 0) + t.at(x, 1, a, 1);
      if (!close(m0, m1)) {
        std::ostringstream os;
        os << "no-signaling (Bob to Alice): x=" << x + 1 << " a=" << a << " residual " << to_double(m0 - m1);
        fail(os.str());
      }
    }
  for (int y = 0; y < 2; ++y)
    for (int b = 0; b < 2; ++b) {
      const Scalar m0 = t.at(0, y, 0, b) + t.at(0, y, 1, b);
      const Scalar m1 = t.at(1, y, 0, b) + t.at(1, y, 1, b);
      if (!close(m0, m1)) {
        std::ostringstream os;
        os << "no-signaling (Alice to Bob): y=" << y + 1 << " b=" << b << " residual " << to_double(m0 - m1);
        fail(os.str());
      }
    }
  return NoSignalingBox(t);
}

template <class Scalar>
BoxChsh<Scalar> box_chsh(const NoSignalingBox<Scalar>& box) {
  BoxChsh<Scalar> out;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      Scalar t{};
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const Scalar v = box(x, y, a, b);
          if (a == b)
            t += v;
          else
            t -= v;
        }
      out.correlators[x][y] = t;
    }
  out.signed_value = out.correlators[0][0] + out.correlators[0][1] + out.correlators[1][0] - out.correlators[1][1];
  out.value = out.signed_value < Scalar{} ? -out.signed_value : out.signed_value;
  return out;
}

}  // namespace uj
