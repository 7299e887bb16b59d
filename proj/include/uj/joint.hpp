#pragma once

// Joint observables for pairs of unsharp dichotomic observables: the closed-form
// qubit construction, the blockwise assembly for projector pairs on C^d, the
// dilation route for general dichotomic POVMs, an independent alternating
// projection oracle, and the search for the largest feasible unsharpness.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "uj/decompose.hpp"
#include "uj/unsharp.hpp"

namespace uj {

inline constexpr double kJointTol = 1e-9;

/// Outcome index order for the four effects: (+,+), (+,-), (-,+), (-,-).
enum Outcome : std::size_t { kPP = 0, kPM = 1, kMP = 2, kMM = 3 };

/// Four effects summing to the identity.
class JointObservable {
 public:
  static JointObservable validate(const std::array<Matrix, 4>& g, double tol = kJointTol);

  const Effect& operator[](std::size_t k) const { return g_[k]; }
  const std::array<Effect, 4>& effects() const { return g_; }
  std::array<Matrix, 4> matrices() const;
  std::size_t dim() const { return g_[0].dim(); }

 private:
  explicit JointObservable(std::array<Effect, 4> g) : g_(std::move(g)) {}
  std::array<Effect, 4> g_;
};

struct JointResiduals {
  double normalization = 0;  // |sum G - I|
  double marginal1 = 0;      // |G++ + G+- - A1_yes|, |G-+ + G-- - A1_no|
  double marginal2 = 0;      // |G++ + G-+ - A2_yes|, |G+- + G-- - A2_no|
  double min_eigenvalue = 0; // over the four effects

  double max_marginal() const;
  bool passes(double tol) const;
};

/// Residuals of the normalization and both marginal conditions for a candidate
/// quadruple (which need not itself be a valid joint observable).
JointResiduals check_joint(const std::array<Matrix, 4>& g, const DichotomicObservable& first,
                           const DichotomicObservable& second);
JointResiduals check_joint(const JointObservable& j, const DichotomicObservable& first,
                           const DichotomicObservable& second);

enum class Verdict { Yes, No, Undetermined };
const char* to_string(Verdict v);

struct FeasibilityReport {
  Verdict feasible = Verdict::Undetermined;
  std::optional<JointObservable> witness;
  double marginal_residual = 0;
  double min_eigenvalue = 0;
  long iterations = 0;
  /// Oracle only: a separating certificate was verified.
  bool certified = false;
};

/// Unit 3-vector.
class BlochVector {
 public:
  explicit BlochVector(const std::array<double, 3>& v);
  /// Normalizes v (must be nonzero).
  static BlochVector normalized(const std::array<double, 3>& v);

  const std::array<double, 3>& v() const { return v_; }
  double operator[](std::size_t k) const { return v_[k]; }
  Projector projector() const { return Projector::qubit(v_); }

 private:
  std::array<double, 3> v_;
};

/// lambda (|m+n| + |m-n|); the pair is jointly measurable iff this is <= 2.
double qubit_criterion(const BlochVector& m, const BlochVector& n, double lambda);

/// Closed-form criterion values within this of 2 count as feasible; covers the
/// rounding of lambda = 1/sqrt(2) itself.
inline constexpr double kCriterionSlack = 1e-10;

/// Decides joint measurability of the smeared qubit projectors (I + m.s)/2 and
/// (I + n.s)/2. When feasible the witness is
///   G_jk = [(1 + jk t) I + lambda (j m + k n).sigma] / 4,
///   t = lambda (|m+n| - |m-n|) / 2.
/// When infeasible the report carries the (negative) minimum eigenvalue of that
/// candidate.
FeasibilityReport qubit_joint_observable(const BlochVector& m, const BlochVector& n, UnsharpParam lambda);

/// Blockwise construction for two projectors on C^d. Per block:
///  - restrictions equal:         G++ = A+, G-- = A-, G+- = G-+ = 0
///  - restrictions commute:       G_jk = A1_j A2_k (product form)
///  - rank-1/rank-1, overlap in (0,1): qubit construction on the block
/// The first two cover every 1-dim block and every 2-dim block where either
/// restriction has rank 0 or 2, so only the last can fail (lambda > 1/sqrt 2).
FeasibilityReport pvm_joint_observable(const Projector& p1, const Projector& p2, UnsharpParam lambda);

/// Dilates both POVMs onto C^d (x) C^2 with the shared ancilla convention,
/// builds the projector-pair witness there and compresses each effect back.
/// Throws LambdaTooLarge above 1/sqrt(2).
FeasibilityReport povm_joint_observable(const DichotomicObservable& o1, const DichotomicObservable& o2,
                                        UnsharpParam lambda);

struct OracleOptions {
  long max_iter = 20000;
  double tol = 1e-9;
  long stall_window = 500;
};

/// Independent check of joint measurability of two (already smeared)
/// observables: Dykstra alternating projections between the product of four
/// PSD cones and the affine set cut out by the normalization and marginal
/// conditions. Yes when an affine iterate is PSD to -tol (that iterate is the
/// witness); No when the distance to the affine set stalls above 10 tol for
/// stall_window iterations and the gap vector verifies as a separating
/// certificate; Undetermined otherwise.
FeasibilityReport feasibility_oracle(const DichotomicObservable& first, const DichotomicObservable& second,
                                     const OracleOptions& options = {});

/// Decision used by sweeps: the projector path if both observables are sharp,
/// the dilation path for lambda <= 1/sqrt(2), the oracle otherwise.
FeasibilityReport decide_joint(const DichotomicObservable& o1, const DichotomicObservable& o2,
                               UnsharpParam lambda);

struct BlochPair {
  BlochVector m;
  BlochVector n;
};

struct ObservablePair {
  DichotomicObservable first;
  DichotomicObservable second;
};

struct WorstCase {
  std::size_t mesh_size = 1000;
  std::uint64_t seed = 0x5eedULL;
  unsigned threads = 1;
};

using PairSource = std::variant<BlochPair, ObservablePair, WorstCase>;

struct LambdaOptResult {
  double lambda_opt = 0;
  double upper = 0;  // smallest lambda found infeasible (1 if none)
  std::optional<BlochPair> attaining_pair;
  Verdict oracle_below = Verdict::Undetermined;  // oracle at lambda_opt
  Verdict oracle_above = Verdict::Undetermined;  // oracle just above it
  long evaluations = 0;
};

/// Bisection over (0, 1] for the largest jointly measurable lambda, using the
/// constructive decision. The returned point is confirmed by the oracle (a
/// contradicting oracle verdict throws ValidationError). In worst-case mode the
/// threshold is minimized over a rotated Fibonacci mesh of Bloch pairs and then
/// refined around the best pair. Requires tol >= 1e-6.
LambdaOptResult lambda_opt_search(const PairSource& source, double tol);

}  // namespace uj
