#pragma once

#include "uj/operators.hpp"

namespace uj {

/// Unsharpness parameter lambda in (0, 1]. lambda = 1 is the sharp observable.
class UnsharpParam {
 public:
  explicit UnsharpParam(double lambda);

  double value() const { return lambda_; }

 private:
  double lambda_;
};

/// Largest unsharpness for which every pair of quantum dichotomic observables
/// is jointly measurable, 1/sqrt(2).
inline constexpr double kQuantumLambdaOpt = 0.70710678118654752440;

/// yes' = (1+l)/2 yes + (1-l)/2 no, no' = (1-l)/2 yes + (1+l)/2 no.
DichotomicObservable smear(const DichotomicObservable& obs, UnsharpParam lambda);

/// <A> = Tr[rho (E_yes - E_no)].
double mean_value(const DichotomicObservable& obs, const DensityMatrix& state);

struct SmearedMeanReport {
  double via_smearing = 0;  // <A^(l)> from the smeared effects
  double via_scaling = 0;   // l * <A>
  double discrepancy = 0;
};

inline constexpr double kScalingTol = 1e-12;

/// Computes both sides of <A^(l)> = l <A> and throws ValidationError if they
/// disagree by more than kScalingTol.
SmearedMeanReport smeared_mean(const DichotomicObservable& obs, UnsharpParam lambda,
                               const DensityMatrix& state);

}  // namespace uj
