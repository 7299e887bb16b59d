#include "uj/unsharp.hpp"

#include <cmath>
#include <sstream>

namespace uj {

UnsharpParam::UnsharpParam(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    std::ostringstream os;
    os << "unsharpness " << lambda << " outside (0, 1]";
    throw Error(ErrorCode::InvalidLambda, os.str());
  }
}

DichotomicObservable smear(const DichotomicObservable& obs, UnsharpParam lambda) {
  const double l = lambda.value();
  const double keep = 0.5 * (1.0 + l);
  const double flip = 0.5 * (1.0 - l);
  const Matrix& yes = obs.yes().matrix();
  const Matrix& no = obs.no().matrix();
  return DichotomicObservable::validate(keep * yes + flip * no, flip * yes + keep * no);
}

double mean_value(const DichotomicObservable& obs, const DensityMatrix& state) {
  if (obs.dim() != state.dim()) {
    std::ostringstream os;
    os << "observable on C^" << obs.dim() << " vs state on C^" << state.dim();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  return trace_product(state.matrix(), obs.difference());
}

SmearedMeanReport smeared_mean(const DichotomicObservable& obs, UnsharpParam lambda,
                               const DensityMatrix& state) {
  SmearedMeanReport r;
  r.via_smearing = mean_value(smear(obs, lambda), state);
  r.via_scaling = lambda.value() * mean_value(obs, state);
  r.discrepancy = std::abs(r.via_smearing - r.via_scaling);
  if (r.discrepancy > kScalingTol) {
    std::ostringstream os;
    os << "smeared mean " << r.via_smearing << " vs lambda*mean " << r.via_scaling;
    throw Error(ErrorCode::ValidationError, os.str());
  }
  return r;
}

}  // namespace uj
