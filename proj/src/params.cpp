#include "nopo/params.hpp"

#include <cmath>

namespace nopo {

Regime classifyRegime(std::complex<double> lambda, double relTol) {
  double re = lambda.real();
  double mag = std::abs(lambda);
  if (std::abs(re) <= relTol * mag) return Regime::Interjacent;
  return re > 0.0 ? Regime::Monostable : Regime::Bistable;
}

DerivedParams derive(const NopoParams& params) {
  if (!(params.kappa > 0.0) || !(params.gamma > 0.0) || !(params.gamma3 > 0.0))
    fail(ErrorCode::InvalidParams, "kappa, gamma and gamma3 must be strictly positive");
  if (!(params.pumpAmplitude >= 0.0))
    fail(ErrorCode::InvalidParams, "pump amplitude must be non-negative");

  DerivedParams d;
  d.gammaBar = {params.gamma, -params.delta};
  d.gammaBar3 = {params.gamma3, -params.delta3};
  d.lambda = 2.0 * d.gammaBar * d.gammaBar3 / (params.kappa * params.kappa);
  std::complex<double> pump = std::polar(params.pumpAmplitude, params.pumpPhase);
  d.epsilon = pump / params.kappa;
  d.p = std::norm(2.0 * d.epsilon);
  d.eS = 2.0 * params.kappa * params.pumpAmplitude / (params.gamma * params.gamma3);
  d.regime = classifyRegime(d.lambda);
  d.thresholds = thresholds(d);
  return d;
}

ThresholdSet thresholds(const DerivedParams& derived) {
  ThresholdSet t;
  double prod = std::abs(derived.gammaBar * derived.gammaBar3);
  double magLambda = std::abs(derived.lambda);
  t.pMono = magLambda * magLambda;
  t.pBistableLower = derived.lambda.imag() * derived.lambda.imag();
  t.pBistableUpper = t.pMono;
  // kappa recovered from |lambda| = 2|gammaBar*gammaBar3|/kappa^2
  double kappa = std::sqrt(2.0 * prod / magLambda);
  t.eThreshold = prod / kappa;
  double gg = derived.gammaBar.real() * derived.gammaBar3.real();
  t.eSThreshold = 2.0 * kappa * t.eThreshold / gg;
  return t;
}

}  // namespace nopo
