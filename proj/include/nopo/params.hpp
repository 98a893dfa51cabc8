#pragma once

#include <complex>

#include "nopo/errors.hpp"

namespace nopo {

// Physical rates and drive of the two-mode parametric oscillator.
// kappa: mode coupling, gamma: subharmonic decay, gamma3: pump decay,
// delta / delta3: subharmonic and pump detunings, pump in amplitude/phase form.
struct NopoParams {
  double kappa = 0.0;
  double gamma = 0.0;
  double gamma3 = 0.0;
  double delta = 0.0;
  double delta3 = 0.0;
  double pumpAmplitude = 0.0;  // |E| >= 0
  double pumpPhase = 0.0;      // radians
};

enum class Regime { Monostable, Interjacent, Bistable };

inline const char* regimeName(Regime r) {
  switch (r) {
    case Regime::Monostable: return "monostable";
    case Regime::Interjacent: return "interjacent";
    case Regime::Bistable: return "bistable";
  }
  return "?";
}

struct ThresholdSet {
  double pMono;            // |Lambda|^2
  double pBistableLower;   // (Im Lambda)^2
  double pBistableUpper;   // |Lambda|^2
  double eThreshold;       // |gammaBar*gammaBar3| / kappa
  double eSThreshold;      // same point in E_s units
};

struct DerivedParams {
  std::complex<double> gammaBar;   // gamma - i*delta
  std::complex<double> gammaBar3;  // gamma3 - i*delta3
  std::complex<double> lambda;     // 2*gammaBar*gammaBar3 / kappa^2
  std::complex<double> epsilon;    // E / kappa
  double p;                        // |2 epsilon|^2
  double eS;                       // 2*kappa*|E| / (gamma*gamma3)
  Regime regime;
  ThresholdSet thresholds;
};

// Regime from the sign of Re Lambda. Exact zero is measure-zero in floating
// point, so the interjacent band is |Re Lambda| <= relTol * |Lambda|.
Regime classifyRegime(std::complex<double> lambda, double relTol = 1e-9);

DerivedParams derive(const NopoParams& params);
ThresholdSet thresholds(const DerivedParams& derived);

// the adiabatic elimination of the pump mode assumes gamma3 >> gamma
inline bool adiabaticLimitSatisfied(const NopoParams& p) { return p.gamma3 / p.gamma >= 10.0; }

// pump amplitude |E| that produces the requested dimensionless drive
inline double pumpAmplitudeFromEs(const NopoParams& p, double eS) {
  return eS * p.gamma * p.gamma3 / (2.0 * p.kappa);
}
inline double pumpAmplitudeFromP(const NopoParams& p, double pScaled) {
  return p.kappa * std::sqrt(pScaled) / 2.0;
}

}  // namespace nopo
