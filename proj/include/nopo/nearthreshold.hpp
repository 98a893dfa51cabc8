#pragma once

#include <complex>

#include "nopo/params.hpp"

namespace nopo {

// Near-threshold expansion of the minimized variance for monostable dynamics,
// in the small parameter s = |lambda|^{-1/2} with c = sqrt(cos(arg lambda)).
// The offset coefficient f1(c) is known only through the bound f1 > 0.0164;
// it enters as a calibration scalar measured from the exact series.
struct NearThresholdParams {
  double s = 0.0;
  double c = 0.0;
  double iOverIth = 0.0;  // I/I_th = p/|lambda|^2
  double f2 = 0.0;
  double f3 = 0.0;
  static constexpr double f1LowerBound = 0.0164;
};

struct FPair {
  double f2;
  double f3;
};

// printed polynomial fits, domain c in [0, 1]
FPair fPolynomials(double c);

NearThresholdParams nearThresholdParams(std::complex<double> lambda, double iOverIth);

// V = 0.5 + c^3 f1 s + (f2/s) ((I - I_min)/I_th)^2 with caller-supplied f1
double nearThresholdVmin(std::complex<double> lambda, double iOverIth, double f1);

// I_min/I_th = 1 + f3(c) s
double predictedMinimumLocation(std::complex<double> lambda);

enum class ValidityReason {
  None,
  Interjacent,
  Bistable,
  TooCloseToInterjacent,  // c^5 < 10 s
  OutsideWindow,          // |(I - I_min)/I_th| > s^2/10
};

struct Validity {
  bool valid = false;
  ValidityReason reason = ValidityReason::None;
};

// ">>"/"<<" in the validity conditions operationalized as factors of 10
Validity validityCheck(std::complex<double> lambda, double iOverIth);

// f1 recovered from a measured exact-series minimum of the variance
double calibrateF1(std::complex<double> lambda, double measuredMinVmin);

}  // namespace nopo
