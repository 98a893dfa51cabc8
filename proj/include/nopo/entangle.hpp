#pragma once

#include <complex>

#include "nopo/series.hpp"

namespace nopo {

// Phase-optimized EPR variance and the inseparability verdict. The verdict is
// one-sided: vMin < 1 certifies inseparability, vMin >= 1 is inconclusive
// (the steady state is non-Gaussian, the criterion is only sufficient).
struct EntanglementResult {
  double vMin = 1.0;
  double thetaSum = 0.0;       // minimizing theta1 + theta2
  double thetaRelative = 0.0;  // Theta = arg<a1 a2> - phiE, principal value
  bool entangledSufficient = false;
  bool phaseFromLimit = false;  // phases taken from the small-p analytic limit
  double nUsed = 0.0;
  std::complex<double> pairMomentUsed{0.0, 0.0};
};

// Variance of the EPR quadrature combination X1 - X2 (== Y1 + Y2), with
// quadratures X(theta) = (a^+ e^{i theta} + a e^{-i theta})/sqrt(2):
// V = 1 + 2n - 2|<a1 a2>| cos(theta1 + theta2 - arg<a1 a2>).
// Depends on the phases only through their sum; vacuum level is 1.
double variance(double theta1, double theta2, const MomentSet& moments);

EntanglementResult minimizedVariance(const MomentSet& moments);

// Theta = arg<a1 a2> - phiE in (-pi, pi]. Falls back to the analytic small-p
// limit -arg(lambda+1) when the pair moment underflows.
double relativePhase(const MomentSet& moments, double phiE);

}  // namespace nopo
