#pragma once

#include <complex>

#include "nopo/series.hpp"

namespace nopo {

enum class Branch { BelowThreshold, AboveThreshold };

// Semiclassical photon number and the quantum correction deltaN = n - nCl.
// mu/xi split 2*nCl into integer and fractional parts.
struct SemiclassicalPoint {
  double nCl = 0.0;
  double deltaN = 0.0;
  long long mu = 0;
  double xi = 0.0;
  Branch branch = Branch::BelowThreshold;
  bool zeroBranchStable = true;  // the trivial solution is stable for p < |lambda|^2
};

// nCl = max(0, (-Re lambda + sqrt(p - (Im lambda)^2))/2); deltaN left NaN
SemiclassicalPoint classicalPhotonNumber(std::complex<double> lambda, double p);

// exact-series n minus nCl (saddle route permitted)
double quantumCorrection(std::complex<double> lambda, double p, double tol);

// classicalPhotonNumber with deltaN filled from the exact series
SemiclassicalPoint semiclassicalPoint(std::complex<double> lambda, double p, double tol);

// deltaN from windowed sums of the weight family around mu, pairing the
// j-th terms above and below the peak so the small correction is accumulated
// directly instead of as a difference of large numbers. Valid above threshold
// with mu >= 100.
double gaussianDeltaN(std::complex<double> lambda, double p);

struct AsymptoticVminResult {
  double vMin = 0.0;              // 0.5 - 2*deltaN
  double pairModulusQRoute = 0.0; // |<a1 a2>| via the exact Q identity
  double pnDnDp = 0.0;            // (p/n) dn/dp
  double deltaN = 0.0;
};

// Far-above-threshold variance route; requires p >= 100 |lambda|^2.
AsymptoticVminResult asymptoticVmin(std::complex<double> lambda, double p, double tol);

}  // namespace nopo
