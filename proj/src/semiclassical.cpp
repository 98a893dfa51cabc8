#include "nopo/semiclassical.hpp"

#include <cmath>
#include <limits>

#include "nopo/detail/numeric.hpp"

namespace nopo {

using detail::Kahan;

SemiclassicalPoint classicalPhotonNumber(std::complex<double> lambda, double p) {
  if (!(p >= 0.0)) fail(ErrorCode::InvalidParams, "p must be non-negative");
  SemiclassicalPoint s;
  s.deltaN = std::numeric_limits<double>::quiet_NaN();
  const double b = lambda.imag();
  const double disc = p - b * b;
  double nCl = 0.0;
  if (disc > 0.0) nCl = 0.5 * (-lambda.real() + std::sqrt(disc));
  if (nCl > 0.0) {
    s.nCl = nCl;
    s.branch = Branch::AboveThreshold;
  } else {
    s.nCl = 0.0;
    s.branch = Branch::BelowThreshold;
  }
  const double twoN = 2.0 * s.nCl;
  s.mu = (long long)std::floor(twoN);
  s.xi = twoN - double(s.mu);
  s.zeroBranchStable = p < std::norm(lambda);
  return s;
}

double quantumCorrection(std::complex<double> lambda, double p, double tol) {
  const SemiclassicalPoint cl = classicalPhotonNumber(lambda, p);
  return computeMoments(lambda, p, 0.0, tol).n - cl.nCl;
}

SemiclassicalPoint semiclassicalPoint(std::complex<double> lambda, double p, double tol) {
  SemiclassicalPoint s = classicalPhotonNumber(lambda, p);
  s.deltaN = computeMoments(lambda, p, 0.0, tol).n - s.nCl;
  return s;
}

double gaussianDeltaN(std::complex<double> lambda, double p) {
  const SemiclassicalPoint cl = classicalPhotonNumber(lambda, p);
  if (cl.branch != Branch::AboveThreshold)
    fail(ErrorCode::DomainError, "gaussianDeltaN requires the above-threshold branch");
  if (cl.mu < 100) fail(ErrorCode::DomainError, "gaussianDeltaN requires mu >= 100");

  const double a = lambda.real() + 1.0;
  const double b = lambda.imag();
  const double logp = std::log(p);
  const long long mu = cl.mu;
  // half-width 12*sqrt(mu): the window truncation is below exp(-144)
  const long long W = std::min<long long>(mu, (long long)std::ceil(12.0 * std::sqrt(double(mu))));

  Kahan nSum, fSum;
  nSum.add(1.0);  // the mu-th term, scaled to 1
  double logUp = 0.0, logDown = 0.0;
  for (long long j = 1; j <= W; ++j) {
    const double Aup = a + double(mu + j - 1);
    logUp += logp - std::log(Aup * Aup + b * b);
    const double Adown = a + double(mu - j);
    logDown += std::log(Adown * Adown + b * b) - logp;
    const double up = std::exp(logUp);
    const double down = std::exp(logDown);
    nSum.add(up + down);
    fSum.add(double(j) * (up - down));
  }
  return fSum.value() / (2.0 * nSum.value()) - cl.xi / 2.0;
}

AsymptoticVminResult asymptoticVmin(std::complex<double> lambda, double p, double tol) {
  if (!(p >= 100.0 * std::norm(lambda)))
    fail(ErrorCode::DomainError, "asymptotic route requires p >= 100 |lambda|^2");
  const SemiclassicalPoint cl = classicalPhotonNumber(lambda, p);
  const MomentSet m = computeMoments(lambda, p, 0.0, tol);
  AsymptoticVminResult r;
  r.deltaN = m.n - cl.nCl;
  r.pnDnDp = m.stats.jVar / m.stats.jMean;
  const double b = lambda.imag();
  const double Q = 2.0 * std::sqrt(p - b * b) + 2.0 * r.deltaN + r.pnDnDp;
  r.pairModulusQRoute = m.n * std::sqrt(1.0 + (Q / p) * (2.0 * r.deltaN + r.pnDnDp));
  r.vMin = 0.5 - 2.0 * r.deltaN;
  return r;
}

}  // namespace nopo
