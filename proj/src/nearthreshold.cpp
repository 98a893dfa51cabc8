#include "nopo/nearthreshold.hpp"

#include <cmath>

namespace nopo {

namespace {

double cParameter(std::complex<double> lambda) {
  const double cosArg = std::cos(std::arg(lambda));
  if (cosArg < 0.0) fail(ErrorCode::DomainError, "c undefined for bistable lambda");
  return std::sqrt(cosArg);
}

void requireMonostable(std::complex<double> lambda) {
  if (classifyRegime(lambda) != Regime::Monostable)
    fail(ErrorCode::DomainError, "near-threshold expansion is for monostable dynamics only");
}

}  // namespace

FPair fPolynomials(double c) {
  if (!(c >= 0.0 && c <= 1.0)) fail(ErrorCode::DomainError, "c must lie in [0, 1]");
  FPair f;
  f.f2 = 0.113 + 0.00221 * c - 0.330 * c * c + 0.371 * c * c * c - 0.132 * c * c * c * c;
  f.f3 = -2.219 + 0.217 * c + 2.83 * c * c;
  return f;
}

NearThresholdParams nearThresholdParams(std::complex<double> lambda, double iOverIth) {
  requireMonostable(lambda);
  NearThresholdParams ntp;
  ntp.s = 1.0 / std::sqrt(std::abs(lambda));
  ntp.c = cParameter(lambda);
  ntp.iOverIth = iOverIth;
  FPair f = fPolynomials(ntp.c);
  ntp.f2 = f.f2;
  ntp.f3 = f.f3;
  return ntp;
}

double nearThresholdVmin(std::complex<double> lambda, double iOverIth, double f1) {
  NearThresholdParams ntp = nearThresholdParams(lambda, iOverIth);
  Validity v = validityCheck(lambda, iOverIth);
  if (!v.valid) fail(ErrorCode::DomainError, "outside the near-threshold validity region");
  const double iMin = 1.0 + ntp.f3 * ntp.s;
  const double dev = iOverIth - iMin;
  return 0.5 + ntp.c * ntp.c * ntp.c * f1 * ntp.s + (ntp.f2 / ntp.s) * dev * dev;
}

double predictedMinimumLocation(std::complex<double> lambda) {
  requireMonostable(lambda);
  const double s = 1.0 / std::sqrt(std::abs(lambda));
  return 1.0 + fPolynomials(cParameter(lambda)).f3 * s;
}

Validity validityCheck(std::complex<double> lambda, double iOverIth) {
  Validity v;
  Regime regime = classifyRegime(lambda);
  if (regime == Regime::Interjacent) {
    v.reason = ValidityReason::Interjacent;
    return v;
  }
  if (regime == Regime::Bistable) {
    v.reason = ValidityReason::Bistable;
    return v;
  }
  const double s = 1.0 / std::sqrt(std::abs(lambda));
  const double c = cParameter(lambda);
  if (!(std::pow(c, 5) >= 10.0 * s)) {
    v.reason = ValidityReason::TooCloseToInterjacent;
    return v;
  }
  const double iMin = 1.0 + fPolynomials(c).f3 * s;
  if (!(std::abs(iOverIth - iMin) <= s * s / 10.0)) {
    v.reason = ValidityReason::OutsideWindow;
    return v;
  }
  v.valid = true;
  return v;
}

double calibrateF1(std::complex<double> lambda, double measuredMinVmin) {
  requireMonostable(lambda);
  const double s = 1.0 / std::sqrt(std::abs(lambda));
  const double c = cParameter(lambda);
  return (measuredMinVmin - 0.5) / (c * c * c * s);
}

}  // namespace nopo
