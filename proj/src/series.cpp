#include "nopo/series.hpp"

#include <algorithm>
#include <cmath>

#include "nopo/detail/numeric.hpp"

namespace nopo {

using detail::Kahan;
using std::complex;

namespace {

void checkSeriesInputs(complex<double> lambda, double p, double tol) {
  if (!(p >= 0.0)) fail(ErrorCode::InvalidParams, "p must be non-negative");
  if (!(tol > 0.0 && tol < 1e-3)) fail(ErrorCode::InvalidParams, "tol must lie in (0, 1e-3)");
  if (detail::hitsNonpositiveInteger(lambda + 1.0))
    fail(ErrorCode::PoleInput, "lambda+1+j vanishes for an integer j >= 0; series undefined");
}

// One pass over the weight family in ascending j with log-space term
// recurrence, running-maximum rescaling and compensated accumulation of
// {1, j, j^2} and (optionally) the complex pair weight j*(conj(lambda)+j).
struct DirectPass {
  Kahan w0, w1, w2, pairRe, pairIm;
  double logMax = 0.0;
  std::int64_t jPeak = 0;
  std::int64_t terms = 1;
  double tailRel = 0.0;
};

DirectPass directSum(complex<double> lambda, double p, double tol, std::int64_t maxTerms,
                     bool wantPair) {
  const double a = lambda.real() + 1.0;
  const double b = lambda.imag();
  const double rePart = lambda.real();  // conj(lambda) + j = (re+j) - i*im
  const double imPart = -lambda.imag();
  const double logp = std::log(p);
  const double stopThresh = tol * 1e-3;

  DirectPass s;
  s.w0.add(1.0);  // j = 0 term, all weighted accumulators start at zero
  double logN = 0.0;
  double lastT = 1.0;
  std::int64_t extend = -1;
  std::int64_t j = 0;
  auto tailEstimate = [&](void) -> double {
    const double Anext = a + double(j);
    const double ratio = p / (Anext * Anext + b * b);
    if (!(ratio < 1.0)) return 1.0;
    return lastT * ratio / (1.0 - ratio) / s.w0.value();
  };
  for (;;) {
    ++j;
    const double A = a + double(j - 1);
    logN += logp - std::log(A * A + b * b);
    double rel = logN - s.logMax;
    if (rel > 0.0) {
      const double f = std::exp(-rel);
      s.w0.scale(f);
      s.w1.scale(f);
      s.w2.scale(f);
      if (wantPair) {
        s.pairRe.scale(f);
        s.pairIm.scale(f);
      }
      s.logMax = logN;
      s.jPeak = j;
      rel = 0.0;
    }
    const double t = std::exp(rel);
    const double dj = double(j);
    s.w0.add(t);
    s.w1.add(t * dj);
    s.w2.add(t * dj * dj);
    if (wantPair) {
      s.pairRe.add(t * dj * (rePart + dj));
      s.pairIm.add(t * dj * imPart);
    }
    lastT = t;
    if (extend < 0) {
      if (t <= stopThresh && j > s.jPeak)
        extend = std::int64_t(std::ceil(10.0 * std::sqrt(double(s.jPeak) + 10.0)));
    } else if (--extend <= 0) {
      // post-peak decay is at least geometric; re-extend in the rare case the
      // bound has not yet caught up with the requested tolerance
      if (tailEstimate() <= 0.5 * tol) break;
      extend = std::int64_t(std::ceil(10.0 * std::sqrt(double(s.jPeak) + 10.0)));
    }
    if (j >= maxTerms)
      fail(ErrorCode::Nonconvergence,
           "term budget exhausted before the tail criterion was met; use saddleApprox");
  }
  s.terms = j + 1;
  s.tailRel = tailEstimate();
  return s;
}

JStats statsFromPass(const DirectPass& s, double tol) {
  JStats out;
  out.logN = s.logMax + std::log(s.w0.value());
  out.jMean = s.w1.value() / s.w0.value();
  out.jVar = std::max(0.0, s.w2.value() / s.w0.value() - out.jMean * out.jMean);
  out.jPeak = s.jPeak;
  out.termsUsed = s.terms;
  out.tailBound = s.tailRel;
  out.method = SummationMethod::DirectSum;
  if (!(out.tailBound <= tol))
    fail(ErrorCode::Nonconvergence, "tail estimate exceeds the requested tolerance");
  return out;
}

JStats vacuumStats() {
  JStats s;
  s.logN = 0.0;
  s.jMean = 0.0;
  s.jVar = 0.0;
  s.jPeak = 0;
  s.termsUsed = 1;
  s.tailBound = 0.0;
  s.method = SummationMethod::DirectSum;
  return s;
}

}  // namespace

JStats jDistribution(complex<double> lambda, double p, double tol, std::int64_t maxTerms) {
  checkSeriesInputs(lambda, p, tol);
  if (p == 0.0) return vacuumStats();
  return statsFromPass(directSum(lambda, p, tol, maxTerms, false), tol);
}

complex<double> pairMoment(complex<double> lambda, double p, double phiE, double tol,
                           std::int64_t maxTerms) {
  checkSeriesInputs(lambda, p, tol);
  if (p == 0.0) return {0.0, 0.0};
  DirectPass s = directSum(lambda, p, tol, maxTerms, true);
  complex<double> weighted(s.pairRe.value(), s.pairIm.value());
  return std::polar(1.0, phiE) * weighted / (2.0 * s.w0.value() * std::sqrt(p));
}

complex<double> pairMomentAlt(const JStats& stats, complex<double> lambda, double p, double phiE) {
  if (!(p > 0.0)) fail(ErrorCode::DegenerateInput, "pairMomentAlt requires p > 0");
  if (!(stats.jMean > 0.0)) fail(ErrorCode::DegenerateInput, "pairMomentAlt requires n > 0");
  const double n = stats.jMean / 2.0;
  const complex<double> inner =
      std::conj(lambda) + stats.jMean + stats.jVar / stats.jMean;
  return std::polar(1.0, phiE) * (n / std::sqrt(p)) * inner;
}

complex<double> generalMomentKL(complex<double> lambda, complex<double> epsilon, int k, int l,
                                double tol) {
  if (k < 0 || l < 0 || k > 30 || l > 30)
    fail(ErrorCode::InvalidParams, "moment orders must lie in [0, 30]");
  const double p = std::norm(2.0 * epsilon);
  checkSeriesInputs(lambda, p, tol);
  if (detail::hitsNonpositiveInteger(lambda + double(l + 1)) ||
      detail::hitsNonpositiveInteger(lambda + 1.0))
    fail(ErrorCode::PoleInput, "Pochhammer pole in the moment series");
  if (k == 0 && l == 0) return {1.0, 0.0};
  if (p == 0.0) return {0.0, 0.0};

  const double logN = jDistribution(lambda, p, tol).logN;
  const complex<double> lam1 = lambda + 1.0;
  // prefactor eps^l conj(eps)^k l! k! / (N (lambda+1)_l (conj(lambda)+1)_k)
  double logMag = (l + k) * std::log(std::abs(epsilon)) - logN + std::lgamma(double(l) + 1.0) +
                  std::lgamma(double(k) + 1.0) - detail::logAbsPochhammer(lam1, l) -
                  detail::logAbsPochhammer(std::conj(lam1), k);
  double phase = (l - k) * std::arg(epsilon) - detail::argPochhammer(lam1, l) -
                 detail::argPochhammer(std::conj(lam1), k);

  // complex series with multiplicative term recurrence and rescaling
  const double stopThresh = tol * 1e-3;
  complex<double> term = 1.0;
  double logScale = 0.0;
  Kahan sr, si;
  sr.add(1.0);
  double logMaxTerm = 0.0;
  std::int64_t jPeak = 0, extend = -1;
  for (std::int64_t j = 0;; ++j) {
    const double dj = double(j);
    const complex<double> num = (double(l + 1) + dj) * (double(k + 1) + dj) * p;
    const complex<double> den =
        (lambda + double(l + 1) + dj) * (std::conj(lambda) + double(k + 1) + dj) *
        ((dj + 1.0) * (dj + 1.0));
    term *= num / den;
    double at = std::abs(term);
    if (at == 0.0) break;
    double logAbsTerm = logScale + std::log(at);
    if (logAbsTerm > logMaxTerm) {
      logMaxTerm = logAbsTerm;
      jPeak = j + 1;
    }
    if (at > 1e100 || at < 1e-100) {
      // renormalize term and accumulated sums to the current magnitude
      logScale += std::log(at);
      const double f = 1.0 / at;
      term *= f;
      sr.scale(f);
      si.scale(f);
      at = 1.0;
    }
    sr.add(term.real());
    si.add(term.imag());
    if (extend < 0) {
      if (logAbsTerm - logMaxTerm < std::log(stopThresh))
        extend = std::int64_t(std::ceil(10.0 * std::sqrt(double(jPeak) + 10.0)));
    } else if (--extend <= 0) {
      break;
    }
    if (j + 1 >= kDefaultMaxTerms) fail(ErrorCode::Nonconvergence, "moment series too long");
  }
  complex<double> sum(sr.value(), si.value());
  const double mag = std::exp(logMag + logScale) * std::abs(sum);
  return std::polar(mag, phase + std::arg(sum));
}

double generalMomentMN(complex<double> lambda, double p, int m, int n, double tol) {
  if (m < 0 || n < 0 || m > 30 || n > 30)
    fail(ErrorCode::InvalidParams, "moment orders must lie in [0, 30]");
  if (n > m) std::swap(m, n);  // symmetric in the mode labels
  checkSeriesInputs(lambda, p, tol);
  if (detail::hitsNonpositiveInteger(lambda + 1.0) ||
      detail::hitsNonpositiveInteger(lambda + double(m + 1)))
    fail(ErrorCode::PoleInput, "Pochhammer pole in the moment series");
  if (m == 0) return 1.0;
  if (p == 0.0) return 0.0;

  const double logN = jDistribution(lambda, p, tol).logN;
  const complex<double> lam1 = lambda + 1.0;
  double logPref = m * std::log(p) - (m + n) * std::log(2.0) - logN +
                   2.0 * (std::lgamma(double(m) + 1.0) - detail::logAbsPochhammer(lam1, m));

  const double a = lambda.real() + double(m + 1);
  const double b = lambda.imag();
  const double logp = std::log(p);
  const double stopThresh = tol * 1e-3;
  double logTerm = -std::lgamma(double(m - n) + 1.0);  // j = 0 term 1/(0!*(m-n)!)
  double logMax = logTerm;
  Kahan sum;
  sum.add(1.0);
  std::int64_t jPeak = 0, extend = -1;
  for (std::int64_t j = 1;; ++j) {
    const double dj = double(j);
    const double A = a + (dj - 1.0);
    logTerm += logp + 2.0 * std::log(double(m) + dj) - std::log(A * A + b * b) - std::log(dj) -
               std::log(dj + double(m - n));
    double rel = logTerm - logMax;
    if (rel > 0.0) {
      sum.scale(std::exp(-rel));
      logMax = logTerm;
      jPeak = j;
      rel = 0.0;
    }
    const double t = std::exp(rel);
    sum.add(t);
    if (extend < 0) {
      if (t <= stopThresh && j > jPeak)
        extend = std::int64_t(std::ceil(10.0 * std::sqrt(double(jPeak) + 10.0)));
    } else if (--extend <= 0) {
      break;
    }
    if (j >= kDefaultMaxTerms) fail(ErrorCode::Nonconvergence, "moment series too long");
  }
  return std::exp(logPref + logMax) * sum.value();
}

namespace {

// derivatives of h(x) = log p - log((a+x)^2 + b^2)
struct HDerivs {
  double h, h1, h2, h3, h4;
};

HDerivs hDerivs(double a, double b, double logp, double x) {
  const double A = a + x;
  const double q = A * A + b * b;
  HDerivs d;
  d.h = logp - std::log(q);
  d.h1 = -2.0 * A / q;
  d.h2 = 2.0 * (A * A - b * b) / (q * q);
  d.h3 = 4.0 * A * (3.0 * b * b - A * A) / (q * q * q);
  d.h4 = 12.0 * (A * A * A * A - 6.0 * A * A * b * b + b * b * b * b) / (q * q * q * q);
  return d;
}

}  // namespace

double jPeakEstimate(complex<double> lambda, double p) {
  const double disc = p - lambda.imag() * lambda.imag();
  if (disc <= 0.0) return 0.0;
  return std::max(0.0, -lambda.real() + std::sqrt(disc));
}

JStats saddleApprox(complex<double> lambda, double p) {
  const double a = lambda.real() + 1.0;
  const double b = lambda.imag();
  const double disc = p - b * b;
  if (disc <= 0.0)
    fail(ErrorCode::DomainError, "no real saddle for p <= (Im lambda)^2; use the direct sum");
  const double logp = std::log(p);
  const double R = std::sqrt(disc);

  // phi'(x) = h(x) - h'(x)/2 + h''(x)/12 vanishes at the continuum maximizer
  double x = R - a + 0.5;
  if (!(x > 0.0))
    fail(ErrorCode::DomainError,
         "weight peak at or below j = 0; the saddle route does not apply");
  for (int it = 0; it < 6; ++it) {
    HDerivs d = hDerivs(a, b, logp, x);
    const double g = d.h - 0.5 * d.h1 + d.h2 / 12.0;
    const double g1 = d.h1 - 0.5 * d.h2 + d.h3 / 12.0;
    const double step = g / g1;
    x -= step;
    if (std::abs(step) < 1e-12 * std::max(1.0, std::abs(x))) break;
  }
  HDerivs d = hDerivs(a, b, logp, x);
  const double phi2 = d.h1 - 0.5 * d.h2 + d.h3 / 12.0;
  if (!(phi2 < 0.0)) fail(ErrorCode::DomainError, "saddle curvature not concave");
  const double sigma2 = -1.0 / phi2;
  const double sigma = std::sqrt(sigma2);
  if (!(x > 30.0 * sigma))
    fail(ErrorCode::DomainError,
         "weight peak too close to j = 0 for the saddle route; use the direct sum");
  const double c3 = d.h2 - 0.5 * d.h3 + d.h4 / 12.0;
  const double c4 = d.h3 - 0.5 * d.h4;

  JStats s;
  s.method = SummationMethod::SaddleApprox;
  s.jMean = x + 0.5 * c3 * sigma2 * sigma2;
  s.jVar = sigma2 + 0.5 * c4 * sigma2 * sigma2 * sigma2 +
           c3 * c3 * sigma2 * sigma2 * sigma2 * sigma2;
  s.jPeak = std::int64_t(std::llround(x));
  s.termsUsed = 0;
  s.tailBound = std::min(1.0, 10.0 / x);

  // absolute normalization: phi(x) = x log p - log|Gamma(lambda+1+x)/Gamma(lambda+1)|^2
  const complex<double> lam1 = lambda + 1.0;
  const double phiAt =
      x * logp -
      2.0 * (detail::lgammac(lam1 + x) - detail::lgammac(lam1)).real();
  const double zCorr = c4 * sigma2 * sigma2 / 8.0 +
                       5.0 * c3 * c3 * sigma2 * sigma2 * sigma2 / 24.0;
  s.logN = phiAt + 0.5 * std::log(2.0 * M_PI * sigma2) + std::log1p(zCorr);
  return s;
}

MomentSet computeMoments(complex<double> lambda, double p, double phiE, double tol,
                         std::int64_t maxTerms) {
  checkSeriesInputs(lambda, p, tol);
  MomentSet out;
  out.lambda = lambda;
  out.p = p;
  out.phiE = phiE;
  if (p == 0.0) {
    out.stats = vacuumStats();
    out.n = 0.0;
    out.pairMoment = {0.0, 0.0};
    out.pDnDp = 0.0;
    out.route = MomentRoute::SeriesDirect;
    return out;
  }

  const bool wantSaddle = jPeakEstimate(lambda, p) > double(kSaddleSwitchover);
  if (!wantSaddle) {
    try {
      DirectPass pass = directSum(lambda, p, tol, maxTerms, true);
      out.stats = statsFromPass(pass, tol);
      out.n = out.stats.jMean / 2.0;
      out.pDnDp = out.stats.jVar / 2.0;
      complex<double> weighted(pass.pairRe.value(), pass.pairIm.value());
      out.pairMoment = std::polar(1.0, phiE) * weighted / (2.0 * pass.w0.value() * std::sqrt(p));
      out.route = MomentRoute::SeriesDirect;
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Nonconvergence) throw;
      // fall through to the saddle route
    }
  }
  try {
    out.stats = saddleApprox(lambda, p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DomainError && !wantSaddle)
      fail(ErrorCode::Nonconvergence,
           "direct sum exceeded the term budget and the saddle route does not apply here");
    throw;
  }
  out.n = out.stats.jMean / 2.0;
  out.pDnDp = out.stats.jVar / 2.0;
  out.pairMoment = pairMomentAlt(out.stats, lambda, p, phiE);
  out.route = MomentRoute::AltForm;
  return out;
}

}  // namespace nopo
