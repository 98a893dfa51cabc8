#pragma once

#include <complex>
#include <cstdint>

#include "nopo/errors.hpp"

namespace nopo {

enum class SummationMethod { DirectSum, SaddleApprox };

inline const char* methodName(SummationMethod m) {
  return m == SummationMethod::DirectSum ? "direct" : "saddle";
}

// Statistics of the non-negative weight family N_j = p^j / |(lambda+1)_j|^2,
// normalized by N = sum_j N_j.
struct JStats {
  double logN = 0.0;       // ln N, >= 0
  double jMean = 0.0;      // <j>
  double jVar = 0.0;       // Var(j)
  std::int64_t jPeak = 0;  // index of the largest term
  std::int64_t termsUsed = 0;
  double tailBound = 0.0;  // estimated relative magnitude of the discarded tail
  SummationMethod method = SummationMethod::DirectSum;
};

inline constexpr std::int64_t kDefaultMaxTerms = 10'000'000;
inline constexpr std::int64_t kSaddleSwitchover = 10'000'000;

// Direct log-space summation of the weight family. Throws Nonconvergence when
// the term budget runs out before the tail criterion is met (the caller may
// switch to saddleApprox), and PoleInput when lambda+1+j vanishes for some
// integer j >= 0.
JStats jDistribution(std::complex<double> lambda, double p, double tol,
                     std::int64_t maxTerms = kDefaultMaxTerms);

// mean photon number per subharmonic mode, n = <j>/2
inline double meanPhotonNumber(const JStats& stats) { return stats.jMean / 2.0; }

// <a1 a2> from its own direct weighted summation
std::complex<double> pairMoment(std::complex<double> lambda, double p, double phiE, double tol,
                                std::int64_t maxTerms = kDefaultMaxTerms);

// <a1 a2> recovered from the weight statistics alone:
// e^{i phiE} (n/sqrt(p)) (conj(lambda) + 2n + (p/n) dn/dp), with
// (p/n) dn/dp = jVar/jMean. Algebraically identical to pairMoment.
std::complex<double> pairMomentAlt(const JStats& stats, std::complex<double> lambda, double p,
                                   double phiE);

// <a1+^k a1^l a2+^k a2^l>
std::complex<double> generalMomentKL(std::complex<double> lambda, std::complex<double> epsilon,
                                     int k, int l, double tol);

// <a1+^m a1^m a2+^n a2^n> (real, symmetric in m<->n)
double generalMomentMN(std::complex<double> lambda, double p, int m, int n, double tol);

// Laplace evaluation of the weight statistics around the maximizing index,
// for peaks far beyond the direct-sum budget. Requires p > (Im lambda)^2 and
// a peak well separated from j = 0.
JStats saddleApprox(std::complex<double> lambda, double p);

enum class MomentRoute { SeriesDirect, AltForm };

// One parameter point fully evaluated: photon number, pair moment and the
// underlying statistics, with the evaluation route recorded.
struct MomentSet {
  double n = 0.0;
  std::complex<double> pairMoment{0.0, 0.0};
  double pDnDp = 0.0;  // p * dn/dp = jVar/2
  JStats stats;
  MomentRoute route = MomentRoute::SeriesDirect;
  // evaluation context
  std::complex<double> lambda{0.0, 0.0};
  double p = 0.0;
  double phiE = 0.0;
};

// Evaluates the full moment set, choosing the direct sum or the saddle route
// by the estimated peak index (switchover at kSaddleSwitchover).
MomentSet computeMoments(std::complex<double> lambda, double p, double phiE, double tol,
                         std::int64_t maxTerms = kDefaultMaxTerms);

// estimated peak index 2*n_cl (0 below threshold)
double jPeakEstimate(std::complex<double> lambda, double p);

}  // namespace nopo
