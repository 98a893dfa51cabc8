#include "nopo/entangle.hpp"

#include <cmath>

#include "nopo/detail/numeric.hpp"

namespace nopo {

namespace {
constexpr double kPhaseLimitFloor = 1e-300;
}

double variance(double theta1, double theta2, const MomentSet& moments) {
  const double phi = theta1 + theta2;
  // |M| cos(phi - argM) = Re(M) cos(phi) + Im(M) sin(phi); exact at M = 0
  const double mod = moments.pairMoment.real() * std::cos(phi) +
                     moments.pairMoment.imag() * std::sin(phi);
  return 1.0 + 2.0 * moments.n - 2.0 * mod;
}

EntanglementResult minimizedVariance(const MomentSet& moments) {
  EntanglementResult r;
  r.nUsed = moments.n;
  r.pairMomentUsed = moments.pairMoment;
  const double mod = std::abs(moments.pairMoment);
  r.vMin = 1.0 + 2.0 * (moments.n - mod);
  r.entangledSufficient = r.vMin < 1.0;
  if (mod >= kPhaseLimitFloor) {
    r.thetaSum = std::arg(moments.pairMoment);
    r.thetaRelative = detail::principalAngle(r.thetaSum - moments.phiE);
    r.phaseFromLimit = false;
  } else {
    // leading-order phase of the pair moment as p -> 0+
    r.thetaRelative = -std::arg(moments.lambda + 1.0);
    r.thetaSum = detail::principalAngle(r.thetaRelative + moments.phiE);
    r.phaseFromLimit = true;
  }
  return r;
}

double relativePhase(const MomentSet& moments, double phiE) {
  const double mod = std::abs(moments.pairMoment);
  if (mod >= kPhaseLimitFloor)
    return detail::principalAngle(std::arg(moments.pairMoment) - phiE);
  // the analytic limit applies on the small-p branch only
  if (moments.n < 1e-150)
    return detail::principalAngle(-std::arg(moments.lambda + 1.0));
  fail(ErrorCode::UndefinedPhase, "pair moment vanishes away from the small-p limit");
}

}  // namespace nopo
