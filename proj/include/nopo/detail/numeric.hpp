#pragma once

#include <cmath>
#include <complex>

namespace nopo::detail {

// Kahan compensated accumulator. scale() keeps the compensation consistent
// when all previously accumulated terms are rescaled by a common factor.
struct Kahan {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  void scale(double f) {
    sum *= f;
    comp *= f;
  }
  double value() const { return sum; }
};

// log Gamma for complex argument, principal value of the real part
// (Re lgammac(z) = log|Gamma(z)| regardless of branch). Stirling series
// after shifting |z| above 32; accurate to ~1e-14 away from the poles.
inline std::complex<double> lgammac(std::complex<double> z) {
  std::complex<double> shift = 0.0;
  while (std::abs(z) < 32.0) {
    shift += std::log(z);
    z += 1.0;
  }
  // B_{2n} / (2n (2n-1))
  static constexpr double coeff[] = {
      1.0 / 12.0,       -1.0 / 360.0,     1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0,     -691.0 / 360360.0, 1.0 / 156.0,
  };
  const std::complex<double> zi = 1.0 / z;
  const std::complex<double> zi2 = zi * zi;
  std::complex<double> s = 0.0;
  std::complex<double> zp = zi;
  for (double c : coeff) {
    s += c * zp;
    zp *= zi2;
  }
  constexpr double halfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2
  return (z - 0.5) * std::log(z) - z + halfLog2Pi + s - shift;
}

// sum of log|z + i| for i = 0..m-1 (log of |Pochhammer| of (z)_m)
inline double logAbsPochhammer(std::complex<double> z, int m) {
  double s = 0.0;
  for (int i = 0; i < m; ++i) s += 0.5 * std::log(std::norm(z + double(i)));
  return s;
}

// accumulated principal-branch phase of the Pochhammer product (z)_m
inline double argPochhammer(std::complex<double> z, int m) {
  double s = 0.0;
  for (int i = 0; i < m; ++i) s += std::arg(z + double(i));
  return s;
}

// true when z + j == 0 for some integer j >= 0 (Pochhammer pole)
inline bool hitsNonpositiveInteger(std::complex<double> z) {
  if (z.imag() != 0.0) return false;
  double r = z.real();
  return r <= 0.0 && r == std::floor(r);
}

// wrap an angle to (-pi, pi]
inline double principalAngle(double a) {
  a = std::remainder(a, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  return a;
}

}  // namespace nopo::detail
