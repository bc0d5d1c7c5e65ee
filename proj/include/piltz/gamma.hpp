#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>

#include "piltz/common.hpp"

namespace piltz {

namespace detail {

using lcplx = std::complex<long double>;

// B_{2k} / (2k (2k-1)) for k = 1..12.
inline constexpr std::array<long double, 12> stirling_coeffs = {
    1.0L / 12.0L,         -1.0L / 360.0L,         1.0L / 1260.0L,        -1.0L / 1680.0L,
    1.0L / 1188.0L,       -691.0L / 360360.0L,    1.0L / 156.0L,         -3617.0L / 122400.0L,
    43867.0L / 244188.0L, -174611.0L / 125400.0L, 77683.0L / 5796.0L,    -236364091.0L / 1506960.0L,
};

inline constexpr long double half_log_two_pi = 0.918938533204672741780329736405617639861L;

// Stirling series, valid for |z| >= 15 with Re z > 0.
inline lcplx log_gamma_stirling(lcplx z) {
  const lcplx inv = 1.0L / z;
  const lcplx inv2 = inv * inv;
  lcplx series = 0.0L;
  lcplx p = inv;
  for (long double c : stirling_coeffs) {
    series += c * p;
    p *= inv2;
  }
  return (z - 0.5L) * std::log(z) - z + half_log_two_pi + series;
}

// log Gamma on Re z >= 0.5 by upward shifting into the Stirling region.
inline cplx log_gamma_right(cplx zd) {
  lcplx z(zd.real(), zd.imag());
  lcplx shift = 0.0L;
  lcplx prod = 1.0L;
  int count = 0;
  while (std::abs(z) < 15.0L) {
    prod *= z;
    // Fold into a log before the product loses range.
    if (++count == 8) {
      shift += std::log(prod);
      prod = 1.0L;
      count = 0;
    }
    z += 1.0L;
  }
  shift += std::log(prod);
  const lcplx r = log_gamma_stirling(z) - shift;
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

// log sin(pi z) without overflow for large |Im z| (modulo 2 pi i).
inline cplx log_sin_pi(cplx z) {
  if (std::abs(z.imag()) < 20.0) return std::log(std::sin(pi * z));
  if (z.imag() > 0) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
    const cplx e = std::exp(cplx(0.0, 2.0 * pi) * z);
    return cplx(0.0, -pi) * z + std::log(1.0 - e) + std::log(cplx(0.0, 0.5));
  }
  return std::conj(log_sin_pi(std::conj(z)));
}

inline double wrap_phase(double a) {
  a = std::remainder(a, 2.0 * pi);
  if (a <= -pi) a += 2.0 * pi;
  return a;
}

}  // namespace detail

/// log Gamma(z) with the imaginary part reduced to (-pi, pi].
/// Throws at the poles z = 0, -1, -2, ...
inline cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw domain_error("log_gamma: pole at non-positive integer");
  cplx r;
  if (z.real() >= 0.5) {
    r = detail::log_gamma_right(z);
  } else {
    // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
    r = std::log(pi) - detail::log_sin_pi(z) - detail::log_gamma_right(1.0 - z);
  }
  return {r.real(), detail::wrap_phase(r.imag())};
}

/// Unreduced log Gamma used inside integrands; only exp() of the result is meaningful.
inline cplx log_gamma_unwrapped(cplx z) {
  if (z.real() >= 0.5) return detail::log_gamma_right(z);
  return std::log(pi) - detail::log_sin_pi(z) - detail::log_gamma_right(1.0 - z);
}

inline cplx gamma(cplx z) { return std::exp(log_gamma_unwrapped(z)); }

/// Digamma for real x > 0.
inline double digamma(double x) {
  if (!(x > 0.0)) throw domain_error("digamma: argument must be positive");
  double acc = 0.0;
  while (x < 16.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  const double tail =
      inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132)))));
  return acc + std::log(x) - 0.5 / x - tail;
}

}  // namespace piltz
