#pragma once

// Bessel J, Y, I, K of orders 0 and 1 for real positive arguments.
//
//   J, Y : power series (long double) for x < 17, Hankel asymptotics beyond.
//   I    : power series for x < 20, asymptotic expansion beyond.
//   K    : power series for x <= 2, trapezoidal rule on
//          K_n(x) = int_0^inf exp(-x cosh t) cosh(n t) dt for 2 < x < 20,
//          asymptotic expansion beyond.
// I overflows and K underflows in double precision for x above about 705.

#include <cmath>
#include <complex>
#include <limits>

#include "piltz/common.hpp"

namespace piltz {

enum class BesselKind { J, Y, I, K };

namespace bessel_detail {

using ld = long double;

inline constexpr double jy_series_cutoff = 17.0;
inline constexpr double series_cutoff = 20.0;
inline constexpr double k_series_cutoff = 2.0;
inline constexpr ld ld_pi = 3.141592653589793238462643383279502884L;
inline constexpr ld ld_euler = 0.577215664901532860606512090082402431L;

// sum_k (sign)^k (x^2/4)^k / (k! (k+n)!) times (x/2)^n, for n in {0, 1}.
inline ld jn_series(int n, ld x, int sign) {
  const ld q = sign * x * x / 4.0L;
  ld term = (n == 0) ? 1.0L : x / 2.0L;
  ld sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<ld>(k) * static_cast<ld>(k + n));
    sum += term;
    if (std::fabs(term) < 1e-21L * std::fabs(sum)) break;
  }
  return sum;
}

// (x/2)^n sum_k (psi(k+1) + psi(n+k+1)) (sign x^2/4)^k / (k! (n+k)!)
inline ld psi_series(int n, ld x, int sign) {
  const ld q = sign * x * x / 4.0L;
  ld pk = -ld_euler;                          // psi(k+1)
  ld pnk = (n == 0) ? -ld_euler : 1.0L - ld_euler;  // psi(n+k+1)
  ld term = (n == 0) ? 1.0L : x / 2.0L;
  ld sum = term * (pk + pnk);
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<ld>(k) * static_cast<ld>(k + n));
    pk += 1.0L / k;
    pnk += 1.0L / (k + n);
    const ld add = term * (pk + pnk);
    sum += add;
    if (std::fabs(add) < 1e-21L * std::fabs(sum) && k > 2) break;
  }
  return sum;
}

inline double y_series(int n, double xd) {
  const ld x = xd;
  const ld lg = std::log(x / 2.0L);
  if (n == 0) return static_cast<double>((2.0L / ld_pi) * lg * jn_series(0, x, -1) - psi_series(0, x, -1) / ld_pi);
  return static_cast<double>(-2.0L / (ld_pi * x) + (2.0L / ld_pi) * lg * jn_series(1, x, -1) -
                             psi_series(1, x, -1) / ld_pi);
}

inline double k_series(int n, double xd) {
  const ld x = xd;
  const ld lg = std::log(x / 2.0L);
  if (n == 0) return static_cast<double>(-lg * jn_series(0, x, 1) + 0.5L * psi_series(0, x, 1));
  return static_cast<double>(1.0L / x + lg * jn_series(1, x, 1) - 0.5L * psi_series(1, x, 1));
}

// Hankel-type asymptotic sums. Returns (P, Q) for J/Y, or the alternating / plain
// series for I / K, truncated at the smallest term.
struct AsymSums {
  ld p = 0, q = 0;
};

inline AsymSums hankel_pq(int n, ld x) {
  const ld mu = 4.0L * n * n;
  AsymSums s;
  ld a = 1.0L;  // a_k(n) / x^k
  s.p = 1.0L;
  ld prev = 1.0L;
  for (int k = 1; k < 200; ++k) {
    const ld odd = 2.0L * k - 1.0L;
    a *= (mu - odd * odd) / (8.0L * k * x);
    const ld mag = std::fabs(a);
    if (mag > prev) break;
    prev = mag;
    // k even -> P with sign (-1)^{k/2}; k odd -> Q with sign (-1)^{(k-1)/2}
    if (k % 2 == 0) s.p += ((k / 2) % 2 ? -a : a);
    else s.q += (((k - 1) / 2) % 2 ? -a : a);
    if (mag < 1e-21L) break;
  }
  return s;
}

inline ld ik_asym_sum(int n, ld x, bool alternating) {
  const ld mu = 4.0L * n * n;
  ld a = 1.0L;
  ld sum = 1.0L;
  ld prev = 1.0L;
  for (int k = 1; k < 200; ++k) {
    const ld odd = 2.0L * k - 1.0L;
    a *= (mu - odd * odd) / (8.0L * k * x);
    const ld mag = std::fabs(a);
    if (mag > prev) break;
    prev = mag;
    sum += (alternating && (k % 2)) ? -a : a;
    if (mag < 1e-21L) break;
  }
  return sum;
}

inline double jy_asym(BesselKind kind, int n, double xd) {
  const ld x = xd;
  const AsymSums s = hankel_pq(n, x);
  const ld w = x - (static_cast<ld>(n) / 2.0L + 0.25L) * ld_pi;
  const ld amp = std::sqrt(2.0L / (ld_pi * x));
  const ld c = std::cos(w), sn = std::sin(w);
  if (kind == BesselKind::J) return static_cast<double>(amp * (s.p * c - s.q * sn));
  return static_cast<double>(amp * (s.p * sn + s.q * c));
}

inline double k_integral(int n, double x) {
  // Integrand is analytic in |Im t| < pi/2; trapezoid error ~ exp(-pi^2 / h).
  const double h = 0.2;
  double sum = 0.5 * std::exp(-x);
  for (int j = 1; j < 10000; ++j) {
    const double t = j * h;
    const double e = x * (std::cosh(t) - 1.0);
    if (e > 750.0) break;
    const double term = std::exp(-x - e) * (n == 0 ? 1.0 : std::cosh(t));
    sum += term;
    if (term < 1e-19 * sum) break;
  }
  return h * sum;
}

}  // namespace bessel_detail

/// Bessel function of the given kind and order (0 or 1) at x > 0.
inline double bessel(BesselKind kind, int order, double x) {
  using namespace bessel_detail;
  if (order != 0 && order != 1) throw domain_error("bessel: only orders 0 and 1 are supported");
  if (!(x > 0.0) || !std::isfinite(x)) throw domain_error("bessel: argument must be positive and finite");
  switch (kind) {
    case BesselKind::J:
      if (x < jy_series_cutoff) return static_cast<double>(jn_series(order, x, -1));
      return jy_asym(kind, order, x);
    case BesselKind::Y:
      if (x < jy_series_cutoff) return y_series(order, x);
      return jy_asym(kind, order, x);
    case BesselKind::I:
      if (x < series_cutoff) return static_cast<double>(jn_series(order, x, 1));
      return static_cast<double>(std::exp(static_cast<ld>(x)) / std::sqrt(2.0L * ld_pi * x) *
                                 ik_asym_sum(order, x, true));
    case BesselKind::K:
      if (x <= k_series_cutoff) return k_series(order, x);
      if (x < series_cutoff) return k_integral(order, x);
      return static_cast<double>(std::sqrt(ld_pi / (2.0L * x)) * std::exp(-static_cast<ld>(x)) *
                                 ik_asym_sum(order, x, false));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

inline double bessel_j(int n, double x) { return bessel(BesselKind::J, n, x); }
inline double bessel_y(int n, double x) { return bessel(BesselKind::Y, n, x); }
inline double bessel_i(int n, double x) { return bessel(BesselKind::I, n, x); }
inline double bessel_k(int n, double x) { return bessel(BesselKind::K, n, x); }

/// Series evaluators for complex arguments (orders 0 and 1), used by the
/// Bessel connection-formula checks. Principal branch of log.
namespace complex_bessel {

using lc = std::complex<long double>;

inline lc jn_series(int n, lc z, int sign) {
  const lc q = static_cast<long double>(sign) * z * z / 4.0L;
  lc term = (n == 0) ? lc(1.0L) : z / 2.0L;
  lc sum = term;
  for (int k = 1; k < 600; ++k) {
    term *= q / (static_cast<long double>(k) * static_cast<long double>(k + n));
    sum += term;
    if (std::abs(term) < 1e-21L * std::abs(sum)) break;
  }
  return sum;
}

inline lc psi_series(int n, lc z, int sign) {
  const lc q = static_cast<long double>(sign) * z * z / 4.0L;
  long double pk = -bessel_detail::ld_euler;
  long double pnk = (n == 0) ? -bessel_detail::ld_euler : 1.0L - bessel_detail::ld_euler;
  lc term = (n == 0) ? lc(1.0L) : z / 2.0L;
  lc sum = term * (pk + pnk);
  for (int k = 1; k < 600; ++k) {
    term *= q / (static_cast<long double>(k) * static_cast<long double>(k + n));
    pk += 1.0L / k;
    pnk += 1.0L / (k + n);
    const lc add = term * (pk + pnk);
    sum += add;
    if (std::abs(add) < 1e-21L * std::abs(sum) && k > 2) break;
  }
  return sum;
}

inline cplx J(int n, cplx z) {
  const lc r = jn_series(n, lc(z.real(), z.imag()), -1);
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

inline cplx I(int n, cplx z) {
  const lc r = jn_series(n, lc(z.real(), z.imag()), 1);
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

inline cplx Y(int n, cplx zd) {
  const lc z(zd.real(), zd.imag());
  const lc lg = std::log(z / 2.0L);
  const long double p = bessel_detail::ld_pi;
  lc r;
  if (n == 0) r = (2.0L / p) * lg * jn_series(0, z, -1) - psi_series(0, z, -1) / p;
  else r = -2.0L / (p * z) + (2.0L / p) * lg * jn_series(1, z, -1) - psi_series(1, z, -1) / p;
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

inline cplx K(int n, cplx zd) {
  const lc z(zd.real(), zd.imag());
  const lc lg = std::log(z / 2.0L);
  lc r;
  if (n == 0) r = -lg * jn_series(0, z, 1) + 0.5L * psi_series(0, z, 1);
  else r = 1.0L / z + lg * jn_series(1, z, 1) - 0.5L * psi_series(1, z, 1);
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

}  // namespace complex_bessel

/// Largest residual of the order-1 connection formulas at x > 0:
///   Y(ix) = e^{i pi}I(x) - (2/pi) e^{-i pi/2} K(x)
///   J(ix) = e^{i pi/2} I(x)
///   K(ix) = -(pi/2) [J(-x) + i Y(-x)]
///   J(-x) = -J(x)
inline double bessel_interconnect_check(double x) {
  if (!(x > 0.0)) throw domain_error("bessel_interconnect_check: x must be positive");
  using namespace std::complex_literals;
  const cplx ix(0.0, x);
  const cplx mx(-x, 0.0);
  const double i1 = bessel_i(1, x), k1 = bessel_k(1, x), j1 = bessel_j(1, x);

  auto rel = [](cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };

  const cplx y_ix = complex_bessel::Y(1, ix);
  const double r1 = rel(y_ix, std::exp(1i * pi) * i1 - (2.0 / pi) * std::exp(-0.5i * pi) * k1);
  const double r2 = rel(complex_bessel::J(1, ix), std::exp(0.5i * pi) * i1);
  const double r3 = rel(complex_bessel::K(1, ix), -(pi / 2.0) * (complex_bessel::J(1, mx) + 1i * complex_bessel::Y(1, mx)));
  const double r4 = rel(complex_bessel::J(1, mx), cplx(-j1, 0.0));
  return std::max({r1, r2, r3, r4});
}

}  // namespace piltz
