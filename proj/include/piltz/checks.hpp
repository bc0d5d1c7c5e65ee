#pragma once

// Residual checks for exact identities; shared by the self-test, the
// acceptance run and the unit tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "piltz/bessel.hpp"
#include "piltz/coefficients.hpp"
#include "piltz/gamma.hpp"
#include "piltz/rational.hpp"
#include "piltz/zeta.hpp"

namespace piltz::checks {

namespace detail {
// |e^d - 1| with the imaginary part of d taken modulo 2 pi.
inline double log_residual(cplx d) {
  return std::abs(std::exp(cplx(d.real(), piltz::detail::wrap_phase(d.imag()))) - 1.0);
}
}  // namespace detail

/// Gamma(z + 1) = z Gamma(z)
inline double gamma_recurrence(cplx z) { return detail::log_residual(log_gamma(z + 1.0) - log_gamma(z) - std::log(z)); }

/// Gamma(z) Gamma(1 - z) = pi / sin(pi z)
inline double gamma_reflection(cplx z) {
  return detail::log_residual(log_gamma(z) + log_gamma(1.0 - z) + piltz::detail::log_sin_pi(z) - std::log(pi));
}

/// Gamma(z) Gamma(z + 1/2) = 2^{1-2z} sqrt(pi) Gamma(2z)
inline double gamma_duplication(cplx z) {
  return detail::log_residual(log_gamma(z) + log_gamma(z + 0.5) - (1.0 - 2.0 * z) * std::log(2.0) -
                              0.5 * std::log(pi) - log_gamma(2.0 * z));
}

/// |Lambda(s) - Lambda(1 - s)| / |Lambda(s)|
inline double lambda_symmetry(const FieldDescriptor& f, cplx s) {
  const cplx a = completed_lambda(f, s);
  return std::abs(a - completed_lambda(f, 1.0 - s)) / std::abs(a);
}

/// |x (I1 K0 + I0 K1) - 1|
inline double bessel_wronskian(double x) {
  return std::abs(x * (bessel_i(1, x) * bessel_k(0, x) + bessel_i(0, x) * bessel_k(1, x)) - 1.0);
}

/// Relative gap between rho! riesz_direct(rho, x) and rho int_0^x (x - t)^{rho-1} A(t) dt,
/// A the summatory function. The integrand is a polynomial between integers, so a
/// 10-point Gauss-Legendre rule per unit interval is exact up to rounding.
inline double riesz_integral_residual(const CoefficientTable& t, int rho, const Rational& x) {
  if (rho < 1) throw domain_error("riesz_integral_residual: rho must be at least 1");
  static const double gx[] = {0.14887433898163121, 0.43339539412924719, 0.67940956829902441, 0.86506336668898451,
                              0.97390652851717172};
  static const double gw[] = {0.29552422471475287, 0.26926671930999636, 0.21908636251598204, 0.14945134915058059,
                              0.066671344308688138};
  const double xd = x.to_double();
  const auto& v = t.raw();
  if (x.floor() > t.limit()) throw domain_error("riesz_integral_residual: x exceeds table limit");
  long double integral = 0.0L;
  std::uint64_t A = 0;
  for (std::int64_t k = 0; k < xd; ++k) {
    if (k >= 1) A += v[static_cast<std::size_t>(k)];
    const double a = static_cast<double>(k), b = std::min(xd, static_cast<double>(k + 1));
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    long double acc = 0.0L;
    for (int i = 0; i < 5; ++i)
      for (double sgn : {-1.0, 1.0}) acc += gw[i] * std::pow(xd - (mid + sgn * gx[i] * half), rho - 1);
    integral += acc * half * static_cast<long double>(A);
  }
  double fact = 1.0;
  for (int k = 2; k <= rho; ++k) fact *= k;
  const double lhs = fact * riesz_direct(t, rho, x).value;
  const double rhs = static_cast<double>(rho * integral);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

struct DifferenceCheck {
  std::vector<double> steps;
  std::vector<double> errors;
  bool second_order = false;
};

/// Central differences of x -> riesz_direct(rho, x) against riesz_direct(rho - 1, x)
/// with exact rational steps h = 2^-k; second order means each halving of h cuts
/// the error by about four, or the error already sits at rounding level.
inline DifferenceCheck riesz_difference_check(const CoefficientTable& t, int rho, const Rational& x, int kmin = 3,
                                              int kmax = 8) {
  if (rho < 1) throw domain_error("riesz_difference_check: rho must be at least 1");
  DifferenceCheck out;
  const double target = riesz_direct(t, rho - 1, x).value;
  const double floor = 1e-9 * std::max(1.0, std::abs(target));
  out.second_order = true;
  for (int k = kmin; k <= kmax; ++k) {
    const std::int64_t p = std::int64_t{1} << k;
    const Rational h(1, p);
    const Rational lo(x.num() * p - x.den(), x.den() * p), hi(x.num() * p + x.den(), x.den() * p);
    if (lo.floor() != hi.floor() || lo.is_integer() || hi.is_integer())
      throw domain_error("riesz_difference_check: an integer lies inside [x - h, x + h]");
    const double d = (riesz_direct(t, rho, hi).value - riesz_direct(t, rho, lo).value) / (2.0 * h.to_double());
    out.steps.push_back(h.to_double());
    out.errors.push_back(std::abs(d - target));
    const std::size_t n = out.errors.size();
    if (n >= 2 && out.errors[n - 1] > floor && out.errors[n - 1] > out.errors[n - 2] / 3.5) out.second_order = false;
  }
  return out;
}

}  // namespace piltz::checks
