#pragma once

// Riemann, Hurwitz, Dirichlet L and Dedekind zeta functions on the complex
// plane (Euler-Maclaurin), Laurent data at s = 1 by circular contour
// quadrature, main terms, and functional-equation checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "piltz/common.hpp"
#include "piltz/field.hpp"
#include "piltz/gamma.hpp"

namespace piltz {

namespace zeta_detail {

inline constexpr int max_em_terms = 60;

using ld = long double;
using lcplx = std::complex<long double>;

// B_{2j} / (2j)! for j = 1..max_em_terms.
inline const std::array<ld, max_em_terms + 1>& bernoulli_ratios() {
  static const std::array<ld, max_em_terms + 1> table = [] {
    std::array<ld, max_em_terms + 1> t{};
    // Exact low-order values; the rest from B_{2j}/(2j)! = (-1)^{j+1} 2 zeta(2j) / (2 pi)^{2j}.
    const ld exact[] = {0.0L,
                        1.0L / 12.0L,
                        -1.0L / 720.0L,
                        1.0L / 30240.0L,
                        -1.0L / 1209600.0L,
                        1.0L / 47900160.0L,
                        -691.0L / 1307674368000.0L};
    for (int j = 1; j <= 6; ++j) t[j] = exact[j];
    const ld two_pi = 6.283185307179586476925286766559005768L;
    for (int j = 7; j <= max_em_terms; ++j) {
      ld z = 0.0L;
      for (int n = 60; n >= 1; --n) z += std::pow(static_cast<ld>(n), -2.0L * j);
      const ld mag = 2.0L * z * std::exp(-2.0L * j * std::log(two_pi));
      t[j] = (j % 2 == 1) ? mag : -mag;
    }
    return t;
  }();
  return table;
}

inline int em_cutoff(cplx s) { return 16 + static_cast<int>(std::ceil(0.5 * std::abs(s))); }

// Euler-Maclaurin tail of sum_{n >= N} (n + a)^{-s} without the (N+a)^{1-s}/(s-1) term.
inline lcplx em_tail(lcplx s, ld base) {
  const auto& b = bernoulli_ratios();
  const ld lb = std::log(base);
  const lcplx pw = std::exp(-s * lb);  // base^{-s}
  lcplx sum = 0.5L * pw;
  lcplx rising = s;                    // s (s+1) ... (s+2j-2)
  lcplx p = pw / base;                 // base^{-s-2j+1}
  const ld inv2 = 1.0L / (base * base);
  ld prev = std::numeric_limits<ld>::infinity();
  for (int j = 1; j <= max_em_terms; ++j) {
    const lcplx term = b[j] * rising * p;
    const ld mag = std::abs(term);
    sum += term;
    if (mag <= 1e-21L * std::abs(sum) || mag == 0.0L) break;
    if (mag > prev) break;  // asymptotic regime exhausted
    prev = mag;
    rising *= (s + static_cast<ld>(2 * j - 1)) * (s + static_cast<ld>(2 * j));
    p *= inv2;
  }
  return sum;
}

// sum_{n=0}^{N-1} (n + a)^{-s}
inline lcplx head_sum(lcplx s, ld a, int N) {
  lcplx sum = 0.0L;
  for (int n = N - 1; n >= 0; --n) sum += std::exp(-s * std::log(n + a));
  return sum;
}

// (e^u - 1) / u
inline lcplx expm1_over(lcplx u) {
  if (std::abs(u) < 1e-3L) return 1.0L + u * (0.5L + u * (1.0L / 6.0L + u * (1.0L / 24.0L + u / 120.0L)));
  return (std::exp(u) - 1.0L) / u;
}

// zeta(s, a) with cut-off N; with regular = true the pole 1/(s - 1) is removed.
inline cplx hurwitz_em(cplx sd, double a, int N, bool regular = false) {
  const lcplx s(sd.real(), sd.imag());
  const ld base = N + static_cast<ld>(a);
  const ld lb = std::log(base);
  lcplx pole;
  if (regular) pole = -lb * expm1_over((1.0L - s) * lb);
  else pole = std::exp((1.0L - s) * lb) / (s - 1.0L);
  const lcplx r = head_sum(s, a, N) + pole + em_tail(s, base);
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

inline void check_hurwitz_param(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw domain_error("hurwitz_zeta: parameter a must lie in (0, 1]");
}

}  // namespace zeta_detail

/// Hurwitz zeta(s, a) for 0 < a <= 1 and s != 1.
inline cplx hurwitz_zeta(cplx s, double a) {
  zeta_detail::check_hurwitz_param(a);
  if (s == cplx(1.0, 0.0)) throw domain_error("hurwitz_zeta: pole at s = 1");
  return zeta_detail::hurwitz_em(s, a, zeta_detail::em_cutoff(s));
}

/// zeta(s, a) - 1/(s - 1); entire in s.
inline cplx hurwitz_zeta_regular(cplx s, double a) {
  zeta_detail::check_hurwitz_param(a);
  return zeta_detail::hurwitz_em(s, a, zeta_detail::em_cutoff(s), true);
}

inline cplx riemann_zeta(cplx s) {
  if (s == cplx(1.0, 0.0)) throw domain_error("riemann_zeta: pole at s = 1");
  return hurwitz_zeta(s, 1.0);
}

/// L(s, chi_D) for a fundamental discriminant D; D = 1 gives zeta(s).
inline cplx dirichlet_L(cplx s, std::int64_t D) {
  if (D == 1) return riemann_zeta(s);
  if (!is_fundamental_discriminant(D)) throw domain_error("dirichlet_L: D is not a fundamental discriminant");
  const std::int64_t q = std::llabs(D);
  // sum_a chi(a) = 0, so the pole parts of zeta(s, a/q) cancel.
  cplx sum = 0.0;
  for (std::int64_t a = 1; a < q; ++a) {
    const int c = kronecker_symbol(D, a);
    if (c == 0) continue;
    sum += static_cast<double>(c) * hurwitz_zeta_regular(s, static_cast<double>(a) / static_cast<double>(q));
  }
  return std::exp(-s * std::log(static_cast<double>(q))) * sum;
}

inline void require_zeta(const FieldDescriptor& f, const char* who) {
  if (!f.has_zeta())
    throw domain_error(std::string(who) + ": Dedekind zeta is only available for Q and quadratic fields");
}

inline cplx dedekind_zeta(const FieldDescriptor& field, cplx s) {
  require_zeta(field, "dedekind_zeta");
  if (s == cplx(1.0, 0.0)) throw domain_error("dedekind_zeta: pole at s = 1");
  if (field.kind == FieldKind::Rationals) return riemann_zeta(s);
  return riemann_zeta(s) * dirichlet_L(s, field.disc);
}

/// zeta_K(0); exactly zero when r1 + r2 > 1.
inline double zeta_at_zero(const FieldDescriptor& field) {
  if (field.r1 + field.r2 > 1) return 0.0;
  if (field.kind == FieldKind::Rationals) return -0.5;
  if (field.kind == FieldKind::Quadratic) {
    // zeta(0) L(0, chi) with L(0, chi) = -(1/q) sum_a a chi(a).
    const std::int64_t q = field.abs_disc;
    std::int64_t acc = 0;
    for (std::int64_t a = 1; a < q; ++a) acc += a * kronecker_symbol(field.disc, a);
    return -0.5 * (-static_cast<double>(acc) / static_cast<double>(q));
  }
  // Degree-1 generic descriptors can only be Q itself; imaginary quadratic generic
  // descriptors have no character data.
  throw domain_error("zeta_at_zero: value unknown for " + field.name());
}

/// Laurent expansion sum_{k >= -m} c_k (s-1)^k of zeta_K(s)^m about s = 1.
struct LaurentData {
  int pole_order = 1;
  std::vector<cplx> coeffs;  // c_{-m}, ..., c_J
  double residual = 0.0;     // agreement of the last two quadrature refinements
  int nodes = 0;

  cplx coeff(int k) const {
    const int idx = k + pole_order;
    if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return 0.0;
    return coeffs[static_cast<std::size_t>(idx)];
  }
  int max_index() const { return static_cast<int>(coeffs.size()) - pole_order - 1; }
};

/// Laurent coefficients c_{-m}..c_J of zeta_K^m about s = 1 by trapezoidal
/// quadrature on |s - 1| = radius, doubling nodes from 64 until two
/// successive estimates agree to 1e-11.
inline LaurentData laurent_at_one(const FieldDescriptor& field, int m, int J, double radius = 0.25) {
  require_zeta(field, "laurent_at_one");
  if (m < 1) throw domain_error("laurent_at_one: m must be at least 1");
  if (J < 0) throw domain_error("laurent_at_one: J must be non-negative");
  const int count = m + J + 1;
  auto estimate = [&](int nodes) {
    std::vector<cplx> c(static_cast<std::size_t>(count), 0.0);
    for (int j = 0; j < nodes; ++j) {
      const double th = 2.0 * pi * (j + 0.5) / nodes;
      const cplx u = std::polar(radius, th);
      const cplx f = std::pow(dedekind_zeta(field, 1.0 + u), m);
      // c_k = (1/N) sum f(u_j) u_j^{-k}
      cplx upow = std::pow(u, m);  // u^{-k} for k = -m
      for (int idx = 0; idx < count; ++idx) {
        c[static_cast<std::size_t>(idx)] += f * upow;
        upow /= u;
      }
    }
    for (auto& v : c) v /= static_cast<double>(nodes);
    return c;
  };
  std::vector<cplx> prev = estimate(64);
  for (int nodes = 128; nodes <= 8192; nodes *= 2) {
    std::vector<cplx> cur = estimate(nodes);
    double diff = 0.0;
    for (int i = 0; i < count; ++i)
      diff = std::max(diff, std::abs(cur[i] - prev[i]) / std::max(1.0, std::abs(cur[i])));
    if (diff <= 1e-11) {
      LaurentData out;
      out.pole_order = m;
      out.coeffs = std::move(cur);
      out.residual = diff;
      out.nodes = nodes;
      // zeta_K is real on the real axis.
      for (auto& v : out.coeffs) v = cplx(v.real(), 0.0);
      return out;
    }
    prev = std::move(cur);
  }
  throw convergence_error("laurent_at_one: contour quadrature did not converge", 0.0);
}

/// Res_{s=1} zeta_K(s)^m x^s / s = x P(log x).
struct MainTermValue {
  double x = 0.0;
  double value = 0.0;
  std::vector<double> poly;  // coefficients of P, lowest degree first
};

inline MainTermValue main_term(const LaurentData& ld, double x) {
  if (!(x > 0.0)) throw domain_error("main_term: x must be positive");
  const int m = ld.pole_order;
  // x^s/s = x e^{uL} / (1+u): Taylor coefficient of u^j is x sum_{i<=j} L^i/i! (-1)^{j-i}.
  // P(L) = sum_i p_i L^i, p_i = (1/i!) sum_{j=i}^{m-1} c_{-1-j} (-1)^{j-i}.
  MainTermValue out;
  out.x = x;
  out.poly.assign(static_cast<std::size_t>(m), 0.0);
  double ifact = 1.0;
  for (int i = 0; i < m; ++i) {
    if (i > 0) ifact *= i;
    double acc = 0.0;
    for (int j = i; j < m; ++j) acc += ld.coeff(-1 - j).real() * (((j - i) % 2) ? -1.0 : 1.0);
    out.poly[static_cast<std::size_t>(i)] = acc / ifact;
  }
  const double L = std::log(x);
  double p = 0.0;
  for (int i = m - 1; i >= 0; --i) p = p * L + out.poly[static_cast<std::size_t>(i)];
  out.value = x * p;
  return out;
}

inline MainTermValue main_term(const FieldDescriptor& field, int m, double x) {
  return main_term(laurent_at_one(field, m, 0), x);
}

/// Lambda_K(s) = D^{s/2} Gamma_R(s)^{r1} Gamma_C(s)^{r2} zeta_K(s).
inline cplx completed_lambda(const FieldDescriptor& field, cplx s) {
  require_zeta(field, "completed_lambda");
  if (s == cplx(0.0, 0.0) || s == cplx(1.0, 0.0)) throw domain_error("completed_lambda: pole at s = 0 or s = 1");
  if (s.imag() == 0.0 && s.real() < 0.0 && s.real() == std::floor(s.real()))
    throw domain_error("completed_lambda: Gamma-factor pole at s = " + std::to_string(s.real()));
  const double D = static_cast<double>(field.abs_disc);
  cplx lg = 0.5 * s * std::log(D);
  if (field.r1 > 0) lg += static_cast<double>(field.r1) * (-0.5 * s * std::log(pi) + log_gamma_unwrapped(0.5 * s));
  if (field.r2 > 0)
    lg += static_cast<double>(field.r2) * (std::log(2.0) - s * std::log(2.0 * pi) + log_gamma_unwrapped(s));
  return std::exp(lg) * dedekind_zeta(field, s);
}

/// Relative residual of the m-th power functional equation
///   zeta_K(w)^m = i^{m r1} D^{m/2} (2pi)^{-m(r1+r2)} sum_j (-1)^j C(m r1, j)
///                 e^{i pi (2j - m r1) w / 2} ((2pi)^{dm} / D^m)^w
///                 Gamma(1-w)^{m(r1+r2)} / Gamma(w)^{m r2} zeta_K(1-w)^m.
inline double functional_equation_power_check(const FieldDescriptor& field, int m, cplx w) {
  require_zeta(field, "functional_equation_power_check");
  if (m < 1) throw domain_error("functional_equation_power_check: m must be at least 1");
  const double D = static_cast<double>(field.abs_disc);
  const int d = field.degree;
  const int mr1 = m * field.r1;
  const int mr2 = m * field.r2;
  const cplx lhs = std::pow(dedekind_zeta(field, w), m);

  cplx phase_sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= mr1; ++j) {
    if (j > 0) binom = binom * (mr1 - j + 1) / j;
    const double sign = (j % 2) ? -1.0 : 1.0;
    phase_sum += sign * binom * std::exp(cplx(0.0, 0.5 * pi * (2 * j - mr1)) * w);
  }
  const cplx ipow = std::pow(cplx(0.0, 1.0), mr1);
  const cplx log_scale = w * (static_cast<double>(d * m) * std::log(2.0 * pi) - m * std::log(D));
  const cplx log_gam = static_cast<double>(mr1 + mr2) * log_gamma_unwrapped(1.0 - w) -
                       static_cast<double>(mr2) * log_gamma_unwrapped(w);
  const cplx pref = ipow * std::pow(D, 0.5 * m) * std::pow(2.0 * pi, -static_cast<double>(mr1 + mr2));
  const cplx rhs = pref * phase_sum * std::exp(log_scale + log_gam) * std::pow(dedekind_zeta(field, 1.0 - w), m);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

}  // namespace piltz
