#pragma once

// Both sides of the Voronoi-type identities for I_K^m(x): truncated
// special-function series against brute-force sums, and the Riesz-smoothed
// contour identity checked through a vertical integral.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "piltz/bessel.hpp"
#include "piltz/coefficients.hpp"
#include "piltz/common.hpp"
#include "piltz/field.hpp"
#include "piltz/meijer.hpp"
#include "piltz/rational.hpp"
#include "piltz/zeta.hpp"

namespace piltz {

enum class IdentityVariant { RationalsM2, RationalsM, RealQuadratic, ImagQuadratic, PurelyImaginaryMeijer, TotallyRealSteen };

inline const char* to_string(IdentityVariant v) {
  switch (v) {
    case IdentityVariant::RationalsM2: return "RationalsM2";
    case IdentityVariant::RationalsM: return "RationalsM";
    case IdentityVariant::RealQuadratic: return "RealQuadratic";
    case IdentityVariant::ImagQuadratic: return "ImagQuadratic";
    case IdentityVariant::PurelyImaginaryMeijer: return "PurelyImaginaryMeijer";
    case IdentityVariant::TotallyRealSteen: return "TotallyRealSteen";
  }
  return "?";
}

struct IdentityCase {
  IdentityVariant variant = IdentityVariant::RationalsM2;
  FieldDescriptor field;
  int m = 2;
};

/// Builds a case and checks the variant's signature constraints.
inline IdentityCase make_case(IdentityVariant v, const FieldDescriptor& field, int m) {
  if (m < 1) throw domain_error("identity case: m must be at least 1");
  auto fail = [&](const std::string& why) {
    throw domain_error(std::string("identity case ") + to_string(v) + ": " + why);
  };
  switch (v) {
    case IdentityVariant::RationalsM2:
      if (field.kind != FieldKind::Rationals || m != 2) fail("requires the rationals with m = 2");
      break;
    case IdentityVariant::RationalsM:
      if (field.kind != FieldKind::Rationals) fail("requires the rationals");
      break;
    case IdentityVariant::RealQuadratic:
      if (field.kind != FieldKind::Quadratic || field.disc < 0 || m != 1) fail("requires a real quadratic field with m = 1");
      break;
    case IdentityVariant::ImagQuadratic:
      if (field.kind != FieldKind::Quadratic || field.disc > 0 || m != 1)
        fail("requires an imaginary quadratic field with m = 1");
      break;
    case IdentityVariant::PurelyImaginaryMeijer:
      if (field.r1 != 0) fail("requires r1 = 0 so the G-argument is real");
      break;
    case IdentityVariant::TotallyRealSteen:
      if (field.r2 != 0) fail("requires a totally real field");
      break;
  }
  return {v, field, m};
}

namespace identity_detail {

// v_K^m(p^e) for e = 0..emax, given v_K(p^j).
inline std::vector<std::uint64_t> prime_power_profile(const FieldDescriptor& f, int m, std::int64_t p, int emax) {
  std::vector<std::uint64_t> base(static_cast<std::size_t>(emax + 1), 1);
  if (f.kind == FieldKind::Quadratic) {
    const int c = kronecker_symbol(f.disc, p);
    for (int j = 0; j <= emax; ++j) {
      if (c == 1)
        base[static_cast<std::size_t>(j)] = static_cast<std::uint64_t>(j + 1);
      else if (c == -1)
        base[static_cast<std::size_t>(j)] = (j % 2 == 0) ? 1 : 0;
    }
  } else if (f.kind != FieldKind::Rationals) {
    throw domain_error("coefficient lookup needs Q or a quadratic field; ingest a table instead");
  }
  std::vector<std::uint64_t> acc = base;
  for (int r = 1; r < m; ++r) {
    std::vector<std::uint64_t> next(acc.size(), 0);
    for (int e = 0; e <= emax; ++e)
      for (int j = 0; j <= e; ++j)
        next[static_cast<std::size_t>(e)] += base[static_cast<std::size_t>(j)] * acc[static_cast<std::size_t>(e - j)];
    acc = std::move(next);
  }
  return acc;
}

inline double sqrt_nx(std::int64_t n, double x) { return std::sqrt(static_cast<double>(n) * x); }

}  // namespace identity_detail

/// v_K^m(n) by trial division; Q and quadratic fields only.
inline std::uint64_t coefficient_at(const FieldDescriptor& f, int m, std::int64_t n) {
  if (n < 1) throw domain_error("coefficient_at: n must be positive");
  std::uint64_t out = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out *= identity_detail::prime_power_profile(f, m, p, e)[static_cast<std::size_t>(e)];
  }
  if (n > 1) out *= identity_detail::prime_power_profile(f, m, n, 1)[1];
  return out;
}

/// n-th summand of the classical divisor-problem series with d(n) supplied.
inline double series_term_rationals_m2(std::uint64_t dn, std::int64_t n, double x) {
  const double r = identity_detail::sqrt_nx(n, x);
  const double a = 4.0 * pi * r;
  return -(static_cast<double>(dn) / static_cast<double>(n)) * (bessel_y(1, a) + (2.0 / pi) * bessel_k(1, a)) * r;
}

inline double series_term_rationals_m2(std::int64_t n, double x) {
  return series_term_rationals_m2(coefficient_at(rationals(), 2, n), n, x);
}

/// n-th summand for a real (Y1 + 2/pi K1) or imaginary (J1) quadratic field.
inline double series_term_quadratic(const IdentityCase& c, std::uint64_t vn, std::int64_t n, double x) {
  if (c.variant != IdentityVariant::RealQuadratic && c.variant != IdentityVariant::ImagQuadratic)
    throw domain_error("series_term_quadratic: case must be RealQuadratic or ImagQuadratic");
  if (vn == 0) return 0.0;
  const double r = identity_detail::sqrt_nx(n, x);
  const double a = 4.0 * pi * r / std::sqrt(static_cast<double>(c.field.abs_disc));
  const double w = static_cast<double>(vn) / static_cast<double>(n);
  if (c.variant == IdentityVariant::ImagQuadratic) return w * bessel_j(1, a) * r;
  return -w * (bessel_y(1, a) + (2.0 / pi) * bessel_k(1, a)) * r;
}

inline double series_term_quadratic(const IdentityCase& c, std::int64_t n, double x) {
  return series_term_quadratic(c, coefficient_at(c.field, 1, n), n, x);
}

/// G-function form of the n-th summand for a field with r1 = 0.
inline GResult series_term_meijer(const FieldDescriptor& field, int m, std::uint64_t coeff, std::int64_t n, double x,
                                  const QuadratureControls& controls = {}) {
  if (field.r1 != 0) throw domain_error("series_term_meijer: requires r1 = 0 (real G-argument)");
  if (m < 1) throw domain_error("series_term_meijer: m must be at least 1");
  const int d = field.degree;
  const double D = static_cast<double>(field.abs_disc);
  GSpec g;
  g.q = m * d;
  g.k = g.q / 2;
  g.b.assign(static_cast<std::size_t>(g.q), 1.0);
  g.b[static_cast<std::size_t>(g.k - 1)] = 0.0;
  g.z = std::exp(static_cast<double>(d * m) * std::log(2.0 * pi) - m * std::log(D)) * static_cast<double>(n) * x;
  GResult r{};
  if (coeff == 0) return r;
  r = meijer_g(g, controls);
  const double pref =
      -std::exp(0.5 * m * (std::log(D) - d * std::log(2.0 * pi))) * static_cast<double>(coeff) / static_cast<double>(n);
  r.value *= pref;
  r.error *= std::abs(pref);
  return r;
}

inline GResult series_term_meijer(const FieldDescriptor& field, int m, std::int64_t n, double x,
                                  const QuadratureControls& controls = {}) {
  return series_term_meijer(field, m, coefficient_at(field, m, n), n, x, controls);
}

struct ConvergenceRow {
  std::int64_t n = 0;
  double partial = 0.0;
  double discrepancy = 0.0;
};

struct IdentityReport {
  IdentityCase kase;
  Rational x;
  std::int64_t N = 0;
  double oracle = 0.0;
  double mainTerm = 0.0;
  std::vector<double> mainTermPoly;
  double leadingResidueTerm = 0.0;  // H_m x with H_m the top-order residue coefficient
  double constantTerm = 0.0;
  bool seriesEvaluated = false;
  std::string seriesStatus;
  double series = std::numeric_limits<double>::quiet_NaN();
  double accelerated = std::numeric_limits<double>::quiet_NaN();
  double seriesErrorBar = 0.0;
  double discrepancy = std::numeric_limits<double>::quiet_NaN();
  double discrepancyAccelerated = std::numeric_limits<double>::quiet_NaN();
  std::vector<ConvergenceRow> convergence;
};

/// Optional inputs for fields the library cannot build on its own.
struct IdentityInputs {
  const CoefficientTable* coefficients = nullptr;
  const LaurentData* laurent = nullptr;
  std::optional<double> zetaAtZero;
  QuadratureControls gControls;
};

inline IdentityReport evaluate_identity(const IdentityCase& c, const Rational& x, std::int64_t N,
                                        const IdentityInputs& in = {}) {
  if (N < 1) throw domain_error("evaluate_identity: N must be at least 1");
  if (x.num() <= 0) throw domain_error("evaluate_identity: x must be positive");
  make_case(c.variant, c.field, c.m);
  const std::int64_t need = std::max<std::int64_t>(std::max<std::int64_t>(x.floor(), N), 1);

  std::optional<CoefficientTable> own;
  const CoefficientTable* table = in.coefficients;
  if (table) {
    if (!(table->field() == c.field) || table->power() != c.m)
      throw domain_error("evaluate_identity: supplied coefficients belong to a different field or power");
    if (table->limit() < need) throw domain_error("evaluate_identity: supplied coefficients stop before max(x, N)");
  } else {
    own.emplace(coeff_power(c.field, c.m, need));
    table = &*own;
  }

  IdentityReport rep;
  rep.kase = c;
  rep.x = x;
  rep.N = N;
  rep.oracle = halved_partial_sum(*table, x);

  const double xd = x.to_double();
  std::optional<LaurentData> ownLaurent;
  const LaurentData* ld = in.laurent;
  if (!ld) {
    ownLaurent.emplace(laurent_at_one(c.field, c.m, 0));
    ld = &*ownLaurent;
  }
  if (ld->pole_order != c.m) throw domain_error("evaluate_identity: Laurent data has the wrong pole order");
  const auto mt = main_term(*ld, xd);
  rep.mainTerm = mt.value;
  rep.mainTermPoly = mt.poly;
  rep.leadingResidueTerm = ld->coeff(-1).real() * xd;
  const double z0 = in.zetaAtZero ? *in.zetaAtZero : zeta_at_zero(c.field);
  rep.constantTerm = std::pow(z0, c.m);

  const bool evaluable = c.variant == IdentityVariant::RationalsM2 || c.variant == IdentityVariant::RealQuadratic ||
                         c.variant == IdentityVariant::ImagQuadratic ||
                         c.variant == IdentityVariant::PurelyImaginaryMeijer ||
                         (c.variant == IdentityVariant::RationalsM && c.m <= 2);
  if (!evaluable) {
    rep.seriesStatus = "not numerically evaluated";
    return rep;
  }
  rep.seriesEvaluated = true;
  rep.seriesStatus = "evaluated";

  const auto& v = table->raw();
  const IdentityCase qcase = c;
  auto term = [&](std::int64_t n) -> double {
    const std::uint64_t a = v[static_cast<std::size_t>(n)];
    switch (c.variant) {
      case IdentityVariant::RationalsM2: return series_term_rationals_m2(a, n, xd);
      case IdentityVariant::RationalsM:
        if (c.m == 2) return series_term_rationals_m2(a, n, xd);
        {
          // sin(2 pi n x) with n x reduced exactly modulo 1
          const std::int64_t r = static_cast<std::int64_t>((static_cast<__int128>(n) * x.num()) % x.den());
          return std::sin(2.0 * pi * static_cast<double>(r) / static_cast<double>(x.den())) / (pi * n);
        }
      case IdentityVariant::RealQuadratic:
      case IdentityVariant::ImagQuadratic: return series_term_quadratic(qcase, a, n, xd);
      case IdentityVariant::PurelyImaginaryMeijer: {
        const auto g = series_term_meijer(c.field, c.m, a, n, xd, in.gControls);
        rep.seriesErrorBar += g.error;
        return g.value;
      }
      case IdentityVariant::TotallyRealSteen: break;
    }
    return 0.0;
  };

  const double base = rep.constantTerm + rep.mainTerm;
  const std::int64_t window = (N + 3) / 4;
  double partial = 0.0;
  double tail_sum = 0.0;
  rep.convergence.reserve(static_cast<std::size_t>(N));
  for (std::int64_t n = 1; n <= N; ++n) {
    partial += term(n);
    rep.convergence.push_back({n, partial, std::abs(rep.oracle - (base + partial))});
    if (n > N - window) tail_sum += partial;
  }
  rep.series = partial;
  rep.accelerated = tail_sum / static_cast<double>(window);
  rep.discrepancy = std::abs(rep.oracle - (base + rep.series));
  rep.discrepancyAccelerated = std::abs(rep.oracle - (base + rep.accelerated));
  return rep;
}

// ---------------------------------------------------------------------------
// Riesz-smoothed identity

namespace riesz_detail {

// 20-point Gauss-Legendre nodes and weights on [-1, 1] (positive half).
inline constexpr std::array<double, 10> gl_x = {
    0.0765265211334973337546404, 0.2277858511416450780804962, 0.3737060887154195606725482,
    0.5108670019508270980043641, 0.6360536807265150254528367, 0.7463319064601507926143051,
    0.8391169718222188233945291, 0.9122344282513259058677524, 0.9639719272779137912676661,
    0.9931285991850949247861224};
inline constexpr std::array<double, 10> gl_w = {
    0.1527533871307258506980843, 0.1491729864726037467878287, 0.1420961093183820513292983,
    0.1316886384491766268984945, 0.1181945319615184173123774, 0.1019301198172404350367501,
    0.0832767415767047487247581, 0.0626720483341090635695065, 0.0406014298003869413310400,
    0.0176140071391521183118620};

// Gauss-Legendre over the straight segment a -> b of the complex integrand f, with
// `panels` equal panels. Also accumulates sum |f||dw| for a rounding estimate.
template <class F>
cplx segment(F&& f, cplx a, cplx b, int panels, double& abs_acc) {
  cplx total = 0.0;
  const cplx step = (b - a) / static_cast<double>(panels);
  for (int p = 0; p < panels; ++p) {
    const cplx mid = a + (p + 0.5) * step;
    const cplx half = 0.5 * step;
    cplx acc = 0.0;
    for (std::size_t i = 0; i < gl_x.size(); ++i) {
      const cplx f1 = f(mid + gl_x[i] * half);
      const cplx f2 = f(mid - gl_x[i] * half);
      acc += gl_w[i] * (f1 + f2);
      abs_acc += gl_w[i] * (std::abs(f1) + std::abs(f2)) * std::abs(half);
    }
    total += acc * half;
  }
  return total;
}

// Exponential integral E1(z) on the principal branch.
inline cplx expint_e1(cplx z) {
  const double az = std::abs(z);
  if (az == 0.0) throw domain_error("E1 is singular at 0");
  if (az <= 2.0 || (z.real() < 0.0 && std::abs(z.imag()) < 1.0 && az < 20.0)) {
    // -gamma - log z + sum_{k>=1} (-1)^{k+1} z^k / (k k!)
    cplx sum = 0.0;
    cplx term = 1.0;
    for (int k = 1; k < 400; ++k) {
      term *= -z / static_cast<double>(k);
      const cplx add = -term / static_cast<double>(k);
      sum += add;
      if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return -euler_gamma - std::log(z) + sum;
  }
  // Continued fraction e^{-z} / (z + 1 - 1^2/(z + 3 - 2^2/(z + 5 - ...))), modified Lentz.
  const double tiny = 1e-300;
  cplx b = z + 1.0;
  cplx f = b;
  cplx C = f;
  cplx Dv = 0.0;
  for (int k = 1; k < 5000; ++k) {
    const double a = -static_cast<double>(k) * k;
    b += 2.0;
    Dv = b + a * Dv;
    if (std::abs(Dv) < tiny) Dv = tiny;
    C = b + a / C;
    if (std::abs(C) < tiny) C = tiny;
    Dv = 1.0 / Dv;
    const cplx delta = C * Dv;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-z) / f;
}

}  // namespace riesz_detail

struct VerticalIntegral {
  double value = 0.0;
  double error = 0.0;       // quadrature + tail + rounding
  double tailBound = 0.0;   // bound on the Dirichlet-series remainder of the analytic tail
  double sigmaTail = 0.0;   // abscissa of the tail line
  std::int64_t tailTerms = 0;
};

/// Bound for the Riesz order: rho >= m d (1 - mu) / 2 + 1.
inline bool riesz_order_admissible(const FieldDescriptor& f, int m, int rho, double mu) {
  return rho >= m * f.degree * (1.0 - mu) / 2.0 + 1.0 - 1e-12;
}

/// V = (1/2 pi i) int_{(mu)} zeta_K(w)^m x^{rho+w} / (w (w+1) ... (w+rho)) dw.
///
/// The line Re w = mu is followed up to height T0 = controls.halfHeight, then a
/// horizontal segment leads to Re w = sigma > 1, and the remaining vertical
/// tail is integrated term by term from the Dirichlet series (exponential
/// integrals), with the omitted coefficients bounded through zeta_K(sigma)^m.
inline VerticalIntegral smoothed_vertical_integral(const FieldDescriptor& field, int m, int rho, double mu,
                                                   const Rational& xr, const QuadratureControls& controls = {}) {
  require_zeta(field, "smoothed_vertical_integral");
  if (m < 1 || rho < 1) throw domain_error("smoothed_vertical_integral: need m >= 1 and rho >= 1");
  if (!(mu > -1.0 && mu < 0.0)) throw domain_error("smoothed_vertical_integral: mu must lie in (-1, 0)");
  if (!riesz_order_admissible(field, m, rho, mu))
    throw domain_error("smoothed_vertical_integral: rho is below m d (1 - mu)/2 + 1");
  if (xr.num() <= 0) throw domain_error("smoothed_vertical_integral: x must be positive");
  const double x = xr.to_double();
  const double lx = std::log(x);
  const double T0 = controls.halfHeight;
  if (!(T0 >= 4.0)) throw domain_error("smoothed_vertical_integral: halfHeight must be at least 4");

  auto f = [&](cplx w) {
    cplx den = 1.0;
    for (int k = 0; k <= rho; ++k) den *= (w + static_cast<double>(k));
    return std::pow(dedekind_zeta(field, w), m) * std::exp((static_cast<double>(rho) + w) * lx) / den;
  };

  const double sigma = 3.0;
  const cplx a0(mu, 0.0), a1(mu, T0), a2(sigma, T0);
  const int na = static_cast<int>(std::ceil(T0));
  const int nb = static_cast<int>(std::ceil(sigma - mu));

  double abs_fine = 0.0, abs_coarse = 0.0;
  const cplx fine = riesz_detail::segment(f, a0, a1, na, abs_fine) + riesz_detail::segment(f, a1, a2, nb, abs_fine);
  const cplx coarse = riesz_detail::segment(f, a0, a1, std::max(1, na / 2), abs_coarse) +
                      riesz_detail::segment(f, a1, a2, std::max(1, nb / 2), abs_coarse);

  // Tail from sigma + i T0 to sigma + i infinity, one Dirichlet coefficient at a time:
  // int y^w / prod (w+k) dw = sum_k c_k y^{-k} E1(-log(y) (sigma + k + i T0)), y = x/n.
  std::vector<double> ck(static_cast<std::size_t>(rho + 1));
  {
    double fact_k = 1.0;
    for (int k = 0; k <= rho; ++k) {
      if (k > 0) fact_k *= k;
      double fact_rest = 1.0;
      for (int j = 2; j <= rho - k; ++j) fact_rest *= j;
      ck[static_cast<std::size_t>(k)] = ((k % 2) ? -1.0 : 1.0) / (fact_k * fact_rest);
    }
  }
  const cplx zs = std::pow(dedekind_zeta(field, sigma), m);
  const double zeta_sigma = zs.real();
  const double tol = 1e-9 * std::max(1.0, std::abs(fine.imag()) / pi);
  std::int64_t M = std::max<std::int64_t>(2000, 4 * xr.floor());
  cplx tail = 0.0;
  double remainder = 0.0;
  std::int64_t done = 0;
  double partial_zeta = 0.0;
  double tail_abs = 0.0;
  for (;;) {
    const auto table = coeff_power(field, m, M);
    const auto& v = table.raw();
    for (std::int64_t n = done + 1; n <= M; ++n) {
      const std::uint64_t an = v[static_cast<std::size_t>(n)];
      if (an == 0) continue;
      const double dn = static_cast<double>(n);
      partial_zeta += static_cast<double>(an) * std::pow(dn, -sigma);
      const double lam = lx - std::log(dn);
      cplx s = 0.0;
      if (lam == 0.0) {
        for (int k = 0; k <= rho; ++k) s -= ck[static_cast<std::size_t>(k)] * std::log(cplx(sigma + k, T0));
      } else {
        for (int k = 0; k <= rho; ++k) {
          const cplx u0(sigma + k, T0);
          s += ck[static_cast<std::size_t>(k)] * std::exp(-lam * k) * riesz_detail::expint_e1(-lam * u0);
        }
      }
      const cplx add = static_cast<double>(an) * std::exp(rho * lx) * s;
      tail += add;
      tail_abs += std::abs(add);
    }
    done = M;
    // |sum_{n > M}| <= x^{rho+sigma} (zeta_K(sigma)^m - partial) T0^{-rho} / rho
    remainder = std::exp((rho + sigma) * lx) * std::max(0.0, zeta_sigma - partial_zeta) *
                std::pow(T0, -static_cast<double>(rho)) / rho;
    if (remainder / pi <= 0.1 * tol || M >= 2000000) break;
    M *= 4;
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  VerticalIntegral out;
  out.value = (fine.imag() + tail.imag()) / pi;
  const double quad = std::abs(fine.imag() - coarse.imag()) / pi;
  // Cancellation inside each coefficient's partial-fraction sum scales like T0^rho.
  const double tail_round = 64.0 * eps * tail_abs * std::pow(T0, rho) / pi;
  out.tailBound = remainder / pi;
  out.error = quad + out.tailBound + 64.0 * eps * abs_fine / pi + tail_round + 16.0 * eps * std::abs(out.value);
  out.sigmaTail = sigma;
  out.tailTerms = done;
  return out;
}

struct RieszCheckReport {
  FieldDescriptor field;
  int m = 1;
  int rho = 1;
  double mu = -0.5;
  Rational x;
  double direct = 0.0;
  double residueSide = 0.0;
  double residueAtZero = 0.0;
  double residueAtOne = 0.0;
  double verticalIntegral = 0.0;
  double discrepancy = 0.0;
  double quadratureErrorBar = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Res_{w=1} zeta_K(w)^m x^{rho+w} / (w (w+1) ... (w+rho)) from Laurent data.
inline double residue_at_one(const LaurentData& ld, int rho, double x) {
  const int m = ld.pole_order;
  // Taylor coefficients in u = w - 1 of x^{rho+1} e^{u log x} prod_k 1/(1 + k + u).
  std::vector<double> g(static_cast<std::size_t>(m), 0.0);
  g[0] = std::pow(x, rho + 1);
  const double L = std::log(x);
  {
    std::vector<double> e(static_cast<std::size_t>(m), 0.0);
    e[0] = 1.0;
    for (int j = 1; j < m; ++j) e[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j - 1)] * L / j;
    for (int j = 0; j < m; ++j) g[static_cast<std::size_t>(j)] = g[0] * e[static_cast<std::size_t>(j)];
  }
  for (int k = 0; k <= rho; ++k) {
    // multiply by 1/(a + u) = (1/a) sum (-u/a)^j
    const double a = 1.0 + k;
    std::vector<double> h(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
      double c = 1.0 / a;
      for (int j = 0; i + j < m; ++j) {
        h[static_cast<std::size_t>(i + j)] += g[static_cast<std::size_t>(i)] * c;
        c *= -1.0 / a;
      }
    }
    g = std::move(h);
  }
  double r = 0.0;
  for (int j = 0; j < m; ++j) r += ld.coeff(-1 - j).real() * g[static_cast<std::size_t>(j)];
  return r;
}

inline RieszCheckReport riesz_check(const FieldDescriptor& field, int m, int rho, double mu, const Rational& x,
                                    const QuadratureControls& controls = {}, double relTol = 1e-6) {
  RieszCheckReport rep;
  rep.field = field;
  rep.m = m;
  rep.rho = rho;
  rep.mu = mu;
  rep.x = x;
  const auto vi = smoothed_vertical_integral(field, m, rho, mu, x, controls);
  const auto table = coeff_power(field, m, std::max<std::int64_t>(1, x.floor()));
  rep.direct = riesz_direct(table, rho, x).value;
  const double xd = x.to_double();
  double fact = 1.0;
  for (int k = 2; k <= rho; ++k) fact *= k;
  rep.residueAtZero = std::pow(zeta_at_zero(field), m) * std::pow(xd, rho) / fact;
  const auto ld = laurent_at_one(field, m, 0);
  rep.residueAtOne = residue_at_one(ld, rho, xd);
  rep.residueSide = rep.residueAtZero + rep.residueAtOne;
  rep.verticalIntegral = vi.value;
  rep.discrepancy = std::abs(rep.direct - rep.residueSide - rep.verticalIntegral);
  rep.quadratureErrorBar = vi.error + 1e-10 * std::abs(rep.residueAtOne);
  rep.tolerance = std::max(relTol * std::abs(rep.direct), rep.quadratureErrorBar);
  rep.passed = rep.discrepancy <= rep.tolerance;
  return rep;
}

}  // namespace piltz
