#pragma once

// Meijer G^{k,0}_{0,q}(- ; b | z) for positive real z by Mellin-Barnes
// quadrature, and the Voronoi-Steen function V(x; a) = G^{n,0}_{0,n}(- ; a | x).

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "piltz/common.hpp"
#include "piltz/gamma.hpp"

namespace piltz {

struct GSpec {
  int q = 1;
  int k = 1;
  std::vector<double> b;  // first k: Gamma(b_j - s) in the numerator; rest: Gamma(1 - b_j + s) below
  double z = 1.0;

  double delta() const { return k - 0.5 * q; }
};

/// Contour controls. A NaN abscissa selects it automatically.
struct QuadratureControls {
  double mu = std::numeric_limits<double>::quiet_NaN();
  double halfHeight = 40.0;
  double step = 0.05;
  int maxRefinements = 6;
  double relTol = 1e-11;
};

struct GResult {
  double value = 0.0;
  double error = 0.0;
  double mu = 0.0;
  double step = 0.0;
  double height = 0.0;  // truncation point reached along the contour parameter
  int refinements = 0;
  bool converged = false;
};

namespace meijer_detail {

inline void validate(const GSpec& g) {
  if (g.q < 1) throw domain_error("meijer_g: q must be positive");
  if (g.k < 1 || g.k > g.q) throw domain_error("meijer_g: k must satisfy 1 <= k <= q");
  if (static_cast<int>(g.b.size()) != g.q) throw domain_error("meijer_g: b must have q entries");
  if (!(g.z > 0.0) || !std::isfinite(g.z)) throw domain_error("meijer_g: z must be positive and finite");
  if (g.delta() < 0.0) throw domain_error("meijer_g: delta = k - q/2 < 0, the integral diverges");
}

inline double b_min(const GSpec& g) {
  double m = g.b[0];
  for (int j = 1; j < g.k; ++j) m = std::min(m, g.b[static_cast<std::size_t>(j)]);
  return m;
}

// Abscissa near the real saddle of prod Gamma(b_j - s) z^s (all factors in the numerator).
inline double saddle_mu(const GSpec& g, double cap) {
  const double lz = std::log(g.z);
  auto f = [&](double s) {
    double acc = 0.0;
    for (double bj : g.b) acc += digamma(bj - s);
    return acc - lz;
  };
  if (f(cap) >= 0.0) return cap;
  // f is decreasing in s; walk left to bracket the root, then bisect.
  double lo = cap - 1.0;
  while (f(lo) < 0.0) lo = cap - 2.0 * (cap - lo);
  double hi = cap;
  for (int it = 0; it < 200 && hi - lo > 1e-10 * (1.0 + std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

inline cplx log_integrand(const GSpec& g, cplx s, double lz) {
  cplx acc = s * lz;
  for (int j = 0; j < g.q; ++j) {
    const double bj = g.b[static_cast<std::size_t>(j)];
    if (j < g.k)
      acc += log_gamma_unwrapped(bj - s);
    else
      acc -= log_gamma_unwrapped(1.0 - bj + s);
  }
  return acc;
}

struct Pass {
  double fine = 0.0;    // trapezoid with step h
  double coarse = 0.0;  // every other node, step 2h
  double tail = 0.0;
  double rounding = 0.0;
  double height = 0.0;
};

// One trapezoid pass along s(t) = mu + eps (sqrt(t^2 + w^2) - w) + i t, t >= 0.
// Uses the conjugate symmetry of the integrand for real z and b.
inline Pass trapezoid(const GSpec& g, double mu, double eps, double w, double h, double T) {
  constexpr double eps_mach = std::numeric_limits<double>::epsilon();
  constexpr double drop = 40.0;      // stop once |integrand| is e^{-40} below its peak
  constexpr long max_nodes = 4000000;
  const double lz = std::log(g.z);

  const cplx l0 = log_integrand(g, cplx(mu, 0.0), lz);
  const double f0 = std::exp(l0.real());  // real and positive-signed up to the phase below
  const double sign0 = std::cos(l0.imag());
  double sum_fine = f0 * sign0;
  double sum_coarse = sum_fine;
  double abs_sum = f0 * (1.0 + std::abs(l0));
  double peak = l0.real();
  double prev = l0.real();

  Pass p;
  long n = 1;
  for (;; ++n) {
    const double t = n * h;
    const double r = std::sqrt(t * t + w * w);
    const cplx s(mu + eps * (r - w), t);
    const cplx ds(eps * t / r, 1.0);
    const cplx lf = log_integrand(g, s, lz) + std::log(ds);
    const double mag = lf.real();
    const double val = 2.0 * std::exp(mag) * std::sin(lf.imag());
    sum_fine += val;
    if (n % 2 == 0) sum_coarse += val;
    abs_sum += 2.0 * std::exp(mag) * (1.0 + std::abs(lf));
    peak = std::max(peak, mag);
    const bool decaying = mag < prev;
    const double slope = (prev - mag) / h;  // decay rate of log|integrand|
    prev = mag;
    if (t >= T && decaying && mag < peak - drop) {
      p.tail = 2.0 * std::exp(mag) / std::max(slope, 1e-3);
      p.height = t;
      break;
    }
    if (n >= max_nodes) {
      p.tail = std::numeric_limits<double>::infinity();
      p.height = t;
      break;
    }
  }
  const double scale = h / (2.0 * pi);
  p.fine = scale * sum_fine;
  p.coarse = 2.0 * scale * sum_coarse;
  p.tail *= scale;
  p.rounding = 4.0 * eps_mach * scale * abs_sum;
  return p;
}

}  // namespace meijer_detail

/// Meijer G^{k,0}_{0,q}(- ; b | z), z > 0, with an error estimate.
inline GResult meijer_g(const GSpec& spec, const QuadratureControls& controls = {}) {
  meijer_detail::validate(spec);
  if (!(controls.halfHeight > 0.0) || !(controls.step > 0.0))
    throw domain_error("meijer_g: halfHeight and step must be positive");
  const double bmin = meijer_detail::b_min(spec);
  double mu = controls.mu;
  if (std::isnan(mu)) {
    mu = bmin - 0.5;
    if (spec.k == spec.q) mu = meijer_detail::saddle_mu(spec, mu);
  } else if (!(mu < bmin)) {
    throw domain_error("meijer_g: abscissa must lie left of every pole of Gamma(b_j - s)");
  }

  // Bend the contour to the right when delta = 0 so the integrand decays.
  double eps = 0.0;
  double w = 1.0;
  if (spec.delta() == 0.0) {
    w = std::max(2.0, std::pow(spec.z, 1.0 / spec.q));
    eps = 1.5 / w;
  }
  // Keep the step below the distance to the nearest pole.
  double h = std::min(controls.step, 0.1 * (bmin - mu));
  double T = controls.halfHeight;

  GResult best;
  best.error = std::numeric_limits<double>::infinity();
  best.mu = mu;
  for (int r = 0; r <= std::max(0, controls.maxRefinements); ++r) {
    const auto p = meijer_detail::trapezoid(spec, mu, eps, w, h, T);
    const double err = std::abs(p.fine - p.coarse) + p.tail + p.rounding;
    if (err < best.error) {
      best.value = p.fine;
      best.error = err;
      best.step = h;
      best.height = p.height;
      best.refinements = r;
    }
    if (best.error <= controls.relTol * std::abs(best.value)) {
      best.converged = true;
      break;
    }
    // Rounding dominates: further refinement cannot help.
    if (p.rounding >= 0.5 * err) break;
    h *= 0.5;
    T *= 1.5;
  }
  return best;
}

inline GResult voronoi_steen(double x, const std::vector<double>& a, const QuadratureControls& controls = {}) {
  if (a.empty()) throw domain_error("voronoi_steen: need at least one parameter");
  GSpec g;
  g.q = static_cast<int>(a.size());
  g.k = g.q;
  g.b = a;
  g.z = x;
  return meijer_g(g, controls);
}

}  // namespace piltz
