#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles/frozen_values.hpp"
#include "piltz/bessel.hpp"
#include "piltz/checks.hpp"
#include "piltz/gamma.hpp"
#include "piltz/meijer.hpp"

using namespace piltz;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST(Gamma, Values) {
  EXPECT_NEAR(std::abs(log_gamma(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma(0.5).real(), oracle::log_gamma_half, 1e-14);
  EXPECT_NEAR(log_gamma(5.0).real(), std::log(24.0), 1e-14);
  const cplx g = gamma(cplx(3, 4));
  EXPECT_LT(std::abs(g - cplx(oracle::gamma_3_4i_re, oracle::gamma_3_4i_im)) / std::abs(g), 1e-13);
  EXPECT_THROW(log_gamma(0.0), domain_error);
  EXPECT_THROW(log_gamma(-3.0), domain_error);
  EXPECT_NO_THROW(log_gamma(cplx(-3.0, 1e-9)));
}

TEST(Gamma, RealAxisAgainstLibm) {
  for (double x = -9.75; x < 60; x += 0.37) {
    if (std::abs(x - std::round(x)) < 1e-9 && x <= 0) continue;
    const double lg = std::lgamma(x);
    EXPECT_NEAR(log_gamma(x).real(), lg, 1e-12 * std::max(1.0, std::abs(lg))) << x;
  }
}

TEST(Gamma, AccuracyOnDisc) {
  // recurrence residual over the whole disc |z| <= 100
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    cplx z(100.0 * U(rng), 100.0 * U(rng));
    if (std::abs(z) > 100.0 || std::abs(z.imag()) < 1e-3) continue;
    EXPECT_LT(checks::gamma_recurrence(z), 1e-12) << z;
  }
}

TEST(Gamma, Identities) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    cplx z;
    do z = cplx(20 * U(rng), 20 * U(rng)); while (std::abs(z) > 20 || std::abs(z.imag()) < 1e-3);
    EXPECT_LT(checks::gamma_recurrence(z), 1e-10) << z;
    EXPECT_LT(checks::gamma_reflection(z), 1e-10) << z;
    EXPECT_LT(checks::gamma_duplication(z), 1e-10) << z;
  }
}

TEST(Gamma, Digamma) {
  EXPECT_NEAR(digamma(1.0), -euler_gamma, 1e-14);
  EXPECT_NEAR(digamma(0.5), -euler_gamma - 2 * std::log(2.0), 1e-14);
  EXPECT_THROW(digamma(0.0), domain_error);
}

TEST(Bessel, FrozenValues) {
  EXPECT_LT(rel(bessel_j(1, 2.0), oracle::J1_2), 1e-14);
  EXPECT_LT(rel(bessel_k(1, 2.0), oracle::K1_2), 1e-13);
  EXPECT_LT(std::abs(bessel_j(0, oracle::J0_first_zero)), 1e-9);
  const BesselKind kinds[] = {BesselKind::J, BesselKind::Y, BesselKind::I, BesselKind::K};
  for (const auto& row : oracle::bessel_table) {
    for (int order = 0; order <= 1; ++order)
      for (int k = 0; k < 4; ++k) {
        const double ref = row[1 + 4 * order + k];
        if (std::isnan(ref)) continue;
        const double got = bessel(kinds[k], order, row[0]);
        // relative near 1e-10, absolute for oscillatory J/Y of size below one
        const double scale = (k < 2) ? std::max(1.0, std::abs(ref)) : std::abs(ref);
        EXPECT_LE(std::abs(got - ref), 1e-10 * scale) << "kind " << k << " order " << order << " x " << row[0];
      }
  }
}

TEST(Bessel, AgainstLibstdcxx) {
  // libstdc++'s cylindrical Bessel functions as a second, unrelated implementation.
  for (double x = 1e-3; x <= 1e3; x *= 1.17) {
    for (int n = 0; n <= 1; ++n) {
      const double j = std::cyl_bessel_j(n, x), y = std::cyl_neumann(n, x);
      EXPECT_NEAR(bessel_j(n, x), j, 1e-10 * std::max(1.0, std::abs(j))) << n << " " << x;
      EXPECT_NEAR(bessel_y(n, x), y, 1e-10 * std::max(1.0, std::abs(y))) << n << " " << x;
      if (x <= 700) {
        const double i = std::cyl_bessel_i(n, x), k = std::cyl_bessel_k(n, x);
        EXPECT_LE(rel(bessel_i(n, x), i), 1e-10) << n << " " << x;
        EXPECT_LE(rel(bessel_k(n, x), k), 1e-10) << n << " " << x;
      }
    }
  }
}

TEST(Bessel, SeamsAgree) {
  // both sides of each series/asymptotic crossover
  for (double x : {2.0, 17.0, 20.0}) {
    for (int n = 0; n <= 1; ++n) {
      const double lo = std::nextafter(x, 0.0), hi = std::nextafter(x, 100.0);
      EXPECT_NEAR(bessel_j(n, lo), bessel_j(n, hi), 1e-10);
      EXPECT_NEAR(bessel_y(n, lo), bessel_y(n, hi), 1e-10);
      EXPECT_LE(rel(bessel_i(n, lo), bessel_i(n, hi)), 1e-10);
      EXPECT_LE(rel(bessel_k(n, lo), bessel_k(n, hi)), 1e-10);
    }
  }
}

TEST(Bessel, Wronskian) {
  for (double x : {0.5, 1.0, 5.0}) EXPECT_LT(checks::bessel_wronskian(x), 1e-12) << x;
}

TEST(Bessel, Interconnections) {
  EXPECT_LE(bessel_interconnect_check(1.0), 1e-9);
  EXPECT_LE(bessel_interconnect_check(10.0), 1e-8);
  EXPECT_LE(bessel_interconnect_check(0.1), 1e-9);
  EXPECT_THROW(bessel_interconnect_check(0.0), domain_error);
}

TEST(Bessel, Domain) {
  EXPECT_THROW(bessel_j(2, 1.0), domain_error);
  EXPECT_THROW(bessel_k(1, -1.0), domain_error);
  EXPECT_THROW(bessel_y(0, 0.0), domain_error);
}

TEST(Meijer, BesselReductions) {
  EXPECT_LT(rel(meijer_g({2, 1, {1, 0}, 1.0}).value, oracle::J1_2), 1e-12);
  EXPECT_LT(rel(meijer_g({2, 2, {1, 0}, 1.0}).value, oracle::two_K1_2), 1e-12);
  EXPECT_LT(rel(meijer_g({1, 1, {0}, 1.0}).value, std::exp(-1.0)), 1e-12);
}

TEST(Meijer, FrozenHigherOrder) {
  EXPECT_LT(rel(meijer_g({4, 2, {1, 0, 1, 1}, 2.0}).value, oracle::G_0_4_2_0_z2), 1e-10);
  EXPECT_LT(rel(meijer_g({4, 2, {1, 0, 1, 1}, 50.0}).value, oracle::G_0_4_2_0_z50), 1e-10);
  EXPECT_LT(rel(meijer_g({4, 3, {1, 1, 0, 1}, 7.0}).value, oracle::G_0_4_3_0_z7), 1e-10);
  EXPECT_LT(rel(voronoi_steen(3.0, {1, 1, 0}).value, oracle::V_110_x3), 1e-10);
  EXPECT_LT(rel(voronoi_steen(0.5, {1, 1, 0}).value, oracle::V_110_x05), 1e-10);
}

TEST(Meijer, HonestErrorBars) {
  for (int i = 0; i < 20; ++i) {
    const double z = std::pow(10.0, -2.0 + 4.0 * i / 19.0), s = std::sqrt(z);
    const auto j = meijer_g({2, 1, {1, 0}, z});
    const auto k = meijer_g({2, 2, {1, 0}, z});
    const auto e = meijer_g({1, 1, {0}, z});
    // reference values carry their own ~1e-13 relative error
    EXPECT_LE(std::abs(j.value - s * std::cyl_bessel_j(1, 2 * s)), j.error + 1e-13 * std::abs(j.value)) << z;
    EXPECT_LE(std::abs(k.value - 2 * s * std::cyl_bessel_k(1, 2 * s)), k.error + 1e-13 * k.value) << z;
    EXPECT_LE(std::abs(e.value - std::exp(-z)), e.error + 1e-13 * e.value) << z;
  }
}

TEST(Meijer, ContourShiftInvariance) {
  const GSpec g{4, 2, {1, 0, 1, 1}, 3.0};
  QuadratureControls a, b;
  a.mu = -0.3;
  b.mu = -0.8;
  const auto ra = meijer_g(g, a), rb = meijer_g(g, b);
  EXPECT_LE(std::abs(ra.value - rb.value), ra.error + rb.error);
  const GSpec v{3, 3, {1, 1, 0}, 2.0};
  a.mu = -0.2;
  b.mu = -1.7;
  EXPECT_LE(std::abs(meijer_g(v, a).value - meijer_g(v, b).value), meijer_g(v, a).error + meijer_g(v, b).error);
}

TEST(Meijer, SmallValues) {
  // exp(-100) needs the abscissa near the saddle to keep relative accuracy
  const auto r = meijer_g({1, 1, {0}, 100.0});
  EXPECT_LT(rel(r.value, std::exp(-100.0)), 1e-10);
  EXPECT_TRUE(r.converged);
}

TEST(Meijer, VoronoiSteen) {
  EXPECT_LT(rel(voronoi_steen(1.0, {0}).value, std::exp(-1.0)), 1e-12);
  EXPECT_LT(rel(voronoi_steen(2.0, {1.5}).value, std::pow(2.0, 1.5) * std::exp(-2.0)), 1e-12);
  EXPECT_LT(rel(voronoi_steen(4.0, {1, 0}).value, 2.0 * 2.0 * std::cyl_bessel_k(1, 4.0)), 1e-12);
  EXPECT_LT(rel(voronoi_steen(2.5, {1, 1, 0}).value, voronoi_steen(2.5, {0, 1, 1}).value), 1e-12);
  double prev = voronoi_steen(2.0, {1, 1, 0}).value;
  for (double x = 2.5; x <= 30; x += 0.5) {
    const double v = voronoi_steen(x, {1, 1, 0}).value;
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, prev) << x;
    prev = v;
  }
}

TEST(Meijer, Rejections) {
  EXPECT_THROW(meijer_g({3, 1, {1, 0, 0}, 1.0}), domain_error);  // delta < 0
  EXPECT_THROW(meijer_g({2, 3, {1, 0}, 1.0}), domain_error);
  EXPECT_THROW(meijer_g({2, 1, {1}, 1.0}), domain_error);
  EXPECT_THROW(meijer_g({2, 1, {1, 0}, -1.0}), domain_error);
  QuadratureControls c;
  c.mu = 1.5;  // right of the pole at s = 1
  EXPECT_THROW(meijer_g({2, 1, {1, 0}, 1.0}, c), domain_error);
}
