#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "piltz/identities.hpp"

using namespace piltz;

TEST(Terms, RationalsM2) {
  const double a = 4 * pi;
  EXPECT_NEAR(series_term_rationals_m2(1, 1.0), -(std::cyl_neumann(1, a) + (2 / pi) * std::cyl_bessel_k(1, a)), 1e-13);
  // only n x enters the Bessel part
  for (std::int64_t n : {2, 6, 12, 30})
    for (double x : {0.7, 3.25, 11.0})
      EXPECT_NEAR(series_term_rationals_m2(n, x),
                  series_term_rationals_m2(1, n * x) * static_cast<double>(coefficient_at(rationals(), 2, n)) / n,
                  1e-13);
  // the K-part is exponentially small once n x >= 4
  const double k_part = (2 / pi) * bessel_k(1, 4 * pi * 2.0) * 2.0;
  EXPECT_LT(k_part, 1e-10);
}

TEST(Terms, Quadratic) {
  const auto qi = make_case(IdentityVariant::ImagQuadratic, quadratic_field(-4), 1);
  EXPECT_NEAR(series_term_quadratic(qi, 1, 1.0), std::cyl_bessel_j(1, 2 * pi), 1e-14);
  const auto s5 = make_case(IdentityVariant::RealQuadratic, quadratic_field(5), 1);
  EXPECT_EQ(series_term_quadratic(s5, 2, 3.7), 0.0);
  EXPECT_THROW(series_term_quadratic(make_case(IdentityVariant::RationalsM2, rationals(), 2), 1, 1.0), domain_error);
}

TEST(Terms, CoefficientLookup) {
  const auto t = coeff_power(quadratic_field(-4), 3, 2000);
  for (std::int64_t n = 1; n <= 2000; ++n) ASSERT_EQ(coefficient_at(quadratic_field(-4), 3, n), t[n]) << n;
  const auto r = coeff_power(quadratic_field(5), 2, 500);
  for (std::int64_t n = 1; n <= 500; ++n) ASSERT_EQ(coefficient_at(quadratic_field(5), 2, n), r[n]) << n;
}

TEST(Terms, MeijerMatchesBesselRoute) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> N(1, 2000);
  std::uniform_real_distribution<double> X(0.3, 60.0);
  const auto qi = make_case(IdentityVariant::ImagQuadratic, quadratic_field(-4), 1);
  for (int i = 0; i < 20; ++i) {
    const std::int64_t n = N(rng);
    const double x = X(rng);
    const double a = series_term_quadratic(qi, n, x);
    const auto g = series_term_meijer(quadratic_field(-4), 1, n, x);
    const double envelope = coefficient_at(quadratic_field(-4), 1, n) * std::pow(n * x, 0.25) / n;
    EXPECT_NEAR(g.value, a, 1e-9 * std::max(envelope, 1e-300)) << n << " " << x;
  }
  EXPECT_THROW(series_term_meijer(quadratic_field(5), 1, 1, 1.0), domain_error);
}

TEST(Terms, MeijerSquare) {
  const auto g = series_term_meijer(quadratic_field(-4), 2, 5, 2.5);
  EXPECT_TRUE(std::isfinite(g.value));
  EXPECT_GT(g.error, 0.0);
  EXPECT_LT(g.error, 1e-10 * std::max(1.0, std::abs(g.value)));
}

TEST(Cases, Validation) {
  EXPECT_THROW(make_case(IdentityVariant::RationalsM2, rationals(), 3), domain_error);
  EXPECT_THROW(make_case(IdentityVariant::RealQuadratic, quadratic_field(-4), 1), domain_error);
  EXPECT_THROW(make_case(IdentityVariant::ImagQuadratic, quadratic_field(5), 1), domain_error);
  EXPECT_THROW(make_case(IdentityVariant::PurelyImaginaryMeijer, quadratic_field(5), 1), domain_error);
  EXPECT_THROW(make_case(IdentityVariant::TotallyRealSteen, quadratic_field(-4), 1), domain_error);
  EXPECT_NO_THROW(make_case(IdentityVariant::TotallyRealSteen, quadratic_field(5), 2));
  EXPECT_NO_THROW(make_case(IdentityVariant::PurelyImaginaryMeijer, generic_field(4, 0, 2, 125), 1));
}

TEST(Identity, ClassicalDivisorProblem) {
  const auto c = make_case(IdentityVariant::RationalsM2, rationals(), 2);
  const auto r = evaluate_identity(c, Rational(21, 2), 2000);
  EXPECT_EQ(r.oracle, 27.0);
  EXPECT_EQ(r.constantTerm, 0.25);
  EXPECT_LE(r.discrepancyAccelerated, 5e-3);
  EXPECT_NEAR(r.discrepancy, std::abs(r.oracle - (r.constantTerm + r.mainTerm + r.series)), 1e-15);
  ASSERT_EQ(r.convergence.size(), 2000u);
  EXPECT_EQ(r.convergence.back().partial, r.series);
}

TEST(Identity, SmallestTruncation) {
  const auto c = make_case(IdentityVariant::ImagQuadratic, quadratic_field(-4), 1);
  const auto r = evaluate_identity(c, Rational(9, 2), 1);
  EXPECT_TRUE(std::isfinite(r.discrepancy));
  EXPECT_EQ(r.accelerated, r.series);
  EXPECT_THROW(evaluate_identity(c, Rational(9, 2), 0), domain_error);
}

TEST(Identity, SawtoothForMEqualsOne) {
  const auto c = make_case(IdentityVariant::RationalsM, rationals(), 1);
  // x - 1/2 + sum sin(2 pi n x)/(pi n) at a half-integer vanishes termwise
  EXPECT_LT(evaluate_identity(c, Rational(21, 2), 100).discrepancy, 1e-12);
  EXPECT_LT(evaluate_identity(c, Rational(31, 3), 20000).discrepancyAccelerated, 1e-3);
}

TEST(Identity, NotEvaluatedVariants) {
  const auto steen = evaluate_identity(make_case(IdentityVariant::TotallyRealSteen, quadratic_field(5), 2), Rational(21, 2), 10);
  EXPECT_FALSE(steen.seriesEvaluated);
  EXPECT_EQ(steen.seriesStatus, "not numerically evaluated");
  EXPECT_TRUE(std::isnan(steen.series));
  EXPECT_GT(steen.mainTerm, 0.0);
  const auto q3 = evaluate_identity(make_case(IdentityVariant::RationalsM, rationals(), 3), Rational(21, 2), 10);
  EXPECT_FALSE(q3.seriesEvaluated);
}

TEST(Identity, IngestedCoefficients) {
  const auto c = make_case(IdentityVariant::ImagQuadratic, quadratic_field(-4), 1);
  const auto t = coeff_power(quadratic_field(-4), 1, 500);
  IdentityInputs in;
  in.coefficients = &t;
  const auto a = evaluate_identity(c, Rational(9, 2), 500, in);
  const auto b = evaluate_identity(c, Rational(9, 2), 500);
  EXPECT_EQ(a.series, b.series);
  const auto short_table = coeff_power(quadratic_field(-4), 1, 100);
  in.coefficients = &short_table;
  EXPECT_THROW(evaluate_identity(c, Rational(9, 2), 500, in), domain_error);
}

TEST(Identity, MeijerRouteForGaussianField) {
  const auto viaG = evaluate_identity(make_case(IdentityVariant::PurelyImaginaryMeijer, quadratic_field(-4), 1), Rational(9, 2), 300);
  const auto viaJ = evaluate_identity(make_case(IdentityVariant::ImagQuadratic, quadratic_field(-4), 1), Rational(9, 2), 300);
  EXPECT_NEAR(viaG.series, viaJ.series, 1e-9);
}

TEST(Identity, MainTermDominance) {
  const auto c = make_case(IdentityVariant::RationalsM2, rationals(), 2);
  double prev_ratio = 1.0;
  for (std::int64_t e : {2, 3, 4, 5, 6}) {
    const Rational x(static_cast<std::int64_t>(std::pow(10.0, e + 0.5)) * 2 + 1, 2);
    const auto r = evaluate_identity(c, x, 1);
    const double ratio = std::abs(r.oracle - r.mainTerm - r.constantTerm) / r.mainTerm;
    EXPECT_LT(ratio, prev_ratio) << e;
    prev_ratio = ratio;
  }
  EXPECT_LT(prev_ratio, 1e-4);
}

TEST(Identity, StatisticalDecrease) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::int64_t> U(10, 49);
  const IdentityCase cases[] = {make_case(IdentityVariant::RationalsM2, rationals(), 2),
                                make_case(IdentityVariant::RealQuadratic, quadratic_field(5), 1),
                                make_case(IdentityVariant::ImagQuadratic, quadratic_field(-4), 1)};
  for (const auto& c : cases) {
    int better = 0;
    for (int i = 0; i < 20; ++i) {
      const Rational x(U(rng) * 2 + 1, 4);  // non-integer in [5, 25]
      const auto a = evaluate_identity(c, x, 250), b = evaluate_identity(c, x, 4000);
      better += b.discrepancyAccelerated < a.discrepancyAccelerated;
    }
    EXPECT_GE(better, 18) << to_string(c.variant);
  }
}

TEST(Riesz, AdmissibleOrder) {
  EXPECT_TRUE(riesz_order_admissible(rationals(), 1, 2, -0.5));
  EXPECT_FALSE(riesz_order_admissible(rationals(), 2, 2, -0.5));
  EXPECT_TRUE(riesz_order_admissible(quadratic_field(-4), 2, 4, -0.5));
  EXPECT_THROW(riesz_check(rationals(), 2, 2, -0.5, Rational(21, 2)), domain_error);
  EXPECT_THROW(riesz_check(rationals(), 1, 2, 0.5, Rational(21, 2)), domain_error);
}

TEST(Riesz, ResidueAtOne) {
  // simple pole: H x^{rho+1} / (rho+1)!
  const auto ld = laurent_at_one(rationals(), 1, 0);
  EXPECT_NEAR(residue_at_one(ld, 2, 10.5), std::pow(10.5, 3) / 6.0, 1e-10);
  // double pole for d(n): derivative of x^{rho+1+u} / ((1+u)...(rho+1+u)) enters
  const auto l2 = laurent_at_one(rationals(), 2, 0);
  const double x = 7.25;
  const double h = 1e-4;
  auto g = [&](double u) { return std::pow(x, 3 + u) / ((1 + u) * (2 + u) * (3 + u)); };
  const double expect = l2.coeff(-1).real() * g(0) + l2.coeff(-2).real() * (g(h) - g(-h)) / (2 * h);
  EXPECT_NEAR(residue_at_one(l2, 2, x), expect, 1e-6);
}

TEST(Riesz, SmoothedIdentity) {
  struct P {
    FieldDescriptor f;
    int m, rho;
    Rational x;
  };
  for (const auto& p : {P{rationals(), 1, 2, Rational(21, 2)}, P{quadratic_field(5), 1, 3, Rational(20)},
                        P{quadratic_field(-4), 1, 3, Rational(21, 2)}, P{quadratic_field(-3), 1, 3, Rational(13, 3)}}) {
    const auto r = riesz_check(p.f, p.m, p.rho, -0.5, p.x);
    EXPECT_TRUE(r.passed) << p.f.name() << " disc " << r.discrepancy << " tol " << r.tolerance;
    EXPECT_LE(r.discrepancy, r.quadratureErrorBar + 1e-9 * std::abs(r.direct));
  }
}

TEST(Riesz, SmallX) {
  const auto r = riesz_check(rationals(), 1, 2, -0.5, Rational(1, 100));
  EXPECT_EQ(r.direct, 0.0);
  EXPECT_NEAR(r.verticalIntegral, -r.residueSide, 1e-14);
}

TEST(Riesz, MuShift) {
  const auto a = smoothed_vertical_integral(quadratic_field(-4), 1, 4, -0.3, Rational(21, 2));
  const auto b = smoothed_vertical_integral(quadratic_field(-4), 1, 4, -0.8, Rational(21, 2));
  EXPECT_LE(std::abs(a.value - b.value), a.error + b.error);
}
