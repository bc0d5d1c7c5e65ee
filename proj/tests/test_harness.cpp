#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "piltz/harness.hpp"

using namespace piltz;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_config(const RunConfig& c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(FieldSpec, Parse) {
  EXPECT_EQ(parse_field_spec("q"), rationals());
  const auto qi = parse_field_spec("quad:-4");
  EXPECT_EQ(qi.degree, 2);
  EXPECT_EQ(qi.r2, 1);
  EXPECT_EQ(qi.abs_disc, 4);
  EXPECT_NO_THROW(parse_field_spec("quad:-3"));
  EXPECT_NO_THROW(parse_field_spec("quad:8"));
  EXPECT_NO_THROW(parse_field_spec("quad:12"));
  EXPECT_THROW(parse_field_spec("quad:9"), domain_error);
  EXPECT_THROW(parse_field_spec("quad:"), domain_error);
  EXPECT_THROW(parse_field_spec("quad:5x"), domain_error);
  EXPECT_EQ(parse_field_spec("generic:3,1,1,-23").degree, 3);
  EXPECT_THROW(parse_field_spec("generic:3,2,1,-23"), domain_error);
  EXPECT_THROW(parse_field_spec("generic:3,1,1"), domain_error);
  EXPECT_THROW(parse_field_spec("Q"), domain_error);
}

TEST(Run, IdentityReport) {
  RunConfig c;
  c.command = Command::Identity;
  c.identityCase = "q-m2";
  c.x = "21/2";
  c.N = 2000;
  c.deterministic = true;
  c.convergencePath = "harness_conv.csv";
  const auto r = run_config(c);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"oracle\": 27,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"schema\": 1,"), std::string::npos);
  const auto conv = slurp("harness_conv.csv");
  EXPECT_EQ(conv.rfind("N,series_partial,discrepancy\n", 0), 0u);
  std::remove("harness_conv.csv");
}

TEST(Run, ReportKeysInOrder) {
  RunConfig c;
  c.command = Command::Identity;
  c.identityCase = "imag-quad";
  c.field = "quad:-4";
  c.x = "9/2";
  c.N = 50;
  c.deterministic = true;
  c.convergencePath = "harness_conv2.csv";
  const auto out = run_config(c).out;
  std::size_t pos = 0;
  for (const char* k : {"schema", "case", "field", "m", "x", "N", "oracle", "mainTerm", "constantTerm", "series",
                        "accelerated", "discrepancy", "discrepancyAccelerated", "wallTimeMs"}) {
    const auto at = out.find(std::string("\"") + k + "\":", pos);
    ASSERT_NE(at, std::string::npos) << k;
    pos = at;
  }
  std::remove("harness_conv2.csv");
}

TEST(Run, Deterministic) {
  RunConfig c;
  c.command = Command::Riesz;
  c.field = "quad:-4";
  c.m = 1;
  c.rho = 3;
  c.x = "21/2";
  c.deterministic = true;
  const auto a = run_config(c), b = run_config(c);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Run, RieszPasses) {
  RunConfig c;
  c.command = Command::Riesz;
  c.field = "q";
  c.m = 1;
  c.rho = 2;
  c.mu = -0.5;
  c.x = "21/2";
  const auto r = run_config(c);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"passed\": true"), std::string::npos);
}

TEST(Run, GFun) {
  RunConfig c;
  c.command = Command::GFun;
  c.q = 2;
  c.k = 2;
  c.b = {1, 0};
  c.z = 1;
  c.format = Format::Csv;
  const auto r = run_config(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(",0.2797317636330"), std::string::npos) << r.out;
}

TEST(Run, UsageErrors) {
  RunConfig c;
  c.command = Command::Riesz;
  c.field = "q";
  c.m = 2;
  c.rho = 2;
  c.x = "21/2";
  auto r = run_config(c);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  c.rho = 4;
  c.x = "abc";
  EXPECT_EQ(run_config(c).code, 2);
  c.x = "21/2";
  c.field = "quad:9";
  EXPECT_EQ(run_config(c).code, 2);

  RunConfig g;
  g.command = Command::GFun;
  g.q = 3;
  g.k = 1;
  g.b = {1, 0, 0};
  g.z = 1;
  EXPECT_EQ(run_config(g).code, 2);

  RunConfig i;
  i.command = Command::Identity;
  i.identityCase = "real-quad";
  i.field = "quad:-4";
  i.x = "9/2";
  i.N = 10;
  EXPECT_EQ(run_config(i).code, 2);
  i.identityCase = "nope";
  EXPECT_EQ(run_config(i).code, 2);

  RunConfig s;
  s.command = Command::SelfTest;
  s.only = "nothing";
  EXPECT_EQ(run_config(s).code, 2);
}

TEST(Run, ToleranceFailure) {
  RunConfig c;
  c.command = Command::Identity;
  c.identityCase = "q-m2";
  c.x = "21/2";
  c.N = 10;
  c.tolerance = 1e-12;
  c.convergencePath = "harness_conv3.csv";
  EXPECT_EQ(run_config(c).code, 1);
  std::remove("harness_conv3.csv");
}

TEST(Run, CoefficientsRoundTrip) {
  RunConfig c;
  c.command = Command::Coeffs;
  c.field = "quad:-4";
  c.m = 2;
  c.N = 300;
  c.outputPath = "harness_coeffs.csv";
  ASSERT_EQ(run_config(c).code, 0);
  const auto t = ingest_coefficients("harness_coeffs.csv", quadratic_field(-4), 2);
  EXPECT_EQ(t.raw(), coeff_power(quadratic_field(-4), 2, 300).raw());

  RunConfig i;
  i.command = Command::Identity;
  i.identityCase = "imag-quad";
  i.field = "quad:-4";
  i.m = 2;
  i.x = "9/2";
  i.N = 10;
  i.coefficientsPath = "harness_coeffs.csv";
  EXPECT_EQ(run_config(i).code, 2);  // imag-quad is an m = 1 case
  std::remove("harness_coeffs.csv");
}

TEST(SelfTest, Groups) {
  for (const auto& g : selftest_groups()) {
    const auto rows = run_selftest(g, std::nullopt);
    ASSERT_FALSE(rows.empty()) << g;
    for (const auto& r : rows) {
      EXPECT_EQ(r.group, g);
      EXPECT_TRUE(r.pass) << r.name << " " << r.residual;
    }
  }
  const auto forced = run_selftest("gamma", 1e-20);
  EXPECT_TRUE(std::any_of(forced.begin(), forced.end(), [](const SelfTestRow& r) { return !r.pass; }));
}
