#pragma once

// Command execution behind the `piltz` CLI. Flag parsing lives in the tool;
// everything here works on a filled RunConfig and plain streams, so it can be
// driven from tests.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "piltz/checks.hpp"
#include "piltz/coefficients.hpp"
#include "piltz/field.hpp"
#include "piltz/identities.hpp"
#include "piltz/meijer.hpp"
#include "piltz/report.hpp"
#include "piltz/zeta.hpp"

namespace piltz {

/// Invalid command-line input; maps to exit code 2.
class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Command { Coeffs, MainTerm, Identity, Riesz, GFun, SelfTest };
enum class Format { Json, Csv };

struct RunConfig {
  Command command = Command::SelfTest;
  std::string field = "q";
  int m = 1;
  std::string x;
  std::int64_t N = 0;
  int rho = 0;
  double mu = -0.5;
  std::string identityCase;
  std::string coefficientsPath;
  std::string convergencePath;
  std::optional<double> tolerance;
  // gfun
  int q = 0;
  int k = 0;
  std::vector<double> b;
  double z = 0.0;
  // quadrature overrides
  std::optional<double> gMu;
  std::optional<double> halfHeight;
  std::optional<double> step;
  std::optional<int> maxRefinements;
  std::string only;
  std::string outputPath;
  std::optional<Format> format;
  bool deterministic = false;
};

inline FieldDescriptor parse_field_spec(const std::string& s) {
  auto to_int = [&](const std::string& t) -> std::int64_t {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || t.empty()) throw domain_error("malformed field spec '" + s + "'");
    return v;
  };
  if (s == "q") return rationals();
  if (s.rfind("quad:", 0) == 0) return quadratic_field(to_int(s.substr(5)));
  if (s.rfind("generic:", 0) == 0) {
    std::vector<std::int64_t> parts;
    std::stringstream ss(s.substr(8));
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(to_int(item));
    if (parts.size() != 4) throw domain_error("generic field spec needs d,r1,r2,disc: '" + s + "'");
    return generic_field(static_cast<int>(parts[0]), static_cast<int>(parts[1]), static_cast<int>(parts[2]), parts[3]);
  }
  throw domain_error("unknown field spec '" + s + "' (expected q, quad:<D> or generic:d,r1,r2,disc)");
}

inline IdentityVariant parse_case_name(const std::string& s) {
  for (auto v : {IdentityVariant::RationalsM2, IdentityVariant::RationalsM, IdentityVariant::RealQuadratic,
                 IdentityVariant::ImagQuadratic, IdentityVariant::PurelyImaginaryMeijer,
                 IdentityVariant::TotallyRealSteen})
    if (s == case_name(v)) return v;
  throw domain_error("unknown identity case '" + s + "' (q-m2, q-m, real-quad, imag-quad, meijer, steen)");
}

// ---------------------------------------------------------------------------
// self-test

struct SelfTestRow {
  std::string group;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline std::vector<std::string> selftest_groups() {
  return {"gamma", "bessel", "zeta", "lambda", "feq", "gfun", "coeffs", "riesz"};
}

/// Runs the invariant suite. `tolOverride` replaces every tolerance when set.
inline std::vector<SelfTestRow> run_selftest(const std::string& only, std::optional<double> tolOverride) {
  std::vector<SelfTestRow> rows;
  auto want = [&](const char* g) { return only.empty() || only == g; };
  auto add = [&](const char* g, std::string name, double residual, double tol) {
    const double t = tolOverride ? *tolOverride : tol;
    rows.push_back({g, std::move(name), residual, t, residual <= t});
  };
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> U(-1.0, 1.0);

  if (want("gamma")) {
    double rec = 0, ref = 0, dup = 0;
    for (int i = 0; i < 50; ++i) {
      cplx z;
      do z = cplx(20.0 * U(rng), 20.0 * U(rng)); while (std::abs(z) > 20.0 || std::abs(z.imag()) < 1e-3);
      rec = std::max(rec, checks::gamma_recurrence(z));
      ref = std::max(ref, checks::gamma_reflection(z));
      dup = std::max(dup, checks::gamma_duplication(z));
    }
    add("gamma", "recurrence", rec, 1e-10);
    add("gamma", "reflection", ref, 1e-10);
    add("gamma", "duplication", dup, 1e-10);
    add("gamma", "log_gamma(1/2)", std::abs(log_gamma(0.5).real() - 0.5 * std::log(pi)), 1e-14);
  }
  if (want("bessel")) {
    double w = 0, ic = 0;
    for (double x : {0.5, 1.0, 5.0}) w = std::max(w, checks::bessel_wronskian(x));
    for (double x : {0.1, 1.0, 10.0}) ic = std::max(ic, bessel_interconnect_check(x));
    add("bessel", "wronskian", w, 1e-12);
    add("bessel", "interconnections", ic, 1e-8);
    add("bessel", "J0 first zero", std::abs(bessel_j(0, 2.404825557695773)), 1e-9);
  }
  if (want("zeta")) {
    add("zeta", "zeta(2)", std::abs(riemann_zeta(2.0) - pi * pi / 6.0), 1e-13);
    add("zeta", "L(1, chi_-4)", std::abs(dirichlet_L(1.0, -4) - pi / 4.0), 1e-12);
    add("zeta", "hurwitz(0, a)", std::abs(hurwitz_zeta(0.0, 0.3) - 0.2), 1e-12);
    const auto ld = laurent_at_one(rationals(), 1, 0);
    add("zeta", "Laurent c0 = gamma", std::abs(ld.coeff(0).real() - euler_gamma), 1e-10);
    add("zeta", "zeta_Q(i)(0)", std::abs(zeta_at_zero(quadratic_field(-4)) + 0.25), 0.0 + 1e-15);
  }
  if (want("lambda")) {
    for (const auto& f : {rationals(), quadratic_field(-4), quadratic_field(5)}) {
      double r = 0;
      for (int i = 0; i < 20; ++i) r = std::max(r, checks::lambda_symmetry(f, cplx(0.5 + 1.5 * U(rng), 20.0 * U(rng))));
      add("lambda", "symmetry " + f.name(), r, 1e-10);
    }
  }
  if (want("feq")) {
    struct P {
      FieldDescriptor f;
      int m;
    };
    for (const auto& p : {P{rationals(), 1}, P{rationals(), 2}, P{rationals(), 3}, P{quadratic_field(-4), 1},
                          P{quadratic_field(-4), 2}, P{quadratic_field(5), 1}}) {
      double r = 0;
      for (int i = 0; i < 10; ++i)
        r = std::max(r, functional_equation_power_check(p.f, p.m, cplx(0.5 + 0.45 * U(rng), 30.0 * U(rng))));
      add("feq", p.f.name() + " m=" + std::to_string(p.m), r, 1e-10);
    }
  }
  if (want("gfun")) {
    double j = 0, k = 0, e = 0;
    for (int i = 0; i < 20; ++i) {
      const double z = std::pow(10.0, -2.0 + 4.0 * i / 19.0);
      const double s = std::sqrt(z);
      const double vj = meijer_g({2, 1, {1.0, 0.0}, z}).value, rj = s * bessel_j(1, 2.0 * s);
      const double vk = meijer_g({2, 2, {1.0, 0.0}, z}).value, rk = 2.0 * s * bessel_k(1, 2.0 * s);
      const double ve = meijer_g({1, 1, {0.0}, z}).value, re = std::exp(-z);
      j = std::max(j, std::abs(vj - rj) / std::abs(rj));
      k = std::max(k, std::abs(vk - rk) / rk);
      e = std::max(e, std::abs(ve - re) / re);
    }
    add("gfun", "G(1,0;0,2) vs J1", j, 1e-8);
    add("gfun", "G(2,0;0,2) vs K1", k, 1e-8);
    add("gfun", "G(1,0;0,1) vs exp", e, 1e-8);
    const double a = voronoi_steen(3.0, {1.0, 1.0, 0.0}).value, b = voronoi_steen(3.0, {0.0, 1.0, 1.0}).value;
    add("gfun", "Voronoi-Steen symmetry", std::abs(a - b) / std::abs(a), 1e-10);
  }
  if (want("coeffs")) {
    const auto d = coeff_power(rationals(), 2, 1000);
    add("coeffs", "sum d(n), n <= 10", std::abs(halved_partial_sum(d, Rational(21, 2)) - 27.0), 0.0 + 1e-15);
    const auto v = coeff_power(quadratic_field(-4), 1, 2000);
    add("coeffs", "multiplicativity", multiplicativity_violation(v.raw()).empty() ? 0.0 : 1.0, 0.5);
    std::stringstream ss;
    write_coefficients_csv(d, ss);
    const auto back = read_coefficients_csv(ss, rationals(), 2);
    add("coeffs", "CSV round trip", back.raw() == d.raw() ? 0.0 : 1.0, 0.5);
  }
  if (want("riesz")) {
    const auto d = coeff_power(rationals(), 2, 100);
    double eq = 0;
    for (int rho : {1, 2}) eq = std::max(eq, checks::riesz_integral_residual(d, rho, Rational(101, 4)));
    add("riesz", "integral representation", eq, 1e-12);
    for (int rho : {2, 3}) {
      const auto c = checks::riesz_difference_check(d, rho, Rational(21, 2));
      add("riesz", "finite difference rho=" + std::to_string(rho), c.second_order ? c.errors.back() : 1.0,
          1e-3);
    }
    const auto r = riesz_check(rationals(), 1, 2, -0.5, Rational(21, 2));
    add("riesz", "smoothed identity q m=1 rho=2", r.discrepancy, r.tolerance);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// run

namespace harness_detail {

inline QuadratureControls controls_from(const RunConfig& c) {
  QuadratureControls q;
  if (c.gMu) q.mu = *c.gMu;
  if (c.halfHeight) q.halfHeight = *c.halfHeight;
  if (c.step) q.step = *c.step;
  if (c.maxRefinements) q.maxRefinements = *c.maxRefinements;
  return q;
}

inline Rational require_x(const RunConfig& c) {
  if (c.x.empty()) throw usage_error("--x is required");
  Rational x;
  try {
    x = Rational::parse(c.x);
  } catch (const domain_error& e) {
    throw usage_error(e.what());
  }
  if (x.num() <= 0) throw usage_error("--x must be positive");
  return x;
}

struct Validated {
  FieldDescriptor field;
  Rational x;
  IdentityCase kase;
  GSpec g;
};

// Everything that can be rejected without computing is rejected here.
inline Validated validate(const RunConfig& c) {
  Validated v;
  auto field = [&] {
    try {
      return parse_field_spec(c.field);
    } catch (const domain_error& e) {
      throw usage_error(e.what());
    }
  };
  if (c.format && *c.format == Format::Csv && c.command == Command::SelfTest)
    throw usage_error("selftest prints a table; --format does not apply");
  switch (c.command) {
    case Command::Coeffs:
      v.field = field();
      if (c.m < 1) throw usage_error("--m must be at least 1");
      if (c.N < 1) throw usage_error("--N must be at least 1");
      if (!v.field.has_zeta()) throw usage_error("coeffs can only sieve Q and quadratic fields");
      break;
    case Command::MainTerm:
      v.field = field();
      v.x = require_x(c);
      if (c.m < 1) throw usage_error("--m must be at least 1");
      if (!v.field.has_zeta()) throw usage_error("mainterm needs Q or a quadratic field");
      break;
    case Command::Identity: {
      if (c.identityCase.empty()) throw usage_error("--case is required");
      IdentityVariant variant;
      try {
        variant = parse_case_name(c.identityCase);
      } catch (const domain_error& e) {
        throw usage_error(e.what());
      }
      v.field = field();
      int m = c.m;
      if (variant == IdentityVariant::RationalsM2) {
        if (c.field != "q") throw usage_error("case q-m2 is over Q; drop --field");
        m = 2;
      }
      try {
        v.kase = make_case(variant, v.field, m);
      } catch (const domain_error& e) {
        throw usage_error(e.what());
      }
      v.x = require_x(c);
      if (c.N < 1) throw usage_error("--terms must be at least 1");
      if (!v.field.has_zeta()) throw usage_error("identity for a generic field is only available through the library");
      if (c.tolerance && !(*c.tolerance > 0.0)) throw usage_error("--tol must be positive");
      break;
    }
    case Command::Riesz:
      v.field = field();
      v.x = require_x(c);
      if (!v.field.has_zeta()) throw usage_error("riesz needs Q or a quadratic field");
      if (c.m < 1) throw usage_error("--m must be at least 1");
      if (!(c.mu > -1.0 && c.mu < 0.0)) throw usage_error("--mu must lie in (-1, 0)");
      if (!riesz_order_admissible(v.field, c.m, c.rho, c.mu))
        throw usage_error("--rho must be at least m d (1 - mu)/2 + 1 = " +
                          format_number(c.m * v.field.degree * (1.0 - c.mu) / 2.0 + 1.0));
      if (c.tolerance && !(*c.tolerance > 0.0)) throw usage_error("--tol must be positive");
      break;
    case Command::GFun:
      v.g.q = c.q;
      v.g.k = c.k;
      v.g.b = c.b;
      v.g.z = c.z;
      if (c.q < 1 || c.k < 1 || c.k > c.q) throw usage_error("need 1 <= --k <= --q");
      if (static_cast<int>(c.b.size()) != c.q) throw usage_error("--b must list exactly q values");
      if (!(c.z > 0.0)) throw usage_error("--z must be positive");
      if (v.g.delta() < 0.0) throw usage_error("k - q/2 < 0: the Mellin-Barnes integral diverges");
      if (c.tolerance && !(*c.tolerance > 0.0)) throw usage_error("--tol must be positive");
      break;
    case Command::SelfTest: {
      if (!c.only.empty()) {
        const auto g = selftest_groups();
        if (std::find(g.begin(), g.end(), c.only) == g.end()) throw usage_error("unknown selftest group '" + c.only + "'");
      }
      break;
    }
  }
  return v;
}

inline void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.outputPath.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.outputPath, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.outputPath);
  f << text;
}

inline std::string render(const RunConfig& c, const Record& r) {
  return (c.format.value_or(Format::Json) == Format::Csv) ? r.csv() : r.json();
}

}  // namespace harness_detail

/// Executes one command. Returns 0 on success, 1 on a tolerance failure,
/// 2 on a usage error. Diagnostics go to `err`.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  using namespace harness_detail;
  Validated v;
  try {
    v = validate(c);
  } catch (const usage_error& e) {
    err << "piltz: " << e.what() << '\n';
    return 2;
  }
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    if (c.deterministic) return 0.0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };

  try {
    switch (c.command) {
      case Command::Coeffs: {
        const auto t = coeff_power(v.field, c.m, c.N);
        if (c.format.value_or(Format::Csv) == Format::Csv) {
          std::ostringstream ss;
          write_coefficients_csv(t, ss);
          emit(c, ss.str(), out);
        } else {
          std::vector<double> vals(t.raw().begin() + 1, t.raw().end());
          Record r;
          r.integer("schema", report_schema)
              .str("field", v.field.name())
              .integer("m", c.m)
              .integer("N", c.N)
              .str("provenance", to_string(t.provenance()))
              .nums("values", vals);
          emit(c, r.json(), out);
        }
        return 0;
      }
      case Command::MainTerm: {
        const auto ld = laurent_at_one(v.field, c.m, 0);
        const auto mt = main_term(ld, v.x.to_double());
        emit(c, render(c, mainterm_record(v.field, c.m, v.x.str(), mt, ld, elapsed())), out);
        return 0;
      }
      case Command::Identity: {
        IdentityInputs in;
        in.gControls = controls_from(c);
        std::optional<CoefficientTable> table;
        if (!c.coefficientsPath.empty()) {
          table.emplace(ingest_coefficients(c.coefficientsPath, v.field, v.kase.m));
          in.coefficients = &*table;
        }
        const auto rep = evaluate_identity(v.kase, v.x, c.N, in);
        emit(c, render(c, identity_record(rep, elapsed())), out);
        std::string conv = c.convergencePath;
        if (conv.empty()) conv = c.outputPath.empty() ? "convergence.csv" : c.outputPath + ".convergence.csv";
        if (rep.seriesEvaluated) {
          std::ofstream f(conv, std::ios::binary);
          if (!f) throw std::runtime_error("cannot write " + conv);
          write_convergence_csv(rep, f);
        }
        if (c.tolerance && rep.seriesEvaluated && !(rep.discrepancyAccelerated <= *c.tolerance)) {
          err << "piltz: accelerated discrepancy " << format_number(rep.discrepancyAccelerated) << " exceeds --tol "
              << format_number(*c.tolerance) << '\n';
          return 1;
        }
        return 0;
      }
      case Command::Riesz: {
        const auto rep = riesz_check(v.field, c.m, c.rho, c.mu, v.x, controls_from(c), c.tolerance.value_or(1e-6));
        emit(c, render(c, riesz_record(rep, elapsed())), out);
        if (!rep.passed) {
          err << "piltz: discrepancy " << format_number(rep.discrepancy) << " exceeds tolerance "
              << format_number(rep.tolerance) << '\n';
          return 1;
        }
        return 0;
      }
      case Command::GFun: {
        const auto r = meijer_g(v.g, controls_from(c));
        emit(c, render(c, gfun_record(v.g, r, elapsed())), out);
        if (c.tolerance && !(r.error <= *c.tolerance * std::abs(r.value))) {
          err << "piltz: relative error bar " << format_number(r.error / std::abs(r.value)) << " exceeds --tol\n";
          return 1;
        }
        return 0;
      }
      case Command::SelfTest: {
        std::optional<double> tol = c.tolerance;
        if (!tol) {
          if (const char* env = std::getenv("PILTZ_SELFTEST_TOL")) {
            char* end = nullptr;
            const double t = std::strtod(env, &end);
            if (end == env || *end != '\0' || !(t >= 0.0)) {
              err << "piltz: PILTZ_SELFTEST_TOL is not a non-negative number\n";
              return 2;
            }
            tol = t;
          }
        }
        const auto rows = run_selftest(c.only, tol);
        std::ostringstream ss;
        bool ok = true;
        char line[256];
        std::snprintf(line, sizeof line, "%-8s %-34s %-12s %-12s %s\n", "group", "check", "residual", "tolerance",
                      "result");
        ss << line;
        for (const auto& r : rows) {
          std::snprintf(line, sizeof line, "%-8s %-34s %-12.3e %-12.3e %s\n", r.group.c_str(), r.name.c_str(),
                        r.residual, r.tolerance, r.pass ? "PASS" : "FAIL");
          ss << line;
          ok = ok && r.pass;
        }
        emit(c, ss.str(), out);
        return ok ? 0 : 1;
      }
    }
  } catch (const convergence_error& e) {
    err << "piltz: " << e.what() << '\n';
    return 1;
  } catch (const domain_error& e) {
    err << "piltz: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "piltz: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace piltz
