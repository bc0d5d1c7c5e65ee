#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "piltz/harness.hpp"

namespace {

void add_quadrature(CLI::App* app, piltz::RunConfig& c) {
  app->add_option("--g-mu", c.gMu, "Mellin-Barnes contour abscissa (default: automatic)");
  app->add_option("--half-height", c.halfHeight, "initial truncation height T");
  app->add_option("--step", c.step, "initial trapezoid step h");
  app->add_option("--refinements", c.maxRefinements, "maximum number of step halvings");
}

}  // namespace

int main(int argc, char** argv) {
  piltz::RunConfig c;
  CLI::App app{"Piltz divisor sums over Q and quadratic fields, with Voronoi-type identity checks"};
  app.require_subcommand(1);

  std::string format;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", c.outputPath, "write the report here instead of stdout");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--deterministic", c.deterministic, "zero the wall-clock field for byte-identical reports");
  };

  auto* coeffs = app.add_subcommand("coeffs", "emit v_K^m(n) for n <= N as CSV");
  coeffs->add_option("--field", c.field, "q | quad:<D> | generic:d,r1,r2,disc");
  coeffs->add_option("--m", c.m, "power m");
  coeffs->add_option("--N", c.N, "table limit")->required();
  common(coeffs);

  auto* mainterm = app.add_subcommand("mainterm", "residue at s = 1 of zeta_K(s)^m x^s / s");
  mainterm->add_option("--field", c.field);
  mainterm->add_option("--m", c.m);
  mainterm->add_option("--x", c.x, "rational num/den")->required();
  common(mainterm);

  auto* identity = app.add_subcommand("identity", "truncated special-function series against the exact sum");
  identity->add_option("--case", c.identityCase, "q-m2 | q-m | real-quad | imag-quad | meijer | steen")->required();
  identity->add_option("--field", c.field);
  identity->add_option("--m", c.m);
  identity->add_option("--x", c.x, "rational num/den")->required();
  identity->add_option("--terms", c.N, "number of series terms N")->required();
  identity->add_option("--coeffs", c.coefficientsPath, "coefficient CSV to use instead of sieving");
  identity->add_option("--convergence", c.convergencePath, "path of the convergence CSV");
  identity->add_option("--tol", c.tolerance, "fail (exit 1) if the accelerated discrepancy exceeds this");
  add_quadrature(identity, c);
  common(identity);

  auto* riesz = app.add_subcommand("riesz", "Riesz-smoothed identity: direct sum vs residues + vertical integral");
  riesz->add_option("--field", c.field);
  riesz->add_option("--m", c.m);
  riesz->add_option("--rho", c.rho, "Riesz order")->required();
  riesz->add_option("--mu", c.mu, "abscissa of the vertical line, in (-1, 0)");
  riesz->add_option("--x", c.x, "rational num/den")->required();
  riesz->add_option("--tol", c.tolerance, "relative tolerance (default 1e-6)");
  riesz->add_option("--half-height", c.halfHeight, "height where the path leaves Re w = mu");
  common(riesz);

  auto* gfun = app.add_subcommand("gfun", "Meijer G^{k,0}_{0,q}(b | z) by Mellin-Barnes quadrature");
  gfun->add_option("--q", c.q)->required();
  gfun->add_option("--k", c.k)->required();
  gfun->add_option("--b", c.b, "comma-separated b_1..b_q")->required()->delimiter(',');
  gfun->add_option("--z", c.z)->required();
  gfun->add_option("--tol", c.tolerance, "fail (exit 1) if the relative error bar exceeds this");
  add_quadrature(gfun, c);
  common(gfun);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest->add_option("--only", c.only, "restrict to one group");
  selftest->add_option("--out", c.outputPath);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "piltz: " << e.what() << '\n';
    return 2;
  }

  if (app.got_subcommand(coeffs)) c.command = piltz::Command::Coeffs;
  else if (app.got_subcommand(mainterm)) c.command = piltz::Command::MainTerm;
  else if (app.got_subcommand(identity)) c.command = piltz::Command::Identity;
  else if (app.got_subcommand(riesz)) c.command = piltz::Command::Riesz;
  else if (app.got_subcommand(gfun)) c.command = piltz::Command::GFun;
  else c.command = piltz::Command::SelfTest;
  if (format == "json") c.format = piltz::Format::Json;
  if (format == "csv") c.format = piltz::Format::Csv;

  return piltz::run(c, std::cout, std::cerr);
}
