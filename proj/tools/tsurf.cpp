#include <iostream>

#include <CLI11.hpp>

#include "tsurf/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace tsurf::cli;
  CLI::App app{"tsurf: translation surface geometry and elimination replay"};
  app.require_subcommand(1);

  AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "curvature, residuals and cylindricity of alpha(u) + beta(v)");
  // --h is the difference step, so help is --help only here.
  analyze->set_help_flag("--help", "print this help message and exit");
  analyze->add_option("alpha", an.alpha, "curve JSON path or fixture:<name>")->required();
  analyze->add_option("beta", an.beta, "curve JSON path or fixture:<name>")->required();
  analyze->add_option("--grid", an.grid, "grid size NxM")->capture_default_str();
  analyze->add_option("--tol", an.tol, "regularity floor on sin(phi)")->capture_default_str();
  analyze->add_option("--h", an.h, "Codazzi difference step")->capture_default_str();
  analyze->add_option("--tol-k", an.tol_k, "variance below which K counts as constant")->capture_default_str();
  analyze->add_option("--tol-c", an.tol_c, "tangent spread (radians) below which a generator is straight")
      ->capture_default_str();
  analyze->add_option("--out", an.out, "JSON report path");
  analyze->add_option("--csv", an.csv, "grid CSV path (u,v,phi,L,N,K)");
  analyze->add_option("--format", an.format, "stdout format without --out: json|csv")->capture_default_str();

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify-proof", "replay the elimination in exact arithmetic");
  verify->add_option("case", vo.which, "general | planar")->required();
  verify->add_option("--out", vo.out, "directory for the ledger CSV and summary JSON");
  verify->add_flag("--strict", vo.strict, "treat reported errata as mismatches");

  RealizeOptions ro;
  auto* realize = app.add_subcommand("realize", "residuals of a candidate translation metric");
  realize->add_option("--phi", ro.phi, "phi(u, v)")->required();
  realize->add_option("--A", ro.A, "A(u)")->required();
  realize->add_option("--B", ro.B, "B(v)")->required();
  realize->add_option("--K", ro.K, "constant Gaussian curvature")->required();
  realize->add_option("--eps1", ro.eps1, "sign of L (default +1)");
  realize->add_option("--eps2", ro.eps2, "sign of N (default eps1 * sign K)");
  realize->add_option("--grid", ro.grid, "grid size NxM")->capture_default_str();
  realize->add_option("--domain", ro.domain, "u0 u1 v0 v1")->expected(4);
  realize->add_option("--out", ro.out, "JSON report path");

  FixturesOptions fo;
  auto* fixtures = app.add_subcommand("fixtures", "emit built-in curves as curve JSON");
  fixtures->add_option("names", fo.names, "fixture names, e.g. circle(1) helix(1,1)");
  fixtures->add_option("--out", fo.out, "output directory");
  fixtures->add_flag("--list", fo.list, "list fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (*analyze) return cmd_analyze(an, std::cout, std::cerr);
  if (*verify) return cmd_verify_proof(vo, std::cout, std::cerr);
  if (*realize) return cmd_realize(ro, std::cout, std::cerr);
  return cmd_fixtures(fo, std::cout, std::cerr);
}
