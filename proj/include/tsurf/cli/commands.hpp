#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tsurf::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;

struct AnalyzeOptions {
  std::string alpha, beta;  // curve JSON paths, or fixture:<name>
  std::string grid = "64x64";
  double tol = 1e-6;  // regularity floor on sin(phi)
  double h = 1e-4;    // Codazzi difference step
  double tol_k = 1e-8, tol_c = 1e-7;
  std::string out;  // JSON report; stdout when empty
  std::string csv;  // grid CSV; defaults to the report path with .csv
  std::string format = "json";  // what goes to stdout without --out
};

struct VerifyOptions {
  std::string which;  // general | planar
  std::string out;    // directory for ledger_<case>.csv and summary_<case>.json
  bool strict = false;
};

struct RealizeOptions {
  std::string phi, A, B;
  double K = 0.0;
  std::optional<int> eps1, eps2;
  std::string grid = "64x64";
  std::vector<double> domain = {-1.0, 1.0, -1.0, 1.0};  // u0 u1 v0 v1
  std::string out;
};

struct FixturesOptions {
  std::vector<std::string> names;
  std::string out;  // directory; stdout when empty
  bool list = false;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify_proof(const VerifyOptions& o, std::ostream& out, std::ostream& err);
int cmd_realize(const RealizeOptions& o, std::ostream& out, std::ostream& err);
int cmd_fixtures(const FixturesOptions& o, std::ostream& out, std::ostream& err);

}  // namespace tsurf::cli
