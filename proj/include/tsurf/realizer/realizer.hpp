#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsurf/exprlang/expr.hpp"
#include "tsurf/geomcore/surface.hpp"

namespace tsurf::real {

using geom::Curve;
using geom::FormField;
using geom::Rect;
using geom::SurfacePatch;
using geom::Vec3;

// A(u) = sqrt(L^2 + phi_u^2) sampled on every v-slice, and B(v) likewise on
// every u-slice. The spreads are max - min across the slices.
struct ConservationReport {
  std::vector<double> u, A, A_spread;
  std::vector<double> v, B, B_spread;
  double max_spread_A = 0.0, max_spread_B = 0.0;
  int skipped = 0;  // grid points below the regularity floor
};

ConservationReport conservation_AB(const FormField& forms, const Rect& domain, int nu, int nv);
ConservationReport conservation_AB(const SurfacePatch& s, int nu, int nv);

struct RealizabilityInput {
  expr::Expr phi;  // in u, v
  expr::Expr A;    // in u
  expr::Expr B;    // in v
  double K = 0.0;
  int eps1 = 1, eps2 = 1;  // signs of L and N; eps1 * eps2 = sign(K)
  Rect domain;
};

struct RealizabilityReport {
  bool applicable = true;
  std::string message;
  int points = 0;
  double metric = 0.0;     // |(A^2 - phi_u^2)(B^2 - phi_v^2) - K^2 sin^4 phi|
  double gauss = 0.0;      // |L N / sin^2 phi - K|
  double egregium = 0.0;   // |-phi_uv / sin phi - K|
  double codazzi_1 = 0.0;  // |L_v - N phi_u / sin phi|
  double codazzi_2 = 0.0;  // |N_u - L phi_v / sin phi|
};

class StrictnessError : public InputError {
 public:
  StrictnessError(const std::string& which, double u, double v);
  double u() const { return u_; }
  double v() const { return v_; }

 private:
  double u_, v_;
};

// Builds L = eps1 sqrt(A^2 - phi_u^2), M = 0, N = eps2 sqrt(B^2 - phi_v^2) and
// reports the maximum residuals over the cell centres of an nu x nv grid.
// K = 0 is the cylindrical case and is reported as not applicable.
RealizabilityReport realizability_check(const RealizabilityInput& in, int nu, int nv);

// Pointwise |(A^2 - phi_u^2)(B^2 - phi_v^2) - K^2 sin^4 phi|.
double metric_residual(double A, double B, double phi_u, double phi_v, double sin_phi, double K);

enum class ProbeClass { plane, line, violation };
std::string probe_class_name(ProbeClass c);

struct CircleProbeReport {
  ProbeClass cls = ProbeClass::violation;
  double r = 0.0;
  int samples = 0;
  double max_b3 = 0.0;        // max |beta_3'|
  double max_bracket_2 = 0.0;  // max |beta_3'(beta_2' beta_3'' - beta_2'' beta_3')|
  double max_bracket_1 = 0.0;  // max |beta_3'(beta_1' beta_3'' - beta_1'' beta_3')|
};

// Pairs beta with a circle of radius r in the xy-plane. "plane" when beta_3'
// vanishes along beta, "line" when both brackets vanish, otherwise the
// surface cannot have constant K. Samples are equally spaced over beta's
// domain, endpoints included.
CircleProbeReport circle_case_probe(const Curve& beta, double r, int samples = 256, double tol = 1e-8);

struct CylindricityReport {
  bool is_cylindrical = false;
  std::optional<Vec3> ruling;
  double max_deviation = 0.0;  // smallest tangent spread of the two generators, radians
  std::string generator;       // "alpha" or "beta" when cylindrical
};

// A generator with constant tangent (max angle to the mean tangent below
// tolC) rules the surface.
CylindricityReport cylindricity(const SurfacePatch& s, double tolC = 1e-7, int samples = 256);

struct SurfaceClassification {
  int points = 0, skipped = 0;
  double k_mean = 0.0, k_var = 0.0, k_min = 0.0, k_max = 0.0;
  double route_gap = 0.0;  // max |K from forms - K from the angle|
  CylindricityReport cylinder;
  bool constant_k = false;  // k_var < tolK
  // constant_k implies |k_mean| < tolK and a cylindrical surface.
  bool consistent = true;
};

// K statistics use the forms route. constant K is a heuristic: variance
// below tolK on the grid.
SurfaceClassification classify_surface(const SurfacePatch& s, int nu, int nv, double tolK = 1e-8, double tolC = 1e-7);

}  // namespace tsurf::real
