#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tsurf/geomcore/curve.hpp"

namespace tsurf::geom {

inline constexpr double kSinFloor = 1e-6;
inline constexpr double kCurvatureFloor = 1e-8;

struct FrenetData {
  Vec3 t, n, b;
  double k = 0.0;
  double tau = 0.0;
};

class ZeroCurvatureError : public Error {
 public:
  using Error::Error;
};

// |c''(s)| for an arclength curve.
double curvature(const Curve& c, double s);
// Frame, curvature and torsion (c', c'', c''') / |c' x c''|^2 of an arclength
// curve. Throws ZeroCurvatureError when k < k_floor.
FrenetData frenet(const Curve& c, double s, double k_floor = kCurvatureFloor);

struct Rect {
  double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;
};

// Psi(u, v) = alpha(u) + beta(v) with both curves in arclength.
struct SurfacePatch {
  Curve alpha, beta;
  Rect domain;

  // Reparametrizes either curve by arclength if needed; the domain is the
  // product of the two parameter ranges.
  static SurfacePatch make(const Curve& alpha, const Curve& beta);
  Vec3 point(double u, double v) const { return alpha.point(u) + beta.point(v); }
};

struct FormCoefficients {
  double E = 1.0, F = 0.0, G = 1.0;
  double L = 0.0, M = 0.0, N = 0.0;
  double phi = 0.0, sin_phi = 0.0;
  double phi_u = 0.0, phi_v = 0.0, phi_uu = 0.0, phi_uv = 0.0, phi_vv = 0.0;
  double L_u = 0.0, N_v = 0.0;  // from jets of the generating curves
  Vec3 normal = Vec3::Zero();   // (t_alpha x t_beta) / sin(phi)
};

class RegularityError : public Error {
 public:
  RegularityError(double u, double v, double sin_phi);
  double u() const { return u_; }
  double v() const { return v_; }

 private:
  double u_, v_;
};

// phi is the angle between t_alpha and t_beta; L = <alpha'', N>,
// N = <beta'', N>, which equal -(k_a/sin phi)<b_a, t_b> and (k_b/sin phi)<t_a, b_b>
// but stay defined where a curvature vanishes. phi partials come from jets.
FormCoefficients form_coefficients(const SurfacePatch& s, double u, double v, double sin_floor = kSinFloor);

// L N / sin^2 phi.
double gauss_curvature_forms(const FormCoefficients& fc);
// -phi_uv / sin phi.
double gauss_curvature_angle(const FormCoefficients& fc);
// |phi_uv + K sin phi| with K from the forms.
double egregium_residual(const FormCoefficients& fc);

struct Christoffel {
  double g111 = 0.0, g211 = 0.0;  // Gamma^1_11, Gamma^2_11
  double g112 = 0.0, g212 = 0.0;  // Gamma^1_12, Gamma^2_12
  double g122 = 0.0, g222 = 0.0;  // Gamma^1_22, Gamma^2_22
};
Christoffel christoffel(const FormCoefficients& fc);

using FormField = std::function<FormCoefficients(double u, double v)>;

// |L_v - N phi_u / sin phi| and |N_u - L phi_v / sin phi| with L_v and N_u by
// central differences of step h.
std::pair<double, double> codazzi_residual(const FormField& forms, double u, double v, double h = 1e-4);
std::pair<double, double> codazzi_residual(const SurfacePatch& s, double u, double v, double h = 1e-4);

// Torsion of the u-curve from surface data:
// (L phi_uu - L cot(phi) (L^2 + phi_u^2) - L_u phi_u) / (L^2 + phi_u^2).
// This overload takes L_u from the jets.
double parametric_torsion(const FormCoefficients& fc, double tol = kCurvatureFloor);
// Same, with L_u recovered from A A' = L L_u + phi_u phi_uu; needs L != 0.
double parametric_torsion_surface(const FormCoefficients& fc, double A, double A1, double tol = kCurvatureFloor);
// The v-curve counterpart with N, phi_v, phi_vv, N_v.
double parametric_torsion_v(const FormCoefficients& fc, double tol = kCurvatureFloor);
// phi_uu - (tau L + cot(phi) L^2 + (A'/A) phi_u), which vanishes where K != 0.
double torsion_rule_residual(const FormCoefficients& fc, double tau, double A, double A1);

// Cell-centred samples a + (i + 1/2)(b - a)/n, i = 0..n-1.
std::vector<double> cell_centres(double a, double b, int n);

struct GridPoint {
  double u = 0.0, v = 0.0;
  bool regular = false;
  FormCoefficients fc;
};

// Forms at every cell centre of an nu x nv grid; points below the
// regularity floor are kept with regular = false.
std::vector<GridPoint> sweep(const SurfacePatch& s, int nu, int nv, double sin_floor = kSinFloor);

}  // namespace tsurf::geom
