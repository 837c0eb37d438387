#include "tsurf/geomcore/surface.hpp"

#include <cmath>
#include <sstream>


#include "tsurf/exprlang/jet.hpp"

namespace tsurf::geom {

using expr::Jet;

double curvature(const Curve& c, double s) {
  if (!c.arclength()) throw Error("curvature needs an arclength curve");
  return c.jet(s)[2].norm();
}

FrenetData frenet(const Curve& c, double s, double k_floor) {
  if (!c.arclength()) throw Error("frenet needs an arclength curve");
  const CurveJet j = c.jet(s);
  FrenetData f;
  f.k = j[2].norm();
  if (f.k < k_floor) {
    std::ostringstream os;
    os << "zero curvature at s = " << s << " (k = " << f.k << ")";
    throw ZeroCurvatureError(os.str());
  }
  f.t = j[1].normalized();
  f.n = (j[2] - j[2].dot(f.t) * f.t).normalized();
  f.b = f.t.cross(f.n);
  f.tau = j[1].dot(j[2].cross(j[3])) / j[1].cross(j[2]).squaredNorm();
  return f;
}

SurfacePatch SurfacePatch::make(const Curve& alpha, const Curve& beta) {
  SurfacePatch p{arclength_reparam(alpha), arclength_reparam(beta), {}};
  p.domain = {p.alpha.t0(), p.alpha.t1(), p.beta.t0(), p.beta.t1()};
  return p;
}

RegularityError::RegularityError(double u, double v, double sin_phi)
    : Error([&] {
        std::ostringstream os;
        os << "regularity violated at (u, v) = (" << u << ", " << v << "): sin(phi) = " << sin_phi;
        return os.str();
      }()),
      u_(u),
      v_(v) {}

FormCoefficients form_coefficients(const SurfacePatch& s, double u, double v, double sin_floor) {
  const CurveJet a = s.alpha.jet(u);
  const CurveJet b = s.beta.jet(v);
  std::array<Jet, 3> ta, tb, a2, b2;
  for (int k = 0; k < 3; ++k) {
    ta[k] = Jet::series({a[1][k], a[2][k], a[3][k], 0.0}, 0, 2);
    tb[k] = Jet::series({b[1][k], b[2][k], b[3][k], 0.0}, 1, 2);
    a2[k] = Jet::series({a[2][k], a[3][k], 0.0, 0.0}, 0, 1);
    b2[k] = Jet::series({b[2][k], b[3][k], 0.0, 0.0}, 1, 1);
  }
  const Jet cos_phi = ta[0] * tb[0] + ta[1] * tb[1] + ta[2] * tb[2];
  const std::array<Jet, 3> cross = {ta[1] * tb[2] - ta[2] * tb[1], ta[2] * tb[0] - ta[0] * tb[2],
                                    ta[0] * tb[1] - ta[1] * tb[0]};
  const Jet sin2 = cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2];
  if (std::sqrt(sin2.value()) < sin_floor) throw RegularityError(u, v, std::sqrt(sin2.value()));
  const Jet sin_phi = expr::sqrt(sin2);
  const Jet phi = expr::atan2(sin_phi, cos_phi);
  const Jet inv_sin = expr::recip(sin_phi);
  Jet L = Jet::constant(0.0, 1), N = Jet::constant(0.0, 1);
  for (int k = 0; k < 3; ++k) {
    const Jet nk = cross[k] * inv_sin;
    L += a2[k] * nk;
    N += b2[k] * nk;
  }

  FormCoefficients fc;
  fc.F = cos_phi.value();
  fc.L = L.value();
  fc.N = N.value();
  fc.phi = phi.value();
  fc.sin_phi = sin_phi.value();
  fc.phi_u = phi.du();
  fc.phi_v = phi.dv();
  fc.phi_uu = phi.duu();
  fc.phi_uv = phi.duv();
  fc.phi_vv = phi.dvv();
  fc.L_u = L.du();
  fc.N_v = N.dv();
  for (int k = 0; k < 3; ++k) fc.normal[k] = cross[k].value() / fc.sin_phi;
  return fc;
}

double gauss_curvature_forms(const FormCoefficients& fc) { return fc.L * fc.N / (fc.sin_phi * fc.sin_phi); }

double gauss_curvature_angle(const FormCoefficients& fc) { return -fc.phi_uv / fc.sin_phi; }

double egregium_residual(const FormCoefficients& fc) {
  return std::abs(fc.phi_uv + gauss_curvature_forms(fc) * fc.sin_phi);
}

Christoffel christoffel(const FormCoefficients& fc) {
  const double cot = std::cos(fc.phi) / fc.sin_phi;
  Christoffel g;
  g.g111 = cot * fc.phi_u;
  g.g211 = -fc.phi_u / fc.sin_phi;
  g.g122 = -fc.phi_v / fc.sin_phi;
  g.g222 = cot * fc.phi_v;
  return g;
}

std::pair<double, double> codazzi_residual(const FormField& forms, double u, double v, double h) {
  const FormCoefficients c = forms(u, v);
  const double L_v = (forms(u, v + h).L - forms(u, v - h).L) / (2 * h);
  const double N_u = (forms(u + h, v).N - forms(u - h, v).N) / (2 * h);
  return {std::abs(L_v - c.N * c.phi_u / c.sin_phi), std::abs(N_u - c.L * c.phi_v / c.sin_phi)};
}

std::pair<double, double> codazzi_residual(const SurfacePatch& s, double u, double v, double h) {
  return codazzi_residual([&s](double uu, double vv) { return form_coefficients(s, uu, vv); }, u, v, h);
}

namespace {

double torsion_from(double L, double L_u, double phi, double phi_u, double phi_uu, double tol) {
  const double d = L * L + phi_u * phi_u;
  if (d < tol) throw ZeroCurvatureError("L^2 + phi_u^2 vanishes; torsion undefined");
  return (L * phi_uu - L * std::cos(phi) / std::sin(phi) * d - L_u * phi_u) / d;
}

}  // namespace

double parametric_torsion(const FormCoefficients& fc, double tol) {
  return torsion_from(fc.L, fc.L_u, fc.phi, fc.phi_u, fc.phi_uu, tol);
}

double parametric_torsion_surface(const FormCoefficients& fc, double A, double A1, double tol) {
  if (std::abs(fc.L) < tol) throw ZeroCurvatureError("L vanishes; cannot recover L_u from A");
  const double L_u = (A * A1 - fc.phi_u * fc.phi_uu) / fc.L;
  return torsion_from(fc.L, L_u, fc.phi, fc.phi_u, fc.phi_uu, tol);
}

double parametric_torsion_v(const FormCoefficients& fc, double tol) {
  return torsion_from(fc.N, fc.N_v, fc.phi, fc.phi_v, fc.phi_vv, tol);
}

double torsion_rule_residual(const FormCoefficients& fc, double tau, double A, double A1) {
  const double cot = std::cos(fc.phi) / fc.sin_phi;
  return fc.phi_uu - (tau * fc.L + cot * fc.L * fc.L + A1 / A * fc.phi_u);
}

std::vector<double> cell_centres(double a, double b, int n) {
  if (n < 1) throw InputError("grid dimension must be positive");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + (i + 0.5) * (b - a) / n;
  return out;
}

std::vector<GridPoint> sweep(const SurfacePatch& s, int nu, int nv, double sin_floor) {
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv));
  const auto us = cell_centres(s.domain.u0, s.domain.u1, nu);
  const auto vs = cell_centres(s.domain.v0, s.domain.v1, nv);
  for (double u : us) {
    for (double v : vs) {
      GridPoint p{u, v, false, {}};
      try {
        p.fc = form_coefficients(s, u, v, sin_floor);
        p.regular = true;
      } catch (const RegularityError&) {
      }
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace tsurf::geom
