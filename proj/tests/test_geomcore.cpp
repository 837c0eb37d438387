#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tsurf/exprlang/parser.hpp"
#include "tsurf/geomcore/curve_io.hpp"
#include "tsurf/geomcore/spline.hpp"
#include "tsurf/geomcore/surface.hpp"

using namespace tsurf;
using namespace tsurf::geom;

namespace {

Curve analytic(const char* x, const char* y, const char* z, double a, double b, bool arclength = false) {
  const std::vector<expr::Var> t = {expr::Var::t};
  return Curve::analytic(expr::parse(x, t), expr::parse(y, t), expr::parse(z, t), a, b, arclength);
}

SurfacePatch patch(const char* a, const char* b) { return SurfacePatch::make(fixture(a), fixture(b)); }

}  // namespace

TEST(Arclength, CircleByAngle) {
  const Curve c = arclength_reparam(analytic("2*cos(t)", "2*sin(t)", "0", 0.0, 3.0));
  EXPECT_NEAR(c.t1(), 6.0, 1e-12);
  for (double s : {0.0, 0.5, 2.0, 5.9}) {
    EXPECT_LT((c.point(s) - Vec3(2 * std::cos(s / 2), 2 * std::sin(s / 2), 0)).norm(), 1e-12);
    EXPECT_NEAR(c.jet(s)[1].norm(), 1.0, 1e-12);
    EXPECT_NEAR(c.jet(s)[2].norm(), 0.5, 1e-12);
  }
}

TEST(Arclength, UnitSpeedLineUnchanged) {
  const Curve line = analytic("0.6*t", "0.8*t", "0", -1.0, 2.0);
  const Curve c = arclength_reparam(line);
  EXPECT_NEAR(c.t0(), -1.0, 1e-15);
  EXPECT_NEAR(c.t1(), 2.0, 1e-12);
  for (double s : {-1.0, 0.0, 1.3, 2.0}) EXPECT_LT((c.point(s) - line.point(s)).norm(), 1e-12);
}

TEST(Arclength, SingularPointRejected) {
  EXPECT_THROW(arclength_reparam(analytic("t^3", "0", "0", -1.0, 1.0)), DegenerateCurveError);
}

TEST(Arclength, NonUniformSpeedHasUnitTangent) {
  const Curve c = arclength_reparam(fixture("fourier(0.3,0.5)"));
  for (int i = 0; i <= 50; ++i) {
    const double s = c.t0() + (c.t1() - c.t0()) * i / 50;
    const CurveJet j = c.jet(s);
    EXPECT_NEAR(j[1].norm(), 1.0, 1e-12);
    EXPECT_NEAR(j[1].dot(j[2]), 0.0, 1e-10);
  }
}

TEST(Frenet, CircleHasNoTorsion) {
  for (double r : {0.5, 1.0, 3.0}) {
    const Curve c = fixture("circle(" + format_double(r) + ")");
    const FrenetData f = frenet(c, 0.7);
    EXPECT_NEAR(f.k, 1 / r, 1e-12);
    EXPECT_NEAR(f.tau, 0.0, 1e-12);
  }
}

TEST(Frenet, HelixReferenceValues) {
  // k = a/(a^2 + b^2), tau = b/(a^2 + b^2), from the mixed-product formula.
  const struct {
    const char* call;
    double k, tau;
  } cases[] = {{"helix(1,1)", 0.5, 0.5}, {"helix(2,1)", 0.4, 0.2}, {"helix(3,4)", 0.12, 0.16}};
  for (const auto& c : cases) {
    const Curve h = fixture(c.call);
    for (double s : {0.1, 1.0, 4.0}) {
      const FrenetData f = frenet(h, s);
      EXPECT_NEAR(f.k, c.k, 1e-12) << c.call;
      EXPECT_NEAR(f.tau, c.tau, 1e-12) << c.call;
    }
  }
}

TEST(Frenet, FrameIsOrthonormal) {
  const Curve c = arclength_reparam(fixture("fourier"));
  for (int i = 0; i < 40; ++i) {
    const FrenetData f = frenet(c, c.t0() + (c.t1() - c.t0()) * i / 40);
    EXPECT_NEAR(f.t.norm(), 1.0, 1e-9);
    EXPECT_NEAR(f.n.norm(), 1.0, 1e-9);
    EXPECT_NEAR(f.b.norm(), 1.0, 1e-9);
    EXPECT_NEAR(f.t.dot(f.n), 0.0, 1e-9);
    EXPECT_LT((f.b - f.t.cross(f.n)).norm(), 1e-15);
  }
}

TEST(Frenet, LineHasZeroCurvature) {
  const Curve line = fixture("line");
  EXPECT_NEAR(curvature(line, 0.2), 0.0, 1e-15);
  EXPECT_THROW(frenet(line, 0.2), ZeroCurvatureError);
}

TEST(Frenet, TranslatedCurveSameFrame) {
  const SurfacePatch s = patch("helix(1,2)", "fourier");
  for (double v0 : {0.3, 2.0, 5.0}) {
    const Curve shifted = s.alpha.translated(s.beta.point(v0));
    for (double u : {0.5, 3.0}) {
      const FrenetData a = frenet(s.alpha, u), b = frenet(shifted, u);
      EXPECT_LT((a.t - b.t).norm(), 1e-9);
      EXPECT_LT((a.n - b.n).norm(), 1e-9);
      EXPECT_LT((a.b - b.b).norm(), 1e-9);
      EXPECT_NEAR(a.k, b.k, 1e-9);
      EXPECT_NEAR(a.tau, b.tau, 1e-9);
    }
  }
}

TEST(Forms, CylinderSigns) {
  // alpha the unit circle in the xy-plane, beta the vertical line:
  // b_alpha = (0,0,1), t_beta = (0,0,1) so L = -k_alpha = -1, N = 0.
  const SurfacePatch s = patch("circle(1)", "line");
  for (double u : {0.1, 2.0, 5.0}) {
    const FormCoefficients fc = form_coefficients(s, u, 0.3);
    EXPECT_NEAR(fc.phi, std::numbers::pi / 2, 1e-12);
    EXPECT_NEAR(fc.L, -1.0, 1e-12);
    EXPECT_NEAR(fc.N, 0.0, 1e-12);
    EXPECT_EQ(fc.M, 0.0);
    EXPECT_EQ(fc.E, 1.0);
    EXPECT_EQ(fc.G, 1.0);
    const FrenetData f = frenet(s.alpha, u);
    EXPECT_NEAR(fc.L, -f.k / fc.sin_phi * f.b.dot(s.beta.jet(0.3)[1]), 1e-12);
  }
}

TEST(Forms, TwoOrthogonalLinesAreFlat) {
  const SurfacePatch s = patch("line(1,0,0)", "line(0,1,0)");
  const FormCoefficients fc = form_coefficients(s, 0.2, -0.4);
  EXPECT_EQ(fc.L, 0.0);
  EXPECT_EQ(fc.N, 0.0);
  EXPECT_NEAR(fc.phi, std::numbers::pi / 2, 1e-15);
}

TEST(Forms, ConservationAlongV) {
  const SurfacePatch s = patch("helix(1,1)", "fourier");
  for (double u : {0.4, 2.5, 6.0}) {
    std::vector<double> a;
    for (double v : {0.5, 2.0, 4.5}) {
      const FormCoefficients fc = form_coefficients(s, u, v);
      a.push_back(std::sqrt(fc.L * fc.L + fc.phi_u * fc.phi_u));
    }
    EXPECT_NEAR(a[0], a[1], 1e-6);
    EXPECT_NEAR(a[0], a[2], 1e-6);
    EXPECT_NEAR(a[0], 0.5, 1e-6);  // A is the curvature of alpha
  }
}

TEST(Forms, RegularityViolationHasLocation) {
  const SurfacePatch s = patch("line", "line");
  try {
    form_coefficients(s, 0.1, 0.2);
    FAIL();
  } catch (const RegularityError& e) {
    EXPECT_EQ(e.u(), 0.1);
    EXPECT_EQ(e.v(), 0.2);
  }
}

TEST(Curvature, FormsRoute) {
  FormCoefficients fc;
  fc.L = fc.N = fc.sin_phi = 1.0;
  fc.phi = std::numbers::pi / 2;
  EXPECT_EQ(gauss_curvature_forms(fc), 1.0);
  const SurfacePatch s = patch("circle(1)", "line");
  EXPECT_EQ(gauss_curvature_forms(form_coefficients(s, 1.0, 0.0)), 0.0);
}

TEST(Curvature, AngleRoute) {
  FormCoefficients fc;
  fc.sin_phi = 0.5;
  fc.phi_uv = 0.0;
  EXPECT_EQ(gauss_curvature_angle(fc), 0.0);
  const SurfacePatch s = patch("circle(1)", "line");
  EXPECT_NEAR(gauss_curvature_angle(form_coefficients(s, 1.0, 0.2)), 0.0, 1e-8);
}

TEST(Curvature, RoutesAgreeOnRandomPairs) {
  std::mt19937_64 rng(3);
  const char* curves[] = {"helix(1,1)", "helix(2,0.5)", "circle(1.5)", "fourier", "fourier(0.1,0.8)",
                          "scherk-slice(1)", "scherk-slice(2)"};
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_real_distribution<double> x(0.05, 0.95);
  for (int i = 0; i < 200; ++i) {
    const SurfacePatch s = patch(curves[pick(rng)], curves[pick(rng)]);
    const double u = s.domain.u0 + x(rng) * (s.domain.u1 - s.domain.u0);
    const double v = s.domain.v0 + x(rng) * (s.domain.v1 - s.domain.v0);
    FormCoefficients fc;
    try {
      fc = form_coefficients(s, u, v, 1e-2);
    } catch (const RegularityError&) {
      continue;
    }
    const double k = gauss_curvature_forms(fc);
    EXPECT_NEAR(k, gauss_curvature_angle(fc), 1e-6 * std::max(1.0, std::abs(k)));
    EXPECT_LT(egregium_residual(fc), 1e-6 * std::max(1.0, std::abs(k)));
  }
}

TEST(Christoffel, RightAngleConstant) {
  FormCoefficients fc;
  fc.phi = std::numbers::pi / 2;
  fc.sin_phi = 1.0;
  const Christoffel g = christoffel(fc);
  EXPECT_NEAR(g.g111, 0.0, 1e-16);
  EXPECT_EQ(g.g211, 0.0);
  EXPECT_EQ(g.g122, 0.0);
  EXPECT_NEAR(g.g222, 0.0, 1e-16);
  fc.phi_u = 1.0;
  EXPECT_EQ(christoffel(fc).g211, -1.0);
  EXPECT_NEAR(christoffel(fc).g111, 0.0, 1e-16);
}

TEST(Christoffel, GaussFormulaResidual) {
  const SurfacePatch s = patch("helix(1,1)", "fourier");
  for (double u : {0.3, 2.0, 7.0}) {
    for (double v : {0.4, 3.0}) {
      const FormCoefficients fc = form_coefficients(s, u, v);
      const Christoffel g = christoffel(fc);
      const CurveJet a = s.alpha.jet(u), b = s.beta.jet(v);
      const Vec3 r = a[2] - g.g111 * a[1] - g.g211 * b[1] - fc.L * fc.normal;
      EXPECT_LT(r.norm(), 1e-6);
      const Vec3 rv = b[2] - g.g122 * a[1] - g.g222 * b[1] - fc.N * fc.normal;
      EXPECT_LT(rv.norm(), 1e-6);
    }
  }
}

TEST(Codazzi, GenuinePatches) {
  for (auto [a, b] : {std::pair{"circle(1)", "helix(1,1)"}, {"scherk-slice(1)", "scherk-slice(2)"},
                      {"helix(2,1)", "fourier"}}) {
    const SurfacePatch s = patch(a, b);
    for (double fu : {0.2, 0.5, 0.8}) {
      for (double fv : {0.3, 0.6}) {
        const double u = s.domain.u0 + fu * (s.domain.u1 - s.domain.u0);
        const double v = s.domain.v0 + fv * (s.domain.v1 - s.domain.v0);
        const auto [r1, r2] = codazzi_residual(s, u, v, 1e-4);
        EXPECT_LT(r1, 1e-5) << a << "+" << b;
        EXPECT_LT(r2, 1e-5) << a << "+" << b;
      }
    }
  }
}

TEST(Codazzi, CylinderVanishes) {
  const SurfacePatch s = patch("circle(1)", "line");
  const auto [r1, r2] = codazzi_residual(s, 1.0, 0.2, 1e-4);
  EXPECT_LT(r1, 1e-8);
  EXPECT_LT(r2, 1e-8);
}

TEST(Codazzi, PerturbedLIsCaught) {
  const SurfacePatch s = patch("circle(1)", "helix(1,1)");
  // A constant shift leaves L_v alone but breaks N_u = L phi_v / sin(phi);
  // a shift growing in v breaks L_v = N phi_u / sin(phi).
  const FormField shifted = [&](double u, double v) {
    FormCoefficients fc = form_coefficients(s, u, v);
    fc.L += 0.1;
    return fc;
  };
  const FormField tilted = [&](double u, double v) {
    FormCoefficients fc = form_coefficients(s, u, v);
    fc.L += 0.1 * v;
    return fc;
  };
  EXPECT_GT(codazzi_residual(shifted, 2.0, 1.0, 1e-4).second, 1e-3);
  EXPECT_GT(codazzi_residual(tilted, 2.0, 1.0, 1e-4).first, 1e-3);
}

TEST(Torsion, PlanarAlpha) {
  const SurfacePatch s = patch("circle(2)", "helix(1,1)");
  for (double u : {0.5, 4.0}) EXPECT_NEAR(parametric_torsion(form_coefficients(s, u, 1.0)), 0.0, 1e-6);
}

TEST(Torsion, MatchesFrenetOfHelix) {
  const SurfacePatch s = patch("helix(1,1)", "circle(1)");
  for (double u : {0.5, 2.0, 6.0}) {
    for (double v : {0.7, 3.0}) {
      const FormCoefficients fc = form_coefficients(s, u, v);
      EXPECT_NEAR(parametric_torsion(fc), 0.5, 1e-5);
      // A is the constant curvature 1/2 of the helix, so A' = 0.
      EXPECT_NEAR(parametric_torsion_surface(fc, 0.5, 0.0), 0.5, 1e-5);
      EXPECT_NEAR(parametric_torsion_v(fc), 0.0, 1e-6);
      EXPECT_LT(std::abs(torsion_rule_residual(fc, 0.5, 0.5, 0.0)), 1e-5);
    }
  }
}

TEST(Torsion, ZeroDenominator) {
  FormCoefficients fc;
  fc.phi = 1.0;
  fc.sin_phi = std::sin(1.0);
  EXPECT_THROW(parametric_torsion(fc), ZeroCurvatureError);
}

TEST(Surface, CylinderKVanishesOnGrid) {
  const SurfacePatch s = patch("circle(1)", "line");
  for (const auto& p : sweep(s, 64, 64)) {
    ASSERT_TRUE(p.regular);
    EXPECT_LT(std::abs(gauss_curvature_forms(p.fc)), 1e-8);
    EXPECT_LT(std::abs(gauss_curvature_angle(p.fc)), 1e-8);
  }
}

TEST(Surface, CircleHelixKVaries) {
  const SurfacePatch s = patch("circle(1)", "helix(1,1)");
  double sum = 0, sq = 0;
  int n = 0;
  for (const auto& p : sweep(s, 64, 64)) {
    if (!p.regular) continue;
    const double k = gauss_curvature_forms(p.fc);
    sum += k;
    sq += k * k;
    ++n;
  }
  const double mean = sum / n;
  EXPECT_GT(sq / n - mean * mean, 1e-4);
}

TEST(Grid, CellCentres) {
  const auto c = cell_centres(0.0, 1.0, 4);
  EXPECT_EQ(c, (std::vector<double>{0.125, 0.375, 0.625, 0.875}));
}

TEST(Spline, ReproducesCubics) {
  std::vector<double> t, y;
  for (int i = 0; i < 9; ++i) {
    const double x = -1.0 + 0.3 * i + 0.05 * (i % 2);
    t.push_back(x);
    y.push_back(2 * x * x * x - x + 0.5);
  }
  const CubicSpline s(t, y);
  for (double x : {-0.9, 0.0, 0.77, 1.3}) {
    const auto v = s.eval(x);
    EXPECT_NEAR(v[0], 2 * x * x * x - x + 0.5, 1e-12);
    EXPECT_NEAR(v[1], 6 * x * x - 1, 1e-11);
    EXPECT_NEAR(v[2], 12 * x, 1e-10);
    EXPECT_NEAR(v[3], 12, 1e-9);
  }
}

TEST(Spline, SampledHelixTorsion) {
  std::vector<std::array<double, 4>> rows;
  const double c = std::sqrt(2.0);
  for (int i = 0; i <= 400; ++i) {
    const double t = 8.0 * i / 400;
    rows.push_back({t, std::cos(t / c), std::sin(t / c), t / c});
  }
  const Curve h = arclength_reparam(Curve::samples(rows));
  // Torsion from splines carries O(h) error; tolerance raised accordingly.
  for (double s : {2.0, 4.0, 6.0}) {
    const FrenetData f = frenet(h, s);
    EXPECT_NEAR(f.k, 0.5, 1e-5);
    EXPECT_NEAR(f.tau, 0.5, 1e-2);
  }
}

TEST(CurveJson, RoundTrip) {
  for (const char* call : {"line", "circle(2)", "helix(1,1)", "scherk-slice", "scherk-slice(2)", "fourier(0.1,0.2)"}) {
    const nlohmann::json j = fixture_json(call);
    const Curve c = curve_from_json(j);
    EXPECT_EQ(curve_to_json(c), j) << call;
  }
  const nlohmann::json samples = {{"kind", "samples"}, {"points", {{0, 0, 0, 0}, {1, 1, 0, 0}, {2, 2, 1, 0}, {3, 3, 1, 1}}}};
  const Curve c = curve_from_json(samples);
  EXPECT_NEAR(c.point(2.0)[1], 1.0, 1e-15);
  EXPECT_THROW(curve_from_json(nlohmann::json{{"kind", "analytic"}, {"x", "u"}, {"y", "0"}, {"z", "0"}, {"domain", {0, 1}}}),
               InputError);
  EXPECT_THROW(curve_from_json(nlohmann::json{{"kind", "spiral"}}), InputError);
  EXPECT_THROW(load_curve("/nonexistent/curve.json"), InputError);
  EXPECT_THROW(fixture("cone(1)"), InputError);
}
