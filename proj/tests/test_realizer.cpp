#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tsurf/exprlang/parser.hpp"
#include "tsurf/geomcore/curve_io.hpp"
#include "tsurf/realizer/realizer.hpp"

using namespace tsurf;
using namespace tsurf::real;

namespace {

SurfacePatch patch(const char* a, const char* b) { return SurfacePatch::make(geom::fixture(a), geom::fixture(b)); }

RealizabilityInput input(const char* phi, const char* A, const char* B, double K) {
  RealizabilityInput in{expr::parse(phi), expr::parse(A), expr::parse(B), K};
  in.eps1 = 1;
  in.eps2 = K < 0 ? -1 : 1;
  in.domain = {-1, 1, -1, 1};
  return in;
}

}  // namespace

TEST(Conservation, CircleLineCylinder) {
  for (double r : {0.5, 1.0, 2.5}) {
    const SurfacePatch s = patch(("circle(" + geom::format_double(r) + ")").c_str(), "line");
    const ConservationReport c = conservation_AB(s, 32, 32);
    EXPECT_EQ(c.skipped, 0);
    EXPECT_LT(c.max_spread_A, 1e-10);
    EXPECT_LT(c.max_spread_B, 1e-10);
    for (double a : c.A) EXPECT_NEAR(a, 1 / r, 1e-10);
    for (double b : c.B) EXPECT_NEAR(b, 0.0, 1e-10);
  }
}

TEST(Conservation, AIsCurvatureOfAlpha) {
  const SurfacePatch s = patch("helix(2,1)", "fourier");
  const ConservationReport c = conservation_AB(s, 48, 48);
  EXPECT_LT(c.max_spread_A, 1e-6);
  EXPECT_LT(c.max_spread_B, 1e-6);
  for (double a : c.A) EXPECT_NEAR(a, 0.4, 1e-6);
}

TEST(Conservation, JitteredLIsCaught) {
  const SurfacePatch s = patch("circle(1)", "helix(1,1)");
  const FormField jittered = [&](double u, double v) {
    geom::FormCoefficients fc = geom::form_coefficients(s, u, v);
    fc.L += 0.05 * std::sin(7 * v);
    return fc;
  };
  const ConservationReport c = conservation_AB(jittered, s.domain, 32, 32);
  EXPECT_GT(c.max_spread_A, 1e-2);
}

TEST(Realizability, ConstantAngleUnitForms) {
  const RealizabilityReport r = realizability_check(input("pi/2", "1", "1", 1.0), 16, 16);
  EXPECT_TRUE(r.applicable);
  EXPECT_EQ(r.points, 256);
  EXPECT_NEAR(r.metric, 0.0, 1e-15);
  EXPECT_NEAR(r.gauss, 0.0, 1e-15);
  // phi_uv = 0 contradicts K = 1 through the angle formula.
  EXPECT_NEAR(r.egregium, 1.0, 1e-15);
  EXPECT_NEAR(r.codazzi_1, 0.0, 1e-15);
  EXPECT_NEAR(r.codazzi_2, 0.0, 1e-15);
}

TEST(Realizability, ZeroCurvatureIsCylindrical) {
  const RealizabilityReport r = realizability_check(input("pi/2", "1", "0", 0.0), 16, 16);
  EXPECT_FALSE(r.applicable);
  EXPECT_NE(r.message.find("cylindrical"), std::string::npos);
  EXPECT_EQ(r.points, 0);
}

TEST(Realizability, BoundaryCaseRejectedEvenWhenFlat) {
  // phi depends on u only and A = |phi_u|: L would vanish, which strictness excludes.
  try {
    realizability_check(input("2*u + 1.5", "2", "1", 0.0), 8, 8);
    FAIL();
  } catch (const StrictnessError& e) {
    EXPECT_GE(e.u(), -1.0);
    EXPECT_LE(e.u(), 1.0);
    EXPECT_NE(std::string(e.what()).find("A^2 <= phi_u^2"), std::string::npos);
  }
}

TEST(Realizability, CylinderDataNotApplicable) {
  // circle(1) + line exported from geometry: phi = pi/2, A = 1, B = 0, K = 0.
  const RealizabilityReport r = realizability_check(input("pi/2", "1", "0", 0.0), 8, 8);
  EXPECT_FALSE(r.applicable);
}

TEST(Realizability, StrictnessViolation) {
  // phi_u = 2 exceeds A = 1.
  EXPECT_THROW(realizability_check(input("2*u + 1.5", "1", "1", 1.0), 8, 8), StrictnessError);
  EXPECT_THROW(realizability_check(input("1.5 + 3*v", "1", "1", 1.0), 8, 8), StrictnessError);
}

TEST(Realizability, InputChecks) {
  EXPECT_THROW(realizability_check(input("pi/2", "v", "1", 1.0), 8, 8), InputError);
  EXPECT_THROW(realizability_check(input("pi/2", "1", "u", 1.0), 8, 8), InputError);
  RealizabilityInput in = input("pi/2", "1", "1", -1.0);
  in.eps2 = 1;
  EXPECT_THROW(realizability_check(in, 8, 8), InputError);
}

TEST(Realizability, NegativeCurvatureSigns) {
  const RealizabilityReport r = realizability_check(input("pi/2", "2", "3", -6.0), 8, 8);
  EXPECT_NEAR(r.gauss, 0.0, 1e-12);
  EXPECT_NEAR(r.metric, 0.0, 1e-12);
}

TEST(Realizability, MetricResidualOnGenuineSurfaces) {
  for (auto [a, b] : {std::pair{"circle(1)", "helix(1,1)"}, {"scherk-slice(1)", "scherk-slice(2)"}, {"helix(2,1)", "fourier"}}) {
    const SurfacePatch s = patch(a, b);
    for (const auto& p : geom::sweep(s, 16, 16, 1e-2)) {
      if (!p.regular) continue;
      const auto& fc = p.fc;
      const double A = std::hypot(fc.L, fc.phi_u), B = std::hypot(fc.N, fc.phi_v);
      const double K = geom::gauss_curvature_forms(fc);
      EXPECT_LT(metric_residual(A, B, fc.phi_u, fc.phi_v, fc.sin_phi, K), 1e-9 * std::max(1.0, K * K)) << a << "+" << b;
    }
  }
}

TEST(Probe, LineIsLineCase) {
  const CircleProbeReport p = circle_case_probe(geom::fixture("line(1,1,1)"), 1.0);
  EXPECT_EQ(p.cls, ProbeClass::line);
  EXPECT_EQ(probe_class_name(p.cls), "line");
  EXPECT_EQ(p.samples, 256);
}

TEST(Probe, PlanarCurveIsPlaneCase) {
  const CircleProbeReport p = circle_case_probe(geom::fixture("circle(2)"), 1.0);
  EXPECT_EQ(p.cls, ProbeClass::plane);
  EXPECT_LT(p.max_b3, 1e-12);
}

TEST(Probe, HelixViolates) {
  // The brackets are |sin(s/sqrt2)|/4 and |cos(s/sqrt2)|/4 for helix(1,1).
  const CircleProbeReport p = circle_case_probe(geom::fixture("helix(1,1)"), 1.0);
  EXPECT_EQ(p.cls, ProbeClass::violation);
  EXPECT_EQ(probe_class_name(p.cls), "violation");
  EXPECT_NEAR(p.max_bracket_1, 0.25, 1e-4);
  EXPECT_NEAR(p.max_bracket_2, 0.25, 1e-4);
  EXPECT_NEAR(p.max_b3, std::sqrt(0.5), 1e-12);
}

TEST(Probe, BadArguments) {
  EXPECT_THROW(circle_case_probe(geom::fixture("line"), 0.0), InputError);
  EXPECT_THROW(circle_case_probe(geom::fixture("line"), 1.0, 1), InputError);
}

TEST(Classify, Cylinder) {
  const SurfaceClassification c = classify_surface(patch("circle(1)", "line"), 64, 64);
  EXPECT_EQ(c.points, 4096);
  EXPECT_TRUE(c.cylinder.is_cylindrical);
  EXPECT_EQ(c.cylinder.generator, "beta");
  ASSERT_TRUE(c.cylinder.ruling.has_value());
  EXPECT_NEAR(std::abs(c.cylinder.ruling->z()), 1.0, 1e-12);
  EXPECT_TRUE(c.constant_k);
  EXPECT_TRUE(c.consistent);
  EXPECT_LT(std::abs(c.k_mean), 1e-8);
}

TEST(Classify, Plane) {
  const SurfaceClassification c = classify_surface(patch("line(1,0,0)", "line(0,1,0)"), 16, 16);
  EXPECT_TRUE(c.cylinder.is_cylindrical);
  EXPECT_TRUE(c.constant_k);
  EXPECT_EQ(c.k_min, 0.0);
  EXPECT_EQ(c.k_max, 0.0);
  EXPECT_TRUE(c.consistent);
}

TEST(Classify, CircleHelixNotConstant) {
  const SurfaceClassification c = classify_surface(patch("circle(1)", "helix(1,1)"), 64, 64);
  EXPECT_FALSE(c.cylinder.is_cylindrical);
  EXPECT_FALSE(c.constant_k);
  EXPECT_TRUE(c.consistent);
  EXPECT_GT(c.k_var, 0.1);
  EXPECT_LT(c.route_gap, 1e-8);
}

TEST(Classify, NoConstantNonzeroK) {
  const char* curves[] = {"circle(1)", "helix(1,1)", "helix(1,3)", "fourier", "scherk-slice(1)", "scherk-slice(2)", "line(1,2,0)"};
  for (const char* a : curves) {
    for (const char* b : curves) {
      if (std::string(a) == b) continue;
      const SurfaceClassification c = classify_surface(patch(a, b), 24, 24);
      EXPECT_TRUE(c.consistent) << a << "+" << b;
    }
  }
}

TEST(Realizability, TrialTripleResiduals) {
  // phi = 2 atan(e^(u+v)) has sin(phi) = sech(u+v) and -phi_uv / sin(phi) = tanh(u+v);
  // against K = -1 the worst cell centre is u = v = 15/16.
  const RealizabilityReport r = realizability_check(input("2*atan(exp(u+v))", "2", "2", -1.0), 16, 16);
  EXPECT_TRUE(r.applicable);
  EXPECT_EQ(r.points, 256);
  EXPECT_NEAR(r.egregium, 1 + std::tanh(1.875), 1e-12);
  EXPECT_GT(r.metric, 0.0);
  EXPECT_TRUE(std::isfinite(r.codazzi_1) && std::isfinite(r.codazzi_2));
}
