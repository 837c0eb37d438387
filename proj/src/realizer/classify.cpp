#include <algorithm>
#include <cmath>
#include <numbers>

#include "tsurf/realizer/realizer.hpp"

namespace tsurf::real {

std::string probe_class_name(ProbeClass c) {
  switch (c) {
    case ProbeClass::plane: return "plane";
    case ProbeClass::line: return "line";
    case ProbeClass::violation: return "violation";
  }
  return "?";
}

CircleProbeReport circle_case_probe(const Curve& beta, double r, int samples, double tol) {
  if (samples < 2) throw InputError("circle probe needs at least 2 samples");
  if (!(r > 0)) throw InputError("circle radius must be positive");
  const Curve b = geom::arclength_reparam(beta);
  CircleProbeReport out;
  out.r = r;
  out.samples = samples;
  for (int i = 0; i < samples; ++i) {
    const double t = b.t0() + (b.t1() - b.t0()) * i / (samples - 1);
    const geom::CurveJet j = b.jet(t);
    const Vec3& d1 = j[1];
    const Vec3& d2 = j[2];
    out.max_b3 = std::max(out.max_b3, std::abs(d1[2]));
    out.max_bracket_2 = std::max(out.max_bracket_2, std::abs(d1[2] * (d1[1] * d2[2] - d2[1] * d1[2])));
    out.max_bracket_1 = std::max(out.max_bracket_1, std::abs(d1[2] * (d1[0] * d2[2] - d2[0] * d1[2])));
  }
  if (out.max_b3 < tol) {
    out.cls = ProbeClass::plane;
  } else if (out.max_bracket_1 < tol && out.max_bracket_2 < tol) {
    out.cls = ProbeClass::line;
  } else {
    out.cls = ProbeClass::violation;
  }
  return out;
}

namespace {

// Max angle between the sampled unit tangents and their mean direction.
std::pair<double, Vec3> tangent_spread(const Curve& c, int samples) {
  std::vector<Vec3> ts;
  Vec3 mean = Vec3::Zero();
  for (int i = 0; i < samples; ++i) {
    const double t = c.t0() + (c.t1() - c.t0()) * i / (samples - 1);
    ts.push_back(c.jet(t)[1].normalized());
    mean += ts.back();
  }
  if (mean.norm() == 0.0) return {std::numbers::pi, Vec3::Zero()};
  mean.normalize();
  double worst = 0.0;
  for (const Vec3& t : ts) worst = std::max(worst, std::atan2(t.cross(mean).norm(), t.dot(mean)));
  return {worst, mean};
}

}  // namespace

CylindricityReport cylindricity(const SurfacePatch& s, double tolC, int samples) {
  const auto [da, ra] = tangent_spread(s.alpha, samples);
  const auto [db, rb] = tangent_spread(s.beta, samples);
  CylindricityReport out;
  out.max_deviation = std::min(da, db);
  if (out.max_deviation < tolC) {
    out.is_cylindrical = true;
    out.generator = da <= db ? "alpha" : "beta";
    out.ruling = da <= db ? ra : rb;
  }
  return out;
}

SurfaceClassification classify_surface(const SurfacePatch& s, int nu, int nv, double tolK, double tolC) {
  SurfaceClassification out;
  std::vector<double> ks;
  for (const auto& p : geom::sweep(s, nu, nv)) {
    if (!p.regular) {
      ++out.skipped;
      continue;
    }
    const double k = geom::gauss_curvature_forms(p.fc);
    out.route_gap = std::max(out.route_gap, std::abs(k - geom::gauss_curvature_angle(p.fc)));
    ks.push_back(k);
  }
  out.points = static_cast<int>(ks.size());
  if (!ks.empty()) {
    double sum = 0.0;
    for (double k : ks) sum += k;
    out.k_mean = sum / static_cast<double>(ks.size());
    double sq = 0.0;
    for (double k : ks) sq += (k - out.k_mean) * (k - out.k_mean);
    out.k_var = sq / static_cast<double>(ks.size());
    const auto [lo, hi] = std::minmax_element(ks.begin(), ks.end());
    out.k_min = *lo;
    out.k_max = *hi;
  }
  out.cylinder = cylindricity(s, tolC);
  out.constant_k = out.points > 0 && out.k_var < tolK;
  out.consistent = !out.constant_k || (std::abs(out.k_mean) < tolK && out.cylinder.is_cylindrical);
  return out;
}

}  // namespace tsurf::real
