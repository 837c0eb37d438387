#include "tsurf/proofpipe/shadow.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace tsurf::proof {

namespace {

double dyadic(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_int_distribution<int> d(0, 1024);
  return lo + (hi - lo) * d(rng) / 1024.0;
}

double rel(double lhs, double rhs, double scale) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs), scale});
}

// Smooth test profiles for A(u) and tau(u) with exact derivatives.
sym::GenValues profiles(double u, bool torsion) {
  sym::GenValues g{};
  g[0] = 1.5 + 0.3 * std::sin(u);
  g[1] = 0.3 * std::cos(u);
  g[2] = -0.3 * std::sin(u);
  g[3] = -0.3 * std::cos(u);
  if (torsion) {
    g[4] = 0.4 + 0.2 * std::cos(1.3 * u);
    g[5] = -0.26 * std::sin(1.3 * u);
    g[6] = -0.338 * std::cos(1.3 * u);
  }
  return g;
}

struct State {
  double phi, z;
};

State rhs(double u, const State& st, bool torsion) {
  const auto g = profiles(u, torsion);
  const double x = g[0] * g[0] - st.z * st.z;
  const double s = std::sqrt(x);
  return {st.z, g[4] * s + x * std::cos(st.phi) / std::sin(st.phi) + g[1] / g[0] * st.z};
}

sym::NumericPoint point_at(double u, const State& st, bool torsion) {
  sym::NumericPoint pt;
  pt.g = profiles(u, torsion);
  pt.z = st.z;
  pt.s = std::sqrt(pt.g[0] * pt.g[0] - st.z * st.z);
  pt.cot = std::cos(st.phi) / std::sin(st.phi);
  return pt;
}

double exact_rel(const mpq_class& got, const mpq_class& want) {
  if (got == want) return 0.0;
  const mpq_class diff = abs(got - want);
  const mpq_class scale = std::max({mpq_class(1), mpq_class(abs(got)), mpq_class(abs(want))});
  return mpq_class(diff / scale).get_d();
}

mpq_class small_rational(std::mt19937_64& rng) {
  return mpq_class(std::uniform_int_distribution<int>(-64, 64)(rng), 64);
}

}  // namespace

sym::ExactPoint random_exact_point(std::mt19937_64& rng, bool torsion) {
  std::uniform_int_distribution<int> d(1, 9);
  int m = 0, n = 0;
  while (m == n) {
    m = d(rng);
    n = d(rng);
  }
  const int k = d(rng);
  auto sign = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1; };
  sym::ExactPoint pt;
  pt.g[0] = mpq_class(m * m + n * n, k);
  pt.g[0].canonicalize();
  for (int i = 1; i < 4; ++i) pt.g[i] = small_rational(rng);
  for (int i = 4; i < 7; ++i) pt.g[i] = torsion ? small_rational(rng) : mpq_class(0);
  pt.z = mpq_class(sign() * (m * m - n * n), k);
  pt.z.canonicalize();
  pt.s = mpq_class(sign() * 2 * m * n, k);
  pt.s.canonicalize();
  return pt;
}

sym::NumericPoint random_point(std::mt19937_64& rng, bool torsion, double* phi) {
  sym::NumericPoint pt;
  pt.g[0] = dyadic(rng, 0.5, 2.0);
  for (int i = 1; i < 4; ++i) pt.g[i] = dyadic(rng, -1.0, 1.0);
  for (int i = 4; i < 7; ++i) pt.g[i] = torsion ? dyadic(rng, -1.0, 1.0) : 0.0;
  pt.z = dyadic(rng, -0.9, 0.9) * pt.g[0];
  const double sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1.0 : -1.0;
  pt.s = sign * std::sqrt(pt.g[0] * pt.g[0] - pt.z * pt.z);
  const double angle = dyadic(rng, 0.2, std::numbers::pi - 0.2);
  pt.cot = std::cos(angle) / std::sin(angle);
  if (phi) *phi = angle;
  return pt;
}

ShadowResult shadow_derivation(const PipelineRun& run) {
  ShadowResult r{"derivation", 0, 0.0, 1e-7};
  const bool torsion = run.rules.torsion;
  constexpr double kStep = 1e-4;
  constexpr int kSteps = 6000;
  std::vector<State> traj{{1.2, 0.3}};
  traj.reserve(kSteps + 1);
  for (int i = 0; i < kSteps; ++i) {
    const double u = i * kStep;
    const State& y = traj.back();
    const State k1 = rhs(u, y, torsion);
    const State k2 = rhs(u + kStep / 2, {y.phi + kStep / 2 * k1.phi, y.z + kStep / 2 * k1.z}, torsion);
    const State k3 = rhs(u + kStep / 2, {y.phi + kStep / 2 * k2.phi, y.z + kStep / 2 * k2.z}, torsion);
    const State k4 = rhs(u + kStep, {y.phi + kStep * k3.phi, y.z + kStep * k3.z}, torsion);
    traj.push_back({y.phi + kStep / 6 * (k1.phi + 2 * k2.phi + 2 * k3.phi + k4.phi),
                    y.z + kStep / 6 * (k1.z + 2 * k2.z + 2 * k3.z + k4.z)});
  }
  const RadFrac two_z = RadFrac(ZPoly::z().scaled(RatExpr(2)));
  // Quantity q(u) and the symbolic value of its u-derivative.
  auto check = [&](auto value, auto derivative) {
    constexpr int kStride = 10;  // stencil spacing h = 1e-3
    const double h = kStride * kStep;
    for (int i = 2 * kStride; i + 2 * kStride <= kSteps; i += 500) {
      auto at = [&](int j) { return value(point_at(j * kStep, traj[j], torsion), traj[j].phi); };
      const double fd = (at(i - 2 * kStride) - 8 * at(i - kStride) + 8 * at(i + kStride) - at(i + 2 * kStride)) / (12 * h);
      const double sym = derivative(point_at(i * kStep, traj[i], torsion), traj[i].phi);
      r.max_residual = std::max(r.max_residual, rel(fd, sym, 0.0));
      ++r.trials;
    }
  };
  const auto& t = run.pqr;
  const auto& d = run.derived;
  check([&](const sym::NumericPoint& p, double) { return t.P.eval(p); },
        [&](const sym::NumericPoint& p, double) { return d.d1.eval(p) + (t.Q * two_z).eval(p); });
  check([&](const sym::NumericPoint& p, double) { return t.Q.eval(p); },
        [&](const sym::NumericPoint& p, double) { return d.d2.eval(p) - (t.P * two_z).eval(p); });
  check([&](const sym::NumericPoint& p, double) { return t.R.eval(p); },
        [&](const sym::NumericPoint& p, double) { return d.d3.eval(p); });
  check([&](const sym::NumericPoint& p, double phi) { return eval(run.relation.k_phi_v, p, phi); },
        [&](const sym::NumericPoint& p, double phi) { return eval(run.relation.relation, p, phi) - std::sin(phi); });
  // The relation itself, divided by sin(phi) and cleared of X, is the triple.
  const auto& rel_pqr = run.relation.pqr;
  for (int i = 0; i <= kSteps; i += 500) {
    const auto p = point_at(i * kStep, traj[i], torsion);
    const double phi = traj[i].phi;
    const double x = p.g[0] * p.g[0] - p.z * p.z;
    const double lhs = eval(run.relation.relation, p, phi) / std::sin(phi) * std::pow(x, run.relation.clearing_power);
    const double rhs = rel_pqr.P.eval(p) * std::sin(2 * phi) + rel_pqr.Q.eval(p) * std::cos(2 * phi) + rel_pqr.R.eval(p);
    r.max_residual = std::max(r.max_residual, rel(lhs, rhs, 0.0));
    ++r.trials;
  }
  return r;
}

ShadowResult shadow_elimination(const PipelineRun& run, int trials, std::uint64_t seed) {
  ShadowResult r{"eliminate_trig", trials, 0.0, 1e-9};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    double phi = 0.0;
    const auto pt = random_point(rng, run.rules.torsion, &phi);
    const double S = std::sin(2 * phi);
    const double C = std::cos(2 * phi);
    const double P = run.pqr.P.eval(pt), Q = run.pqr.Q.eval(pt), R = run.pqr.R.eval(pt);
    const double E = run.derived.d1.eval(pt) * S + run.derived.d2.eval(pt) * C + run.derived.d3.eval(pt);
    const double div = run.divisor.eval(pt.g, pt.z);
    const double lhs = (1 - C) * P * E;
    const double quad = run.b.q2.eval(pt) * C * C + run.b.q1.eval(pt) * C + run.b.q0.eval(pt);
    const double rhs = div * quad + (run.cleared.sc.eval(pt) * C + run.cleared.s1.eval(pt)) * (P * S + Q * C + R);
    r.max_residual = std::max(r.max_residual, rel(lhs, rhs, std::abs(div * quad)));
  }
  return r;
}

ShadowResult shadow_square(const PipelineRun& run, int trials, std::uint64_t seed) {
  ShadowResult r{"square_relation", trials, 0.0, 1e-9};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    double phi = 0.0;
    const auto pt = random_point(rng, run.rules.torsion, &phi);
    const double S = std::sin(2 * phi);
    const double C = std::cos(2 * phi);
    const double P = run.pqr.P.eval(pt), Q = run.pqr.Q.eval(pt), R = run.pqr.R.eval(pt);
    const double lhs = run.c.q2.eval(pt) * C * C + run.c.q1.eval(pt) * C + run.c.q0.eval(pt);
    const double rhs = (Q * C + R) * (Q * C + R) - P * P * S * S;
    r.max_residual = std::max(r.max_residual, rel(lhs, rhs, (Q * C + R) * (Q * C + R)));
  }
  return r;
}

ShadowResult shadow_eliminant(const PipelineRun& run, int trials, std::uint64_t seed) {
  ShadowResult r{"eliminant", trials, 0.0, 0.0};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    const auto pt = random_exact_point(rng, run.rules.torsion);
    const mpq_class b2 = run.b.q2.eval_exact(pt), b1 = run.b.q1.eval_exact(pt), b0 = run.b.q0.eval_exact(pt);
    const mpq_class c2 = run.c.q2.eval_exact(pt), c1 = run.c.q1.eval_exact(pt), c0 = run.c.q0.eval_exact(pt);
    const mpq_class k = b2 * c0 - b0 * c2, l = b0 * c1 - b1 * c0, m = b1 * c2 - b2 * c1;
    const mpq_class got[] = {run.elim.kappa.eval_exact(pt), run.elim.lambda.eval_exact(pt),
                             run.elim.mu.eval_exact(pt), run.elim.value.eval_exact(pt)};
    const mpq_class want[] = {k, l, m, k * k - l * m};
    for (int j = 0; j < 4; ++j) r.max_residual = std::max(r.max_residual, exact_rel(got[j], want[j]));
  }
  return r;
}

ShadowResult shadow_rationalize(const PipelineRun& run, int trials, std::uint64_t seed) {
  ShadowResult r{"rationalize", trials, 0.0, 0.0};
  std::mt19937_64 rng(seed);
  if (!run.rationalized_done) return r;
  const bool radical = run.elim.value.has_radical();
  for (int i = 0; i < trials; ++i) {
    auto pt = random_exact_point(rng, run.rules.torsion);
    const mpq_class x = pt.g[0] * pt.g[0] - pt.z * pt.z;
    mpq_class expected = run.elim.value.eval_exact(pt);
    if (radical) {
      pt.s = -pt.s;
      expected *= run.elim.value.eval_exact(pt);
    }
    expected *= sym::rational_pow(x, (radical ? 2 : 1) * run.elim.value.k());
    r.max_residual = std::max(r.max_residual, exact_rel(run.rationalized.eval_exact(pt.g, pt.z), expected));
  }
  return r;
}

}  // namespace tsurf::proof
