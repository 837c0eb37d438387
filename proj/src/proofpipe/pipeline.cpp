#include "tsurf/proofpipe/pipeline.hpp"

namespace tsurf::proof {

namespace {

RadFrac times_z(const RadFrac& x, long c) { return x * RadFrac(ZPoly::z().scaled(RatExpr(c))); }

RadFrac exact_div(const RadFrac& x, const ZPoly& d) {
  if (d == ZPoly(1)) return x;
  auto p = x.p().exact_div(d);
  auto q = x.q().exact_div(d);
  if (!p || !q) throw sym::LocalizationError("eliminate_trig: result not divisible by " + d.str());
  return RadFrac(*p, *q, x.k());
}

// Split parts of a RadFrac with k == 0: x = x1 s + x2.
struct Parts {
  ZPoly s, r;
};

Parts parts(const RadFrac& x, const char* what) {
  if (x.k() != 0) throw Error(std::string(what) + " carries an X denominator; split parts undefined");
  return {x.q(), x.p()};
}

RadFrac join(const ZPoly& s, const ZPoly& r) { return RadFrac(r, s); }

}  // namespace

DerivedRelation derive_relation(const PQRTriple& t, const DerivationRules& rules) {
  DerivedRelation d;
  d.d1 = sym::d_u(t.P, rules) - CotPair(times_z(t.Q, 2));
  d.d2 = sym::d_u(t.Q, rules) + CotPair(times_z(t.P, 2));
  d.d3 = sym::d_u(t.R, rules);
  return d;
}

CotCleared clear_cot(const DerivedRelation& d) {
  return {-(d.d1.cot + d.d2.reg), d.d2.cot - d.d1.reg, d.d2.reg - d.d3.reg, d.d1.reg + d.d3.cot,
          d.d1.cot + d.d3.reg};
}

TrigQuadratic eliminate_trig(const PQRTriple& t, const CotCleared& c, const ZPoly& divisor) {
  TrigQuadratic b{t.P * c.c2 - t.Q * c.sc, t.P * c.c1 - t.Q * c.s1 - t.R * c.sc, t.P * c.c0 - t.R * c.s1};
  b.q2 = exact_div(b.q2, divisor);
  b.q1 = exact_div(b.q1, divisor);
  b.q0 = exact_div(b.q0, divisor);
  return b;
}

TrigQuadratic square_relation(const PQRTriple& t) {
  return {t.P * t.P + t.Q * t.Q, (t.Q * t.R).scaled(RatExpr(2)), t.R * t.R - t.P * t.P};
}

Eliminant eliminant(const TrigQuadratic& b, const TrigQuadratic& c) {
  Eliminant e;
  e.kappa = b.q2 * c.q0 - b.q0 * c.q2;
  e.lambda = b.q0 * c.q1 - b.q1 * c.q0;
  e.mu = b.q1 * c.q2 - b.q2 * c.q1;
  e.value = e.kappa * e.kappa - e.lambda * e.mu;
  return e;
}

ZPoly rationalize(const RadFrac& x) {
  if (!x.has_radical()) return x.p();
  return x.norm().p();
}

TrigQuadratic eliminate_trig_by_parts(const PQRTriple& t, const DerivedRelation& d) {
  const ZPoly X = ZPoly::X();
  const auto [P1, P2] = parts(t.P, "P");
  const auto [Q1, Q2] = parts(t.Q, "Q");
  const auto [R1, R2] = parts(t.R, "R");
  const ZPoly a1 = parts(d.d1.cot, "alpha").s, a2 = parts(d.d1.cot, "alpha").r;
  const ZPoly a3 = parts(d.d1.reg, "alpha").s, a4 = parts(d.d1.reg, "alpha").r;
  const ZPoly b1 = parts(d.d2.cot, "beta").s, b2 = parts(d.d2.cot, "beta").r;
  const ZPoly b3 = parts(d.d2.reg, "beta").s, b4 = parts(d.d2.reg, "beta").r;
  const ZPoly g1 = parts(d.d3.cot, "gamma").s, g2 = parts(d.d3.cot, "gamma").r;
  const ZPoly g3 = parts(d.d3.reg, "gamma").s, g4 = parts(d.d3.reg, "gamma").r;

  const ZPoly b21 = Q2 * (a3 - b1) + Q1 * (a4 - b2) - P1 * (a2 + b4) - P2 * (a1 + b3);
  const ZPoly b22 = Q1 * (a3 - b1) * X - P1 * (a1 + b3) * X + Q2 * (a4 - b2) - P2 * (a2 + b4);
  const ZPoly b11 = P1 * (b4 - g4) + P2 * (b3 - g3) - Q1 * (a4 + g2) - Q2 * (a3 + g1) + R1 * (a4 - b2) +
                    R2 * (a3 - b1);
  const ZPoly b12 = P1 * (b3 - g3) * X + P2 * (b4 - g4) - Q1 * (a3 + g1) * X - Q2 * (a4 + g2) +
                    R1 * (a3 - b1) * X + R2 * (a4 - b2);
  const ZPoly b01 = P1 * (a2 + g4) + P2 * (a1 + g3) - R1 * (a4 + g2) - R2 * (a3 + g1);
  const ZPoly b02 = P1 * (a1 + g3) * X + P2 * (a2 + g4) - R1 * (a3 + g1) * X - R2 * (a4 + g2);
  return {join(b21, b22), join(b11, b12), join(b01, b02)};
}

TrigQuadratic square_relation_by_parts(const PQRTriple& t) {
  const ZPoly X = ZPoly::X();
  const auto [P1, P2] = parts(t.P, "P");
  const auto [Q1, Q2] = parts(t.Q, "Q");
  const auto [R1, R2] = parts(t.R, "R");
  const ZPoly c21 = (P1 * P2 + Q1 * Q2).scaled(mpq_class(2));
  const ZPoly c22 = P1 * P1 * X + Q1 * Q1 * X + P2 * P2 + Q2 * Q2;
  const ZPoly c11 = (Q1 * R2 + Q2 * R1).scaled(mpq_class(2));
  const ZPoly c12 = (Q1 * R1 * X + Q2 * R2).scaled(mpq_class(2));
  const ZPoly c01 = (R1 * R2 - P1 * P2).scaled(mpq_class(2));
  const ZPoly c02 = R1 * R1 * X - P1 * P1 * X + R2 * R2 - P2 * P2;
  return {join(c21, c22), join(c11, c12), join(c01, c02)};
}

Eliminant eliminant_by_parts(const TrigQuadratic& b, const TrigQuadratic& c) {
  const ZPoly X = ZPoly::X();
  const auto [b21, b22] = parts(b.q2, "b2");
  const auto [b11, b12] = parts(b.q1, "b1");
  const auto [b01, b02] = parts(b.q0, "b0");
  const auto [c21, c22] = parts(c.q2, "c2");
  const auto [c11, c12] = parts(c.q1, "c1");
  const auto [c01, c02] = parts(c.q0, "c0");
  Eliminant e;
  e.kappa = join(b22 * c01 + b21 * c02 - b01 * c22 - b02 * c21, b21 * c01 * X + b22 * c02 - b01 * c21 * X - b02 * c22);
  e.lambda = join(b01 * c12 + b02 * c11 - b11 * c02 - b12 * c01, b01 * c11 * X + b02 * c12 - b11 * c01 * X - b12 * c02);
  e.mu = join(b11 * c22 + b12 * c21 - b21 * c12 - b22 * c11, b11 * c21 * X + b12 * c22 - b21 * c11 * X - b22 * c12);
  e.value = e.kappa * e.kappa - e.lambda * e.mu;
  return e;
}

ZPoly rationalize_by_parts(const Eliminant& e) {
  const ZPoly X = ZPoly::X();
  const auto [k1, k2] = parts(e.kappa, "kappa");
  const auto [l1, l2] = parts(e.lambda, "lambda");
  const auto [m1, m2] = parts(e.mu, "mu");
  const ZPoly u = k1 * k1 * X + k2 * k2 - l1 * m1 * X - l2 * m2;
  const ZPoly v = l1 * m2 + l2 * m1 - k1 * k2.scaled(mpq_class(2));
  return u * u - v * v * X;
}

}  // namespace tsurf::proof
