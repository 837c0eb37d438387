#include <cmath>

#include "tsurf/proofpipe/pipeline.hpp"
#include "tsurf/symring/parse.hpp"

namespace tsurf::proof {

namespace {

void add_to(TrigPoly& t, int i, int j, const RadFrac& c) {
  if (c.is_zero()) return;
  if (i < 0 || j < 0) throw Error("trig polynomial exponent went negative");
  auto [it, fresh] = t.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

TrigPoly d_u(const TrigPoly& t, const DerivationRules& rules) {
  TrigPoly out;
  const RadFrac z = RadFrac::z();
  for (const auto& [ij, c] : t) {
    const auto [i, j] = ij;
    const CotPair dc = sym::d_u(c, rules);
    add_to(out, i, j, dc.reg);
    if (!dc.cot.is_zero()) {
      // cot * sin^i cos^j = sin^(i-1) cos^(j+1)
      if (i == 0) throw Error("cot(phi) term without a sin(phi) factor to absorb it");
      add_to(out, i - 1, j + 1, dc.cot);
    }
    // (sin^i cos^j)' = (i sin^(i-1) cos^(j+1) - j sin^(i+1) cos^(j-1)) z
    if (i > 0) add_to(out, i - 1, j + 1, c * z.scaled(RatExpr(i)));
    if (j > 0) add_to(out, i + 1, j - 1, c * z.scaled(RatExpr(-j)));
  }
  return out;
}

double eval(const TrigPoly& t, const sym::NumericPoint& pt, double phi) {
  double sum = 0.0;
  for (const auto& [ij, c] : t) {
    sum += c.eval(pt) * std::pow(std::sin(phi), ij.first) * std::pow(std::cos(phi), ij.second);
  }
  return sum;
}

PQRTriple to_double_angle(const TrigPoly& t) {
  // Bring every term to degree 2 using sin^2 + cos^2 = 1, then
  // sin^2 = (1 - cos2)/2, cos^2 = (1 + cos2)/2, sin cos = sin2/2.
  PQRTriple out;
  const RatExpr half = RatExpr(mpq_class(1, 2));
  for (const auto& [ij, c] : t) {
    const auto [i, j] = ij;
    const RadFrac h = c.scaled(half);
    if (i + j == 0) {
      out.R += c;
    } else if (ij == std::pair{2, 0}) {
      out.R += h;
      out.Q -= h;
    } else if (ij == std::pair{0, 2}) {
      out.R += h;
      out.Q += h;
    } else if (ij == std::pair{1, 1}) {
      out.P += h;
    } else {
      throw Error("to_double_angle: unexpected trigonometric degree " + std::to_string(i + j));
    }
  }
  return out;
}

RelationDerivation derive_pqr(const DerivationRules& rules) {
  RelationDerivation d;
  d.phi_uu = sym::d_u_z(rules);
  const RadFrac& cc = d.phi_uu.cot;
  if (!(cc == RadFrac::X())) throw Error("derive_pqr: expected the cot(phi) part of phi_uu to be X");

  // phi_uu = G(z, phi) = reg(z) + cot(phi) cc(z). Differentiating in v with
  // phi_uv = -K sin(phi) and d cot/d phi = -1/sin^2:
  //   -K z cos = -K sin (reg_z + cot cc_z) - phi_v cc / sin^2.
  // Multiplying by K sin^2 / cc and rewriting K^2 = 1:
  //   K phi_v = sin^2 cos (z - cc_z)/cc - sin^3 reg_z/cc.
  const RadFrac reg_z = d.phi_uu.reg.d_z();
  const RadFrac cc_z = cc.d_z();
  d.k_phi_v[{2, 1}] = (RadFrac::z() - cc_z).div_X();
  d.k_phi_v[{3, 0}] = (-reg_z).div_X();

  // Differentiating in u: (K phi_v)_u = K phi_uv = -K^2 sin = -sin.
  d.relation = d_u(d.k_phi_v, rules);
  add_to(d.relation, 1, 0, RadFrac(1));

  // Divide by sin(phi).
  TrigPoly quad;
  for (const auto& [ij, c] : d.relation) {
    if (ij.first == 0) throw Error("derive_pqr: relation term without a sin(phi) factor");
    add_to(quad, ij.first - 1, ij.second, c);
  }
  auto [P, Q, R] = to_double_angle(quad);
  d.clearing_power = std::max({P.k(), Q.k(), R.k()});
  RadFrac xm(1);
  for (int i = 0; i < d.clearing_power; ++i) xm *= RadFrac::X();
  d.pqr = {P * xm, Q * xm, R * xm};
  return d;
}

PQRTriple printed_pqr_general() {
  return {sym::parse_radfrac("(2*T*A^2 + 4*T*z^2)*s + (-4*A*A1*z + 4*a*z^3)"),
          sym::parse_radfrac("(2*T*a - T1/2)*z*s + 3/2*A^4 - Sig*A^2/2 + (9*A^2/2 - 3*T^2/2 + Sig/2)*z^2 - 6*z^4"),
          sym::parse_radfrac("-(2*T*a - T1/2)*z*s + 5/2*A^4 + Sig*A^2/2 + (3*T^2/2 - A^2/2 - Sig/2)*z^2 - 2*z^4")};
}

PQRTriple printed_pqr_planar() {
  return {sym::parse_radfrac("-4*a*z"), sym::parse_radfrac("3/2*X + 15/2*z^2 - Sig/2"),
          sym::parse_radfrac("5/2*X + 9/2*z^2 + Sig/2")};
}

}  // namespace tsurf::proof
