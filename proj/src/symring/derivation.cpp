#include "tsurf/symring/derivation.hpp"

namespace tsurf::sym {

RatExpr log_derivative_A() { return RatExpr::gen(Gen::A1) / RatExpr::gen(Gen::A); }

RatExpr d_log_derivative_A() { return log_derivative_A().d_u(); }

RatExpr sigma() {
  const RatExpr a = log_derivative_A();
  return a * a * RatExpr(2) - d_log_derivative_A();
}

RatExpr sigma_prime() { return sigma().d_u(); }

CotPair d_u_z(const DerivationRules& rules) {
  const RadFrac az(ZPoly::z().scaled(log_derivative_A()));
  RadFrac reg = az;
  if (rules.torsion) reg += RadFrac(ZPoly(), ZPoly(RatExpr::gen(Gen::T)));
  return {reg, RadFrac::X()};
}

CotPair d_u_s(const DerivationRules& rules) {
  RadFrac reg{ZPoly(), ZPoly(log_derivative_A())};
  if (rules.torsion) reg -= RadFrac(ZPoly::z().scaled(RatExpr::gen(Gen::T)));
  return {reg, RadFrac(ZPoly(), -ZPoly::z())};
}

CotPair d_u_X(const DerivationRules& rules) {
  const RatExpr two_a_a1 = RatExpr::gen(Gen::A) * RatExpr::gen(Gen::A1) * RatExpr(2);
  return CotPair(RadFrac(two_a_a1)) - d_u_z(rules) * RadFrac(ZPoly::z().scaled(RatExpr(2)));
}

CotPair d_u(const RatExpr& x) { return CotPair(RadFrac(x.d_u())); }

CotPair d_u(const ZPoly& x, const DerivationRules& rules) {
  CotPair out(RadFrac(x.d_u_coeffs()));
  const ZPoly dz = x.d_z();
  if (!dz.is_zero()) out += d_u_z(rules) * RadFrac(dz);
  return out;
}

CotPair d_u(const RadFrac& x, const DerivationRules& rules) {
  if (x.is_zero()) return {};
  if (!rules.torsion && x.has_radical()) {
    // Without torsion s never enters; the rules stay valid but flag misuse.
    throw Error("d_u: radical part present in a torsion-free computation");
  }
  CotPair num = d_u(x.p(), rules);
  if (x.has_radical()) {
    num += d_u(x.q(), rules) * RadFrac::s();
    num += d_u_s(rules) * RadFrac(x.q());
  }
  CotPair out = num * RadFrac(ZPoly(1), ZPoly(), x.k());
  if (x.k() > 0) {
    const RadFrac factor = RadFrac(x.p(), x.q(), x.k() + 1).scaled(RatExpr(-x.k()));
    out += d_u_X(rules) * factor;
  }
  return out;
}

}  // namespace tsurf::sym
