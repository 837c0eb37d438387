#include <gtest/gtest.h>

#include "properties/sym_props.hpp"
#include "tsurf/symring/parse.hpp"

using namespace tsurf::sym;
using tsurf::InputError;

namespace {

RatExpr A() { return RatExpr::gen(Gen::A); }
RatExpr A1() { return RatExpr::gen(Gen::A1); }
RatExpr A2() { return RatExpr::gen(Gen::A2); }

}  // namespace

TEST(RatExpr, CanonicalForm) {
  const RatExpr x = A() * A1() + RatExpr(3) - A1() * A();
  EXPECT_EQ(x, RatExpr(3));
  EXPECT_TRUE(x.is_constant());
  EXPECT_EQ(x.constant_value(), 3);
  EXPECT_TRUE((A() - A()).is_zero());
}

TEST(RatExpr, LaurentInA) {
  const RatExpr x = A1() / A().pow(2) + A2() / A();
  EXPECT_EQ(x.denominator_power(), 2);
  EXPECT_EQ(x.numerator(), A1() + A2() * A());
  EXPECT_EQ(A().pow(-3) * A().pow(3), RatExpr(1));
  EXPECT_EQ(RatExpr(6) / RatExpr(4), RatExpr(mpq_class(3, 2)));
}

TEST(RatExpr, DivisionRules) {
  EXPECT_THROW(A() / RatExpr(0), DivisionByZero);
  EXPECT_THROW(A() / A1(), LocalizationError);
  EXPECT_THROW(A() / (A() + RatExpr(1)), LocalizationError);
}

TEST(RatExpr, Derivation) {
  EXPECT_EQ(A().d_u(), A1());
  EXPECT_EQ(A1().d_u(), A2());
  EXPECT_EQ(RatExpr::gen(Gen::A2).d_u(), RatExpr::gen(Gen::A3));
  EXPECT_EQ(RatExpr::gen(Gen::T).d_u(), RatExpr::gen(Gen::T1));
  EXPECT_EQ(A().pow(-1).d_u(), -A1() / A().pow(2));
  EXPECT_EQ(RatExpr(5).d_u(), RatExpr(0));
}

TEST(RatExpr, SigmaReferenceValue) {
  // 2 (A'/A)^2 - (A'/A)' = (3 A'^2 - A'' A) / A^2
  EXPECT_EQ(sigma(), (RatExpr(3) * A1() * A1() - A2() * A()) / A().pow(2));
  EXPECT_EQ(log_derivative_A(), A1() / A());
  EXPECT_EQ(sigma().d_u(), sigma_prime());
}

TEST(RatExpr, ExactAndFloatingEvaluation) {
  const RatExpr x = (RatExpr(3) * A1() * A1() - A2() * A()) / A().pow(2);
  ExactGenValues g{};
  g[0] = mpq_class(1, 2);
  g[1] = 3;
  g[2] = -1;
  EXPECT_EQ(x.eval_exact(g), mpq_class(110));
  GenValues d{};
  d[0] = 0.5;
  d[1] = 3;
  d[2] = -1;
  EXPECT_DOUBLE_EQ(x.eval(d), 110.0);
}

TEST(RatExpr, Proportionality) {
  mpq_class c;
  EXPECT_TRUE((A1() * RatExpr(mpq_class(-2, 7))).proportional_to(A1(), c));
  EXPECT_EQ(c, mpq_class(-2, 7));
  EXPECT_FALSE((A1() + A()).proportional_to(A1(), c));
}

TEST(ZPoly, Arithmetic) {
  const ZPoly X = ZPoly::X();
  EXPECT_EQ(X, ZPoly(A() * A()) - ZPoly::z(2));
  EXPECT_EQ(X.degree(), 2);
  EXPECT_EQ(ZPoly().degree(), -1);
  EXPECT_EQ(ZPoly::z(3).d_z(), ZPoly::z(2).scaled(mpq_class(3)));
  EXPECT_EQ((X * ZPoly::z()).exact_div_X(), ZPoly::z());
  EXPECT_FALSE(ZPoly::z().exact_div_X().has_value());
}

TEST(RadFrac, RadicalSquaresToX) {
  EXPECT_EQ(RadFrac::s() * RadFrac::s(), RadFrac::X());
  EXPECT_EQ(RadFrac::s() * RadFrac::s() * RadFrac::s(), RadFrac::X() * RadFrac::s());
  EXPECT_TRUE(RadFrac::s().has_radical());
  EXPECT_FALSE(RadFrac::X().has_radical());
}

TEST(RadFrac, KeepsMinimalPowerOfX) {
  const RadFrac x = RadFrac(ZPoly::X(), ZPoly(), 2);
  EXPECT_EQ(x.k(), 1);
  EXPECT_EQ(x.div_X(-1), RadFrac(1));
}

TEST(RadFrac, NormIsProductWithConjugate) {
  const RadFrac x(ZPoly::z(), ZPoly(A1()));
  EXPECT_EQ(x.norm(), RadFrac(ZPoly::z(2) - ZPoly(A1() * A1()) * ZPoly::X()));
}

TEST(RadFrac, RadicalDerivative) {
  // d/dz s = -z s / X
  EXPECT_EQ(RadFrac::s().d_z(), -(RadFrac::z() * RadFrac::s()).div_X());
  // d_u s = (A A' - z phi_uu) / s in terms of the rules; squared it gives d_u X.
  const DerivationRules rules;
  EXPECT_EQ(RadFrac(2) * RadFrac::s() * d_u_s(rules).reg, d_u_X(rules).reg);
  EXPECT_EQ(RadFrac(2) * RadFrac::s() * d_u_s(rules).cot, d_u_X(rules).cot);
}

TEST(RadFrac, ExactEvaluation) {
  ExactPoint pt;
  pt.g[0] = mpq_class(5, 3);
  pt.z = mpq_class(4, 3);
  pt.s = 1;
  for (int i = 1; i < kNumGens; ++i) pt.g[i] = 0;
  EXPECT_EQ(RadFrac::X().eval_exact(pt), 1);
  EXPECT_EQ((RadFrac::s() * RadFrac::s()).eval_exact(pt), (RadFrac::X()).eval_exact(pt));
  EXPECT_EQ(RadFrac(ZPoly(), ZPoly(1), 1).eval_exact(pt), 1);
}

TEST(Parse, Shorthands) {
  EXPECT_EQ(parse_ratexpr("Sig"), sigma());
  EXPECT_EQ(parse_ratexpr("a"), A1() / A());
  EXPECT_EQ(parse_zpoly("X"), ZPoly::X());
  EXPECT_EQ(parse_radfrac("s^2"), RadFrac::X());
  EXPECT_EQ(parse_radfrac("1/X"), RadFrac(ZPoly(1), ZPoly(), 1));
  EXPECT_EQ(parse_zpoly("-4*A^3*A1 + 16*A*A1*z^2"),
            ZPoly(RatExpr(-4) * A().pow(3) * A1()) + ZPoly::z(2).scaled(RatExpr(16) * A() * A1()));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_ratexpr("A +"), InputError);
  EXPECT_THROW(parse_ratexpr("q"), InputError);
  EXPECT_THROW(parse_ratexpr("1/A1"), InputError);
  EXPECT_THROW(parse_zpoly("s"), InputError);
}

TEST(SymProperty, RingAxioms) {
  const auto r = tsurf::testing::ring_axioms(1000, 1);
  EXPECT_EQ(r.trials, 1000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(SymProperty, LeibnizRule) {
  const auto r = tsurf::testing::leibniz_rule(1000, 2);
  EXPECT_EQ(r.trials, 1000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
