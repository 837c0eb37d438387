#include <gmpxx.h>
#include <gtest/gtest.h>

#include <map>
#include <random>

#include "properties/expr_props.hpp"
#include "tsurf/exprlang/jet.hpp"
#include "tsurf/exprlang/parser.hpp"

using namespace tsurf::expr;

TEST(Parse, Variable) {
  const Expr e = parse("u");
  EXPECT_EQ(e.kind(), Expr::Kind::variable);
  EXPECT_EQ(e.var(), Var::u);
}

TEST(Parse, SumOfTwoTerms) {
  const Expr e = parse("sin(2*u)+v^2");
  ASSERT_EQ(e.kind(), Expr::Kind::add);
  EXPECT_EQ(e.child(0).kind(), Expr::Kind::call);
  EXPECT_EQ(e.child(0).func(), Func::sin);
  EXPECT_EQ(e.child(1).kind(), Expr::Kind::pow);
  EXPECT_EQ(e.child(1).exponent(), 2);
}

TEST(Parse, SyntaxErrorOffset) {
  try {
    parse("3*)");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Parse, UnknownIdentifier) {
  try {
    parse("u + w");
    FAIL() << "expected an unknown identifier";
  } catch (const UnknownIdentifierError& e) {
    EXPECT_EQ(e.name(), "w");
    EXPECT_EQ(e.offset(), 4u);
  }
  EXPECT_THROW(parse("v", {Var::u}), UnknownIdentifierError);
  EXPECT_THROW(parse("foo(u)"), UnknownIdentifierError);
}

TEST(Parse, Malformed) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("   "), ParseError);
  EXPECT_THROW(parse("(u"), ParseError);
  EXPECT_THROW(parse("u^0.5"), ParseError);
  EXPECT_THROW(parse("u^v"), ParseError);
  EXPECT_THROW(parse("sin u"), ParseError);
  EXPECT_THROW(parse("1.2.3"), ParseError);
  EXPECT_THROW(parse("u u"), ParseError);
  EXPECT_THROW(parse("u^2^3"), ParseError);
}

TEST(Parse, Precedence) {
  const Bindings at = {{Var::u, 3.0}, {Var::v, 2.0}};
  EXPECT_EQ(parse("-u^2").eval(at), -9.0);
  EXPECT_EQ(parse("2*u^2").eval(at), 18.0);
  EXPECT_EQ(parse("u - v - 1").eval(at), 0.0);
  EXPECT_EQ(parse("u/v/2").eval(at), 0.75);
  EXPECT_EQ(parse("u^-1").eval(at), 1.0 / 3.0);
  EXPECT_EQ(parse("u^(-2)").eval(at), 1.0 / 9.0);
  EXPECT_DOUBLE_EQ(parse("pi").eval({}), std::numbers::pi);
}

TEST(Print, RoundTripEvaluatesIdentically) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-0.8, 0.8);
  std::vector<std::string> corpus = tsurf::testing::jet_corpus();
  corpus.insert(corpus.end(), {"-(-u)", "u - (v - 1)", "u/(v/2)", "(-2)^3", "-u^2 - -3*(v - (u - 1))/(2/u)",
                               "(u^2)^3", "1e-5*u + 2.50*v", "2*atan(exp(u+v))", "+u", "((u))"});
  for (const auto& src : corpus) {
    const Expr e = parse(src);
    const Expr back = parse(e.str());
    EXPECT_EQ(back.str(), e.str()) << src;
    for (int i = 0; i < 20; ++i) {
      double u = d(rng), v = d(rng);
      if (src.find("u^-2") != std::string::npos) {
        u += u < 0 ? -0.5 : 0.5;
        v += v < 0 ? -0.5 : 0.5;
      }
      if (src.find("2/u") != std::string::npos && std::abs(u) < 1e-3) continue;
      const Bindings at = {{Var::u, u}, {Var::v, v}};
      EXPECT_EQ(back.eval(at), e.eval(at)) << src;
    }
  }
}

TEST(Print, ProgrammaticNegativeNumber) {
  const Expr e = Expr::pow(Expr::number(-2.0), 2);
  EXPECT_EQ(e.str(), "(-2)^2");
  EXPECT_EQ(parse(e.str()).eval({}), 4.0);
}

TEST(Jet, SinAtZero) {
  const Jet j = eval_jet(parse("sin(u)"), {{Var::u, 0.0}}, 1);
  EXPECT_EQ(j.value(), 0.0);
  EXPECT_EQ(j.du(), 1.0);
}

TEST(Jet, Bilinear) {
  const Jet j = eval_jet(parse("u*v"), {{Var::u, 2.0}, {Var::v, 3.0}}, 2);
  EXPECT_EQ(j.duv(), 1.0);
  EXPECT_EQ(j.duu(), 0.0);
}

TEST(Jet, CubeThirdDerivative) {
  const Jet j = eval_jet(parse("u^3"), {{Var::u, 2.0}}, 3);
  EXPECT_EQ(j.d(3, 0), 6.0);
  EXPECT_EQ(j.duu(), 12.0);
}

TEST(Jet, OrderIsRespected) {
  const Jet j = eval_jet(parse("u^3"), {{Var::u, 2.0}}, 1);
  EXPECT_EQ(j.order(), 1);
  EXPECT_THROW(j.duu(), tsurf::Error);
  EXPECT_THROW(eval_jet(parse("u"), {{Var::u, 0.0}}, 4), tsurf::Error);
}

TEST(Jet, MixedPartialsAreOneCoefficient) {
  const Jet j = eval_jet(parse("exp(u*sin(v))"), {{Var::u, 0.4}, {Var::v, -0.3}}, 3);
  EXPECT_EQ(j.partial(0).dv(), j.partial(1).du());
  EXPECT_EQ(j.partial(0).partial(1).du(), j.partial(0).partial(0).dv());
}

TEST(Jet, DomainErrorsNameTheSubtree) {
  try {
    eval_jet(parse("1 + log(u - 3)"), {{Var::u, 2.0}}, 1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.subtree(), "log(u - 3)");
  }
  try {
    parse("v + 1/(u - 2)").eval({{Var::u, 2.0}, {Var::v, 0.0}});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.subtree(), "1/(u - 2)");
  }
  EXPECT_THROW(parse("sqrt(u)").eval({{Var::u, -1.0}}), DomainError);
  EXPECT_THROW(eval_jet(parse("sqrt(u)"), {{Var::u, 0.0}}, 1), DomainError);
  EXPECT_EQ(parse("sqrt(u)").eval({{Var::u, 0.0}}), 0.0);
  EXPECT_THROW(parse("u^-1").eval({{Var::u, 0.0}}), DomainError);
  EXPECT_THROW(parse("u").eval({}), tsurf::InputError);
}

// Polynomials with small integer coefficients at dyadic points: every jet
// coefficient is exactly representable, so the jet must equal the exact
// rational derivative.
TEST(JetProperty, PolynomialPartialsExact) {
  std::mt19937_64 rng(11);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 1000; ++trial) {
    std::map<std::pair<int, int>, int> poly;
    std::string src = "0";
    for (int t = pick(1, 6); t > 0; --t) {
      const int i = pick(0, 4), j = pick(0, 4 - i), c = pick(-9, 9);
      poly[{i, j}] += c;
      src += " + " + std::to_string(c) + "*u^" + std::to_string(i) + "*v^" + std::to_string(j);
    }
    const mpq_class u(pick(-16, 16), 8), v(pick(-16, 16), 8);
    const Jet jet = eval_jet(parse(src), {{Var::u, u.get_d()}, {Var::v, v.get_d()}}, 3);
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; a + b <= 3; ++b) {
        mpq_class want = 0;
        for (const auto& [ij, c] : poly) {
          const auto [i, j] = ij;
          if (i < a || j < b) continue;
          mpq_class term = c;
          for (int k = 0; k < a; ++k) term *= i - k;
          for (int k = 0; k < b; ++k) term *= j - k;
          for (int k = 0; k < i - a; ++k) term *= u;
          for (int k = 0; k < j - b; ++k) term *= v;
          want += term;
        }
        ASSERT_EQ(jet.d(a, b), want.get_d()) << src << " d(" << a << "," << b << ")";
      }
    }
  }
}

TEST(JetProperty, CompositionsMatchFiniteDifferences) {
  const auto r = tsurf::testing::jet_finite_differences(10, 17);
  EXPECT_EQ(r.trials, 200);
  EXPECT_TRUE(r.ok()) << r.first_failure << " (worst " << r.worst << ")";
}

TEST(Expr, FreeVariables) {
  const auto vars = parse("sin(u) + t*pi").free_vars();
  EXPECT_EQ(vars, (std::set<Var>{Var::u, Var::t}));
}
