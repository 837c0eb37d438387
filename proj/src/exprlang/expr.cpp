#include "tsurf/exprlang/expr.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "tsurf/exprlang/jet.hpp"

namespace tsurf::expr {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::u: return "u";
    case Var::v: return "v";
    case Var::t: return "t";
    case Var::s: return "s";
  }
  return "?";
}

std::string_view func_name(Func f) {
  switch (f) {
    case Func::sin: return "sin";
    case Func::cos: return "cos";
    case Func::tan: return "tan";
    case Func::exp: return "exp";
    case Func::log: return "log";
    case Func::sqrt: return "sqrt";
    case Func::atan: return "atan";
  }
  return "?";
}

Expr Expr::number(double value, std::string text) {
  Node n;
  n.kind = Kind::number;
  n.value = value;
  n.text = std::move(text);
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::pi() {
  Node n;
  n.kind = Kind::pi;
  n.value = std::numbers::pi;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::variable(Var v) {
  Node n;
  n.kind = Kind::variable;
  n.var = v;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::neg(Expr a) {
  Node n;
  n.kind = Kind::neg;
  n.kids = {std::move(a)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::binary(Kind k, Expr a, Expr b) {
  if (k != Kind::add && k != Kind::sub && k != Kind::mul && k != Kind::div)
    throw Error("Expr::binary: not a binary operator");
  Node n;
  n.kind = k;
  n.kids = {std::move(a), std::move(b)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::pow(Expr base, int exponent) {
  Node n;
  n.kind = Kind::pow;
  n.exponent = exponent;
  n.kids = {std::move(base)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::call(Func f, Expr arg) {
  Node n;
  n.kind = Kind::call;
  n.func = f;
  n.kids = {std::move(arg)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

namespace {

int precedence(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::mul:
    case Expr::Kind::div: return 2;
    case Expr::Kind::neg: return 3;
    case Expr::Kind::pow: return 4;
    case Expr::Kind::number: return std::signbit(e.value()) ? 3 : 5;
    default: return 5;
  }
}

std::string shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

}  // namespace

void Expr::print(std::string& out) const {
  auto sub = [&out](const Expr& e, bool parens) {
    if (parens) out += '(';
    e.print(out);
    if (parens) out += ')';
  };
  const int p = precedence(*this);
  switch (kind()) {
    case Kind::number: {
      const std::string t = node_->text.empty() ? shortest(value()) : node_->text;
      out += t;
      break;
    }
    case Kind::pi: out += "pi"; break;
    case Kind::variable: out += var_name(var()); break;
    case Kind::neg:
      out += '-';
      sub(child(0), precedence(child(0)) <= p);
      break;
    case Kind::add:
    case Kind::mul:
      sub(child(0), precedence(child(0)) < p);
      out += kind() == Kind::add ? " + " : "*";
      sub(child(1), precedence(child(1)) <= p);
      break;
    case Kind::sub:
    case Kind::div:
      sub(child(0), precedence(child(0)) < p);
      out += kind() == Kind::sub ? " - " : "/";
      sub(child(1), precedence(child(1)) <= p);
      break;
    case Kind::pow:
      sub(child(0), precedence(child(0)) <= p);
      out += '^';
      if (exponent() < 0) {
        out += "(" + std::to_string(exponent()) + ")";
      } else {
        out += std::to_string(exponent());
      }
      break;
    case Kind::call:
      out += func_name(func());
      sub(child(0), true);
      break;
  }
}

std::string Expr::str() const {
  std::string out;
  print(out);
  return out;
}

void Expr::collect(std::set<Var>& out) const {
  if (kind() == Kind::variable) out.insert(var());
  for (const auto& k : node_->kids) k.collect(out);
}

std::set<Var> Expr::free_vars() const {
  std::set<Var> out;
  collect(out);
  return out;
}

double Expr::eval(const Bindings& at) const { return eval_jet(*this, at, 0).value(); }

}  // namespace tsurf::expr
