#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tsurf/error.hpp"

namespace tsurf::expr {

enum class Var { u, v, t, s };
enum class Func { sin, cos, tan, exp, log, sqrt, atan };

std::string_view var_name(Var v);
std::string_view func_name(Func f);

// Raised when evaluation leaves the domain of a function; subtree() is the
// printed form of the offending node.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::string subtree)
      : Error(what + " in '" + subtree + "'"), subtree_(std::move(subtree)) {}
  const std::string& subtree() const { return subtree_; }

 private:
  std::string subtree_;
};

using Bindings = std::map<Var, double>;

class Expr {
 public:
  enum class Kind { number, pi, variable, neg, add, sub, mul, div, pow, call };

  static Expr number(double value, std::string text = {});
  static Expr pi();
  static Expr variable(Var v);
  static Expr neg(Expr a);
  static Expr binary(Kind k, Expr a, Expr b);
  static Expr pow(Expr base, int exponent);
  static Expr call(Func f, Expr arg);

  Kind kind() const { return node_->kind; }
  double value() const { return node_->value; }
  Var var() const { return node_->var; }
  Func func() const { return node_->func; }
  int exponent() const { return node_->exponent; }
  const Expr& child(std::size_t i) const { return node_->kids.at(i); }
  std::size_t arity() const { return node_->kids.size(); }

  // Prints with minimal parentheses; parse(str()) evaluates identically.
  std::string str() const;
  std::set<Var> free_vars() const;
  double eval(const Bindings& at) const;

 private:
  struct Node {
    Kind kind = Kind::number;
    double value = 0.0;
    std::string text;  // literal as written, kept for printing
    Var var = Var::u;
    Func func = Func::sin;
    int exponent = 0;
    std::vector<Expr> kids;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  void print(std::string& out) const;
  void collect(std::set<Var>& out) const;

  std::shared_ptr<const Node> node_;
};

}  // namespace tsurf::expr
