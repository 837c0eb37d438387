#pragma once

#include <array>
#include <cstddef>

#include "tsurf/exprlang/expr.hpp"

namespace tsurf::expr {

// Truncated bivariate Taylor polynomial sum c_ij x^i y^j with i + j <= order.
// Mixed partials share one coefficient, so they are symmetric exactly.
class Jet {
 public:
  static constexpr int kMaxOrder = 3;

  Jet() = default;
  static Jet constant(double c, int order);
  // The coordinate function for direction dir (0 or 1) at value c.
  static Jet variable(double c, int dir, int order);
  // Univariate series sum d_k x^k / k! in direction dir, from derivatives d_k.
  static Jet series(const std::array<double, 4>& derivs, int dir, int order);

  int order() const { return order_; }
  double value() const { return c_[0]; }
  // Partial derivative d^i/dx^i d^j/dy^j at the expansion point.
  double d(int i, int j) const;
  double du() const { return d(1, 0); }
  double dv() const { return d(0, 1); }
  double duu() const { return d(2, 0); }
  double duv() const { return d(1, 1); }
  double dvv() const { return d(0, 2); }
  // Jet of the partial derivative in direction dir, one order lower.
  Jet partial(int dir) const;

  double coeff(int i, int j) const { return c_[index(i, j)]; }
  void set_coeff(int i, int j, double c) { c_[index(i, j)] = c; }

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator*(double s, Jet a);
  friend Jet operator+(double s, Jet a) {
    a.c_[0] += s;
    return a;
  }

  // f(this) given f and its first three derivatives at value().
  Jet compose(const std::array<double, 4>& f) const;

  static std::size_t index(int i, int j);

 private:
  int order_ = 0;
  std::array<double, 10> c_{};
};

// Thrown by the jet functions below when an argument leaves the domain;
// eval_jet turns it into a DomainError naming the subtree.
class JetDomainError : public Error {
 public:
  using Error::Error;
};

Jet recip(const Jet& a);
Jet operator/(const Jet& a, const Jet& b);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet tan(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet atan(const Jet& a);
Jet pow(const Jet& a, int n);
// Angle of the point (x, y); x and y need not be normalized.
Jet atan2(const Jet& y, const Jet& x);

// Forward-mode jet of e at `at`; variables dir0 and dir1 are the two
// differentiation directions, every other bound variable is held fixed.
Jet eval_jet(const Expr& e, const Bindings& at, int order, Var dir0 = Var::u, Var dir1 = Var::v);

}  // namespace tsurf::expr
