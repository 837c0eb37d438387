#pragma once

#include <string>

#include "tsurf/symring/zpoly.hpp"

namespace tsurf::sym {

// Numeric stand-ins for every symbol: generators, z, s = +-sqrt(A^2 - z^2)
// and the value of cot(phi).
struct NumericPoint {
  GenValues g{};
  double z = 0.0;
  double s = 0.0;
  double cot = 0.0;
};

// Rational stand-ins where A^2 - z^2 is a rational square s^2.
struct ExactPoint {
  ExactGenValues g;
  mpq_class z, s;
};

// (p + q*s) / X^k with s^2 = X = A^2 - z^2, kept with k minimal.
class RadFrac {
 public:
  RadFrac() = default;
  RadFrac(const ZPoly& p, const ZPoly& q = ZPoly(), int k = 0);  // NOLINT(google-explicit-constructor)
  RadFrac(const RatExpr& c) : RadFrac(ZPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RadFrac(long c) : RadFrac(ZPoly(c)) {}  // NOLINT(google-explicit-constructor)
  static RadFrac s();
  static RadFrac z();
  static RadFrac X();

  const ZPoly& p() const { return p_; }
  const ZPoly& q() const { return q_; }
  int k() const { return k_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  bool has_radical() const { return !q_.is_zero(); }

  RadFrac operator-() const;
  friend RadFrac operator+(const RadFrac& a, const RadFrac& b);
  friend RadFrac operator-(const RadFrac& a, const RadFrac& b);
  friend RadFrac operator*(const RadFrac& a, const RadFrac& b);
  RadFrac& operator+=(const RadFrac& o) { return *this = *this + o; }
  RadFrac& operator-=(const RadFrac& o) { return *this = *this - o; }
  RadFrac& operator*=(const RadFrac& o) { return *this = *this * o; }
  bool operator==(const RadFrac& o) const { return k_ == o.k_ && p_ == o.p_ && q_ == o.q_; }

  RadFrac scaled(const RatExpr& c) const;
  // Multiply by X^-n.
  RadFrac div_X(int n = 1) const;
  // Partial derivative in z at fixed generators (ds/dz = -z s / X).
  RadFrac d_z() const;
  RadFrac zero_out(std::initializer_list<Gen> gens) const;
  // Product with the conjugate: (p^2 - q^2 X) / X^(2k).
  RadFrac norm() const;

  double eval(const NumericPoint& pt) const;
  mpq_class eval_exact(const ExactPoint& pt) const;
  std::string str() const;

 private:
  void normalize();
  ZPoly p_;
  ZPoly q_;
  int k_ = 0;
};

// reg + cot * cot(phi).
struct CotPair {
  RadFrac reg;
  RadFrac cot;

  CotPair() = default;
  CotPair(RadFrac r, RadFrac c = RadFrac()) : reg(std::move(r)), cot(std::move(c)) {}  // NOLINT

  friend CotPair operator+(const CotPair& a, const CotPair& b) { return {a.reg + b.reg, a.cot + b.cot}; }
  friend CotPair operator-(const CotPair& a, const CotPair& b) { return {a.reg - b.reg, a.cot - b.cot}; }
  CotPair operator-() const { return {-reg, -cot}; }
  friend CotPair operator*(const CotPair& a, const RadFrac& b) { return {a.reg * b, a.cot * b}; }
  friend CotPair operator*(const RadFrac& b, const CotPair& a) { return {a.reg * b, a.cot * b}; }
  CotPair& operator+=(const CotPair& o) { return *this = *this + o; }
  bool operator==(const CotPair& o) const = default;
  bool is_zero() const { return reg.is_zero() && cot.is_zero(); }

  double eval(const NumericPoint& pt) const { return reg.eval(pt) + cot.eval(pt) * pt.cot; }
  std::string str() const;
};

}  // namespace tsurf::sym
