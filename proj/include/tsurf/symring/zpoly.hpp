#pragma once

#include <map>
#include <optional>
#include <string>

#include "tsurf/symring/ratexpr.hpp"

namespace tsurf::sym {

// Polynomial in z (standing for phi_u) with RatExpr coefficients.
// Zero coefficients are never stored.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(const RatExpr& c);  // NOLINT(google-explicit-constructor)
  ZPoly(long c) : ZPoly(RatExpr(c)) {}  // NOLINT(google-explicit-constructor)
  static ZPoly z(int k = 1);
  static ZPoly term(const RatExpr& c, int k);
  // X = A^2 - z^2.
  static ZPoly X();

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  // Coefficient of z^k; zero past the degree, error for k < 0.
  RatExpr coeff(int k) const;
  const std::map<int, RatExpr>& coeffs() const { return coeffs_; }
  void set_coeff(int k, const RatExpr& c);
  std::size_t term_count() const;

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }
  bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }

  ZPoly scaled(const RatExpr& c) const;
  ZPoly scaled(const mpq_class& c) const;
  // Divide every coefficient by a unit c*A^k.
  ZPoly divided(const RatExpr& unit) const;
  ZPoly pow(int n) const;
  ZPoly shifted(int k) const;  // multiply by z^k, k may be negative if exact

  // d/dz at fixed generators.
  ZPoly d_z() const;
  // Coefficient-wise total u-derivative (z held fixed).
  ZPoly d_u_coeffs() const;
  ZPoly zero_out(std::initializer_list<Gen> gens) const;

  // Exact division by X; nullopt if X does not divide.
  std::optional<ZPoly> exact_div_X() const;
  // Exact division by a polynomial with unit (c*A^k) leading coefficient.
  std::optional<ZPoly> exact_div(const ZPoly& d) const;

  double eval(const GenValues& g, double z) const;
  mpq_class eval_exact(const ExactGenValues& g, const mpq_class& z) const;
  std::string str() const;

 private:
  std::map<int, RatExpr> coeffs_;
};

}  // namespace tsurf::sym
