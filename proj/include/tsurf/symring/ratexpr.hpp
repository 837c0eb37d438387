#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tsurf/symring/monomial.hpp"

namespace tsurf::sym {

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Raised when a quotient would need a denominator outside the allowed
// localization (powers of A here, powers of X in RadFrac).
class LocalizationError : public Error {
 public:
  using Error::Error;
};

// Numeric values for the generators, indexed by Gen.
using GenValues = std::array<double, kNumGens>;
using ExactGenValues = std::array<mpq_class, kNumGens>;

// Element of Q[A, 1/A, A1, A2, A3, T, T1, T2]. Stored as a list of terms
// sorted by ascending grlex order with no zero coefficients, which makes the
// representation canonical: two values are equal iff their term lists are.
// As a fraction it reads numerator / A^k with k the largest negative power
// of A.
class RatExpr {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  RatExpr() = default;
  RatExpr(long c);  // NOLINT(google-explicit-constructor)
  RatExpr(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  static RatExpr gen(Gen g);
  static RatExpr monomial(Monomial m, const mpq_class& c = 1);
  static RatExpr from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_value() const;  // coefficient of the unit monomial
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Fraction view: *this == numerator() / A^denominator_power().
  int denominator_power() const;
  RatExpr numerator() const;

  RatExpr operator-() const;
  RatExpr& operator+=(const RatExpr& o);
  RatExpr& operator-=(const RatExpr& o);
  RatExpr& operator*=(const RatExpr& o);
  friend RatExpr operator+(RatExpr a, const RatExpr& b) { return a += b; }
  friend RatExpr operator-(RatExpr a, const RatExpr& b) { return a -= b; }
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
  // Division only by nonzero c*A^k.
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
  bool operator==(const RatExpr& o) const { return terms_ == o.terms_; }

  RatExpr pow(int n) const;
  RatExpr scaled(const mpq_class& c) const;

  // Partial derivative with respect to one generator.
  RatExpr partial(Gen g) const;
  // Total u-derivative: A -> A1 -> A2 -> A3, T -> T1 -> T2.
  RatExpr d_u() const;
  // Substitute 0 for the listed generators (never A).
  RatExpr zero_out(std::initializer_list<Gen> gens) const;

  // If *this == c * other for a rational c (other nonzero), returns true
  // and sets c.
  bool proportional_to(const RatExpr& other, mpq_class& c) const;

  double eval(const GenValues& g) const;
  // Exact value at rational generator values (A nonzero).
  mpq_class eval_exact(const ExactGenValues& g) const;
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

std::string rational_str(const mpq_class& q);
mpq_class rational_pow(const mpq_class& q, int e);

}  // namespace tsurf::sym
