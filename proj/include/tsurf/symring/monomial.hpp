#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "tsurf/error.hpp"

namespace tsurf::sym {

// Generators of the coefficient ring: A, A', A'', A''', tau, tau', tau''.
enum class Gen : int { A = 0, A1, A2, A3, T, T1, T2 };
inline constexpr int kNumGens = 7;

const char* gen_name(Gen g);

class GeneratorOverflow : public Error {
 public:
  using Error::Error;
};

class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

// Packed exponent vector, one byte per generator. Byte 0 is A (biased by
// 128 so negative powers of A are representable), byte 6 is T2. Comparing
// the packed words compares lexicographically with T2 most significant.
class Monomial {
 public:
  Monomial() = default;
  static Monomial gen(Gen g, int e = 1);
  static Monomial from_exponents(const std::array<int, kNumGens>& e);

  int exp(Gen g) const;
  std::array<int, kNumGens> exponents() const;
  int degree() const;
  bool is_unit() const { return bits_ == kUnit; }
  std::uint64_t bits() const { return bits_; }

  Monomial operator*(Monomial o) const;
  Monomial with_exp(Gen g, int e) const;

  bool operator==(const Monomial&) const = default;

  std::string str() const;

 private:
  static constexpr std::uint64_t kUnit = 128;
  explicit Monomial(std::uint64_t b) : bits_(b) {}
  std::uint64_t bits_ = kUnit;
};

// Graded lexicographic order with A < A1 < A2 < A3 < T < T1 < T2.
inline bool grlex_less(Monomial a, Monomial b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a.bits() < b.bits();
}

struct MonomialHash {
  std::size_t operator()(Monomial m) const noexcept {
    std::uint64_t x = m.bits() * 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

}  // namespace tsurf::sym
