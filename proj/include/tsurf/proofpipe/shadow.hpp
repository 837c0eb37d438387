#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "tsurf/proofpipe/cases.hpp"

namespace tsurf::proof {

// Outcome of evaluating a symbolic identity at numeric points.
struct ShadowResult {
  std::string stage;
  int trials = 0;
  double max_residual = 0.0;  // relative
  double tolerance = 0.0;
  bool passed() const { return max_residual <= tolerance; }
};

// Integrates phi_uu along u for smooth choices of A(u), tau(u) and compares
// finite differences of P, Q, R and K phi_v with their symbolic u-derivatives.
ShadowResult shadow_derivation(const PipelineRun& run);
// (1 - C) P E(S, C) = divisor (b2 C^2 + b1 C + b0) + (sc C + s1)(P S + Q C + R).
ShadowResult shadow_elimination(const PipelineRun& run, int trials = 200, std::uint64_t seed = 7);
// c2 C^2 + c1 C + c0 = (Q C + R)^2 - P^2 S^2.
ShadowResult shadow_square(const PipelineRun& run, int trials = 200, std::uint64_t seed = 11);
// kappa, lambda, mu and the eliminant against b, c values, evaluated exactly
// at rational points.
ShadowResult shadow_eliminant(const PipelineRun& run, int trials = 100, std::uint64_t seed = 13);
// rationalized(z) = E(s) E(-s) X^(2k), exactly at rational points. A degree-64
// polynomial loses too many digits in doubles for a floating-point check.
ShadowResult shadow_rationalize(const PipelineRun& run, int trials = 50, std::uint64_t seed = 17);

// Random point with dyadic rational coordinates: A in [1/2, 2], |z| < 0.9 A,
// the other generators in [-1, 1], s = +-sqrt(A^2 - z^2) and cot of a random angle in
// (0.2, pi - 0.2). Returns the angle through phi.
sym::NumericPoint random_point(std::mt19937_64& rng, bool torsion, double* phi = nullptr);

// Rational point with A = (m^2 + n^2)/k, z = +-(m^2 - n^2)/k and
// s = +-2mn/k, so that s^2 = A^2 - z^2 holds exactly.
sym::ExactPoint random_exact_point(std::mt19937_64& rng, bool torsion);

}  // namespace tsurf::proof
