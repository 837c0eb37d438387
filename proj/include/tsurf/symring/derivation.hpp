#pragma once

#include "tsurf/symring/radfrac.hpp"

namespace tsurf::sym {

// The u-derivation of the differential ring. Its only non-generator rule is
// phi_uu = tau*s + cot(phi)*X + (A'/A)*z; with torsion == false the tau term
// is dropped (the planar generating curve).
struct DerivationRules {
  bool torsion = true;
};

// A'/A, (A'/A)', Sigma = 2(A'/A)^2 - (A'/A)' and Sigma'.
RatExpr log_derivative_A();
RatExpr d_log_derivative_A();
RatExpr sigma();
RatExpr sigma_prime();

CotPair d_u_z(const DerivationRules& rules = {});
CotPair d_u_s(const DerivationRules& rules = {});
CotPair d_u_X(const DerivationRules& rules = {});

CotPair d_u(const RatExpr& x);
CotPair d_u(const ZPoly& x, const DerivationRules& rules = {});
CotPair d_u(const RadFrac& x, const DerivationRules& rules = {});

}  // namespace tsurf::sym
