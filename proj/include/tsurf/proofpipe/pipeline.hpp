#pragma once

#include <map>
#include <utility>

#include "tsurf/symring/derivation.hpp"

namespace tsurf::proof {

using sym::CotPair;
using sym::DerivationRules;
using sym::RadFrac;
using sym::RatExpr;
using sym::ZPoly;

// Trigonometric polynomial: (i, j) -> coefficient of sin^i(phi) cos^j(phi).
using TrigPoly = std::map<std::pair<int, int>, RadFrac>;

TrigPoly d_u(const TrigPoly& t, const DerivationRules& rules);
double eval(const TrigPoly& t, const sym::NumericPoint& pt, double phi);

// P sin(2 phi) + Q cos(2 phi) + R = 0.
struct PQRTriple {
  RadFrac P, Q, R;
};

// Steps that produce the P, Q, R relation from the phi_uu rule.
struct RelationDerivation {
  CotPair phi_uu;     // phi_uu in terms of z, s, cot(phi)
  TrigPoly k_phi_v;   // K phi_v, from differentiating the phi_uu rule in v
  TrigPoly relation;  // d_u(K phi_v) + sin(phi), which vanishes
  int clearing_power = 0;  // power of X multiplied in at the end
  PQRTriple pqr;
};

RelationDerivation derive_pqr(const DerivationRules& rules);

// Rewrites a trigonometric polynomial with terms of degree 0 and 2 as
// P sin(2 phi) + Q cos(2 phi) + R.
PQRTriple to_double_angle(const TrigPoly& t);

// P,Q,R exactly as printed for the general case and the planar case.
PQRTriple printed_pqr_general();
PQRTriple printed_pqr_planar();

// P' - 2Q z, Q' + 2P z, R' (each reg + cot * cot(phi)).
struct DerivedRelation {
  CotPair d1, d2, d3;
};

DerivedRelation derive_relation(const PQRTriple& t, const DerivationRules& rules);

// Relation after cot(phi) = sin2phi / (1 - cos2phi) and multiplying by
// (1 - cos2phi): c2 C^2 + sc S C + c1 C + s1 S + c0 = 0, S = sin2phi,
// C = cos2phi.
struct CotCleared {
  RadFrac c2, sc, c1, s1, c0;
};

CotCleared clear_cot(const DerivedRelation& d);

// q2 C^2 + q1 C + q0 = 0.
struct TrigQuadratic {
  RadFrac q2, q1, q0;
};

// Multiplies the cleared relation by P, inserts P S = -Q C - R and divides
// the result exactly by `divisor` (1 in the general case).
TrigQuadratic eliminate_trig(const PQRTriple& t, const CotCleared& c, const ZPoly& divisor = ZPoly(1));
// (P^2 + Q^2) C^2 + 2QR C + R^2 - P^2 = 0.
TrigQuadratic square_relation(const PQRTriple& t);

struct Eliminant {
  RadFrac kappa, lambda, mu;  // b2c0 - b0c2, b0c1 - b1c0, b1c2 - b2c1
  RadFrac value;              // kappa^2 - lambda*mu
};

Eliminant eliminant(const TrigQuadratic& b, const TrigQuadratic& c);

// Multiplies x = (p + q s)/X^k by its conjugate and returns the numerator
// p^2 - q^2 X, a polynomial in z that vanishes whenever x does.
ZPoly rationalize(const RadFrac& x);

// The same quantities assembled from the split parts by the explicit
// component formulas; used as an independent check.
TrigQuadratic eliminate_trig_by_parts(const PQRTriple& t, const DerivedRelation& d);
TrigQuadratic square_relation_by_parts(const PQRTriple& t);
Eliminant eliminant_by_parts(const TrigQuadratic& b, const TrigQuadratic& c);
ZPoly rationalize_by_parts(const Eliminant& e);

}  // namespace tsurf::proof
