#pragma once

#include <string>
#include <vector>

namespace tsurf::proof {

// One value stated in the reference derivation, in the symbolic text syntax
// of the parser (a = A1/A, Da = (A1/A)', Sig, Sig1, s, X).
struct ReferenceValue {
  std::string name;
  std::string stage;
  std::string text;
  std::string alt;      // a second statement of the same value elsewhere, if any
  std::string formula;  // how the reference builds it from earlier named values, if stated
  bool scale_allowed = false;  // the reference fixes the value only up to a constant
  std::string where;    // short locator in the reference derivation
};

const std::vector<ReferenceValue>& reference_values_general();
const std::vector<ReferenceValue>& reference_values_planar();

// The relation before the double-angle rewrite, as displayed: each term is
// the coefficient of sin^i cos^j.
struct DisplayTerm {
  int sin_power;
  int cos_power;
  std::string text;
};
const std::vector<DisplayTerm>& relation_display_general();
const std::vector<DisplayTerm>& relation_display_planar();

}  // namespace tsurf::proof
