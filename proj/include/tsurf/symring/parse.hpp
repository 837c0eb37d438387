#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "tsurf/symring/radfrac.hpp"

namespace tsurf::sym {

// Reads polynomial text in z over the generator ring, e.g.
// "56*T*A1/A - 18*T1" or "-4*A^3*A1 + 16*A*A1*z^2 - 12*a*z^4".
// Besides the generators and z it knows the shorthands
//   X = A^2 - z^2, a = A1/A, Da = (A1/A)', Sig = 2a^2 - Da, Sig1 = Sig'.
// parse_radfrac also knows s = sqrt(X) and accepts division by X^n.
// Division is otherwise allowed only by c*A^k. Throws InputError on bad text.
RadFrac parse_radfrac(std::string_view text);
ZPoly parse_zpoly(std::string_view text);
RatExpr parse_ratexpr(std::string_view text);

// Resolves identifiers the grammar does not know, e.g. named ledger values.
using NameLookup = std::function<std::optional<RadFrac>(std::string_view)>;
RadFrac parse_radfrac(std::string_view text, const NameLookup& lookup);

}  // namespace tsurf::sym
