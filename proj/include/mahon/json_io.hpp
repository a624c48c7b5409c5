#pragma once

#include <string>

#include "json.hpp"
#include "mahon/elements.hpp"
#include "mahon/verifier.hpp"

namespace mahon {

// JSON shapes (all exact, no floating point except the timing field):
//   ring element   {"r": 4, "c": [1, -2]}            coefficients of w^0, w^1, ...
//   polynomial     {"r": 2, "terms": [{"q": 1, "t": 0, "c": [2]}, ...]}
//   element        {"r": 2, "sigma": [3, 1, 2], "z": [1, 0, 0]}
//   parameters     {"n": 3, "r": 2, "a": 0, "b": 0}
//   report         {"id", "params", "verdict", "lhs", "rhs", "diff",
//                   "count", "ms"} plus "note" / "witness" when present
// The *_from_json parsers throw ParseError on malformed input.

nlohmann::json cyc_to_json(const CycInt& v);
CycInt cyc_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const Poly2& p);
Poly2 poly_from_json(const nlohmann::json& j);

nlohmann::json perm_to_json(const ColoredPerm& pi);
ColoredPerm perm_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const VerifyParams& p);
VerifyParams params_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerifyReport& rep);

}  // namespace mahon
