#pragma once

// JSON encodings. Real numbers are strings of significant digits so that no
// precision is lost; exact rationals are strings "p/q".
//
//   EvalResult : {"value", "error_estimate", "terms_used", "split_levels"}
//   ClosedForm : {"type": "rational", "value": "1/2"}
//              | {"type": "constant", "name": "pi" | "Gamma(1/4)" | "exp(euler_gamma)"}
//              | {"type": "binary", "op": "+" | "-" | "*" | "/", "lhs": ..., "rhs": ...}
//              | {"type": "pow", "base": ..., "exponent": "1/2"}
//   Identity   : {"name", "rational" (factor grammar), "kind", "start",
//                 "closed_form", "provenance"}
//   VerifyReport: {"name", "computed", "expected", "abs_error", "error_estimate",
//                  "tolerance", "pass", ["failure"], ["symbolic": {"reduced",
//                  "depth", "constant", "comparable", "matches"}]}

#include <json.hpp>

#include "tmprod/catalog.hpp"

namespace tmprod {

nlohmann::json to_json(const EvalResult& r, int digits);
nlohmann::json to_json(const ClosedForm& cf);
/// Throws InputError on a malformed tree.
ClosedForm closed_form_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Identity& id);
Identity identity_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VerifyReport& r, int digits);
nlohmann::json to_json(const Reduction& r);

}  // namespace tmprod
