#pragma once

#include <string>

#include <json.hpp>

#include "alg2/algebra.hpp"

namespace alg2 {

/// Algebra file format:
///   { "field": "Q" | "F2" | {"p": 5},
///     "table": { "e1e1": ["a","b"], "e1e2": [...], "e2e1": [...], "e2e2": [...] } }
/// Scalar strings use the exact Scalar rendering. Unknown keys are rejected.
Algebra algebra_from_json(const nlohmann::json& doc);
Algebra algebra_from_json_text(const std::string& text);
nlohmann::json algebra_to_json(const Algebra& A);

FieldSpec field_from_json(const nlohmann::json& value);
nlohmann::json field_to_json(const FieldSpec& f);

}  // namespace alg2
