#pragma once

// JSON polynomial format:
//   {"terms":[{"e":[ex,eX,eY,eZ],"c":"<decimal>"}, ...]}
// Terms appear in canonical order; coefficients are decimal strings.

#include <json.hpp>

#include "alag/exactpoly.hpp"

namespace alag {

nlohmann::json to_json(const Poly& p);

/// Throws std::invalid_argument on malformed input, including zero coefficients
/// and repeated exponent vectors.
Poly poly_from_json(const nlohmann::json& j);

}  // namespace alag
