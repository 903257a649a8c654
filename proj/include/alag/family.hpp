#pragma once

#include <string_view>

namespace alag {

/// The two coefficient families. O carries Model I (L_n), E carries Model II (L_n^(2)).
enum class Family { E, O };

constexpr std::string_view family_name(Family f) { return f == Family::E ? "E" : "O"; }

}  // namespace alag
