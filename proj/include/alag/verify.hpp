#pragma once

// Named verification suites and the JSON/text report formats.
//
// JSON report: [{"theorem": str, "n": int, "status": "pass"|"fail",
//                "lhs": poly, "rhs": poly}, ...]
// where poly is the polynomial JSON format of poly_json.hpp. Checks that
// compare counts carry them as constant polynomials.

#include <string>
#include <string_view>

#include <json.hpp>

#include "alag/moments.hpp"

namespace alag {

enum class Suite { coefficients, recurrence, even_odd, marked, moments, tableaux, analytic, laws, all };

/// "coefficients", "recurrence", "even-odd", "marked", "moments", "tableaux",
/// "analytic", "laws", "all". Throws std::invalid_argument otherwise.
Suite suite_from_name(std::string_view name);
std::string_view suite_name(Suite s);

/// Runs every check of the suite for indices up to n_max.
Report run_suite(Suite suite, int n_max);

bool all_pass(const Report& report);

nlohmann::json report_to_json(const Report& report);
/// Throws std::invalid_argument on schema violations.
Report report_from_json(const nlohmann::json& j);
/// One line per check: "PASS theorem n=..", with both sides on failures.
std::string report_to_text(const Report& report);

/// Three fixed pseudo-random Lambda sequences with Lambda_0 = 0 and small
/// integer entries, reproducible across runs.
std::vector<EvenOddSpec> random_even_odd_specs();

}  // namespace alag
