#pragma once

// Command-line front end. Every subcommand writes to a single stream and
// returns 0 on success, 1 when `verify` finds a failed identity and 2 on a
// usage error.

#include <optional>
#include <ostream>
#include <string>

#include "alag/family.hpp"
#include "alag/hyperseries.hpp"
#include "alag/moments.hpp"
#include "alag/verify.hpp"

namespace alag {

enum class Command { poly, coeffs, moments, perms, tableaux, verify };
enum class Format { text, json, csv };

/// Default upper bounds on n; --allow-large lifts them.
inline constexpr int kMaxPermsN = 10;
inline constexpr int kMaxTableauxN = 9;
inline constexpr int kMaxMomentsN = 14;
inline constexpr int kMaxVerifyN = 8;
inline constexpr int kMaxPolyN = 60;

/// Environment variable naming the default --format.
inline constexpr const char* kFormatEnv = "ALAG_FORMAT";

struct CliConfig {
  Command command = Command::poly;
  int n = 0;
  std::string model = "model1";  // poly, coeffs, moments
  std::string source = "recurrence";
  Format format = Format::text;
  std::optional<std::string> output;
  bool allow_large = false;
  bool all = false;              // moments: print mu_0..mu_n
  std::optional<int> marks;      // perms: number of marks k
  Family family = Family::E;     // perms with marks
  bool alternative = false;      // tableaux: arrow form
  Suite suite = Suite::all;      // verify
};

Format format_from_name(std::string_view name);

/// Validates config, then writes the result to out. Errors go to err.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and dispatches to run, honouring --output.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alag
