#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "bt/serialize.hpp"

namespace bt::cli {

enum class Command { classify, spectrum, apply, verify, compose, demo };
enum class OutputFormat { json, csv, text };

std::string_view to_string(Command c);
std::string_view to_string(OutputFormat f);
Command command_from_string(std::string_view s);
OutputFormat format_from_string(std::string_view s);

inline constexpr int kSchemaVersion = 1;

/// Everything a report depends on. Symbol fields hold the text given on the
/// command line (shorthand, inline JSON or file path); reports embed the
/// resolved symbol JSON so they re-run without the original file.
struct RunConfig {
  Command command = Command::demo;
  std::string symbol;
  /// Second factor for `compose`.
  std::string symbol_b;
  /// Comma-separated u-basis coefficients for `apply`.
  std::string poly;
  /// "toeplitz" or "extension" for `apply`; "auto" or "quadrature" for `spectrum`.
  std::string method;
  int n_max = 10;
  int nodes = 200;
  double tol = 1e-8;
  int m_max = 4;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> output;
  bool timestamp = true;
};

/// 200 unless BT_DEFAULT_NODES holds a positive integer. Throws InvalidInput
/// for a malformed value.
int default_nodes();

/// Throws InvalidInput when tol <= 0, nodes < 1, n_max < 0 or a required
/// symbol is missing.
void validate(const RunConfig& config);

Json config_to_json(const RunConfig& config);
/// Accepts a bare config object or a full report (uses its "config").
RunConfig config_from_json(const Json& j);

/// Executes the command and writes the report to `out` (or the configured
/// file). Errors go to `err` as JSON. Returns the process exit status:
/// 0 ok, 1 invalid input or envelope violation, 2 divergent moment or
/// domain violation, 3 non-convergent quadrature.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Command-line entry point used by the `bt` executable.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bt::cli
