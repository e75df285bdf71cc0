#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hycap/bounds.hpp"
#include "hycap/report.hpp"

namespace hycap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitFailedVerdict = 3;

struct CommandResult {
  int exit_code = kExitOk;
  Report report;
  /// Text destined for standard output (report, CSV table or help).
  std::string output;
  /// Text destined for standard error.
  std::string error;
};

/// Runs one invocation; argv excludes the program name.
CommandResult run_command(const std::vector<std::string>& argv);

struct SweepSpec {
  std::string param;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;

  [[nodiscard]] std::vector<double> grid() const;
};

/// Parses "<param>:<lo>:<hi>:<steps>".
SweepSpec parse_sweep(std::string_view text);

/// Quermass file: {"n": int, "area": real, "P": [n reals]}. In strict mode
/// any other field is rejected; otherwise extra fields are ignored.
QuermassData parse_quermass(std::string_view json_text, bool strict);
QuermassData load_quermass(const std::string& path, bool strict);

}  // namespace hycap::cli
