#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hycap/capacity.hpp"
#include "hycap/certify.hpp"

namespace hycap {

using NamedValues = std::vector<std::pair<std::string, double>>;

struct QuadratureSummary {
  double tol = quadrature::kDefaultTol;
  double max_error_estimate = 0.0;

  friend bool operator==(const QuadratureSummary&, const QuadratureSummary&) = default;
};

/// Output record of one CLI invocation. Maps keep insertion order so the
/// serialized form is stable.
struct Report {
  std::string command;
  NamedValues params;
  NamedValues results;
  std::optional<CapacityBounds> bounds;
  std::vector<Verdict> verdicts;
  QuadratureSummary quadrature;
  std::string version;

  friend bool operator==(const Report&, const Report&) = default;
};

/// %.17g, with non-finite values spelled "inf", "-inf", "nan".
std::string format_real(double value);

std::string to_json(const Report& report);
Report report_from_json(std::string_view text);

/// Results as name,value rows; verdicts follow as a second table when
/// present, separated by a blank line.
std::string to_csv(const Report& report);

/// RFC 4180 quoting when the field needs it.
std::string csv_field(std::string_view text);

}  // namespace hycap
