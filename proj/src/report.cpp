#include "hycap/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hycap/errors.hpp"

namespace hycap {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string quote(std::string_view text) {
  return ordered_json(std::string(text)).dump();
}

// Reals go through format_real so the digits are fixed; non-finite values
// become strings.
std::string real(double value) {
  if (!std::isfinite(value)) return quote(format_real(value));
  return format_real(value);
}

void write_named(std::ostringstream& out, const NamedValues& values,
                 std::string_view indent) {
  if (values.empty()) {
    out << "{}";
    return;
  }
  out << "{\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << indent << "  " << quote(values[i].first) << ": "
        << real(values[i].second) << (i + 1 < values.size() ? ",\n" : "\n");
  }
  out << indent << "}";
}

void write_bounds(std::ostringstream& out, const CapacityBounds& b) {
  out << "{\n";
  out << "    \"lower\": " << real(b.lower) << ",\n";
  out << "    \"upper\": " << real(b.upper) << ",\n";
  out << "    \"exact\": " << (b.exact ? real(*b.exact) : "null") << ",\n";
  out << "    \"method\": [";
  for (std::size_t i = 0; i < b.method.size(); ++i) {
    out << (i ? ", " : "") << quote(b.method[i]);
  }
  out << "],\n";
  out << "    \"quad_error\": " << real(b.quad_error) << "\n  }";
}

void write_verdict(std::ostringstream& out, const Verdict& v) {
  out << "    {\n";
  out << "      \"theorem_id\": " << quote(v.theorem_id) << ",\n";
  out << "      \"check\": " << quote(v.check) << ",\n";
  out << "      \"inputs\": ";
  write_named(out, v.inputs, "      ");
  out << ",\n";
  out << "      \"lhs\": " << real(v.lhs) << ",\n";
  out << "      \"rhs\": " << real(v.rhs) << ",\n";
  out << "      \"relation\": " << quote(to_string(v.relation)) << ",\n";
  out << "      \"slack\": " << real(v.slack) << ",\n";
  out << "      \"tol\": " << real(v.tol) << ",\n";
  out << "      \"pass\": " << (v.pass ? "true" : "false") << ",\n";
  out << "      \"informational\": " << (v.informational ? "true" : "false")
      << ",\n";
  out << "      \"note\": " << quote(v.note) << "\n    }";
}

double read_real(const ordered_json& node, std::string_view what) {
  if (node.is_number()) return node.get<double>();
  if (node.is_string()) {
    const auto text = node.get<std::string>();
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  fail(ErrorKind::validation, "report field '" + std::string(what) + "' is not a real");
}

NamedValues read_named(const ordered_json& node, std::string_view what) {
  if (!node.is_object()) {
    fail(ErrorKind::validation, "report field '" + std::string(what) + "' is not an object");
  }
  NamedValues out;
  for (const auto& [key, value] : node.items()) {
    out.emplace_back(key, read_real(value, key));
  }
  return out;
}

const ordered_json& member(const ordered_json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) {
    fail(ErrorKind::validation, std::string("report is missing field '") + key + "'");
  }
  return node.at(key);
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string to_json(const Report& report) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"command\": " << quote(report.command) << ",\n";
  out << "  \"params\": ";
  write_named(out, report.params, "  ");
  out << ",\n  \"results\": ";
  write_named(out, report.results, "  ");
  out << ",\n  \"bounds\": ";
  if (report.bounds) {
    write_bounds(out, *report.bounds);
  } else {
    out << "null";
  }
  out << ",\n  \"verdicts\": ";
  if (report.verdicts.empty()) {
    out << "[]";
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
      write_verdict(out, report.verdicts[i]);
      out << (i + 1 < report.verdicts.size() ? ",\n" : "\n");
    }
    out << "  ]";
  }
  out << ",\n  \"quadrature\": {\n";
  out << "    \"tol\": " << real(report.quadrature.tol) << ",\n";
  out << "    \"max_error_estimate\": " << real(report.quadrature.max_error_estimate)
      << "\n  }";
  out << ",\n  \"version\": " << quote(report.version) << "\n}\n";
  return out.str();
}

Report report_from_json(std::string_view text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::validation, std::string("malformed report JSON: ") + e.what());
  }
  try {
    Report report;
    report.command = member(root, "command").get<std::string>();
    report.params = read_named(member(root, "params"), "params");
    report.results = read_named(member(root, "results"), "results");
    const auto& bounds = member(root, "bounds");
    if (!bounds.is_null()) {
      CapacityBounds b;
      b.lower = read_real(member(bounds, "lower"), "lower");
      b.upper = read_real(member(bounds, "upper"), "upper");
      const auto& exact = member(bounds, "exact");
      if (!exact.is_null()) b.exact = read_real(exact, "exact");
      for (const auto& m : member(bounds, "method")) {
        b.method.push_back(m.get<std::string>());
      }
      b.quad_error = read_real(member(bounds, "quad_error"), "quad_error");
      report.bounds = b;
    }
    for (const auto& node : member(root, "verdicts")) {
      Verdict v;
      v.theorem_id = member(node, "theorem_id").get<std::string>();
      v.check = member(node, "check").get<std::string>();
      v.inputs = read_named(member(node, "inputs"), "inputs");
      v.lhs = read_real(member(node, "lhs"), "lhs");
      v.rhs = read_real(member(node, "rhs"), "rhs");
      v.relation = relation_from_string(member(node, "relation").get<std::string>());
      v.slack = read_real(member(node, "slack"), "slack");
      v.tol = read_real(member(node, "tol"), "tol");
      v.pass = member(node, "pass").get<bool>();
      v.informational = member(node, "informational").get<bool>();
      v.note = member(node, "note").get<std::string>();
      report.verdicts.push_back(std::move(v));
    }
    const auto& quad = member(root, "quadrature");
    report.quadrature.tol = read_real(member(quad, "tol"), "tol");
    report.quadrature.max_error_estimate =
        read_real(member(quad, "max_error_estimate"), "max_error_estimate");
    report.version = member(root, "version").get<std::string>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::validation, std::string("report JSON has wrong types: ") + e.what());
  }
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "name,value\n";
  for (const auto& [name, value] : report.results) {
    out << csv_field(name) << ',' << format_real(value) << '\n';
  }
  if (!report.verdicts.empty()) {
    out << "\ntheorem_id,check,lhs,rhs,relation,slack,tol,pass,informational\n";
    for (const auto& v : report.verdicts) {
      out << csv_field(v.theorem_id) << ',' << csv_field(v.check) << ','
          << format_real(v.lhs) << ',' << format_real(v.rhs) << ','
          << csv_field(to_string(v.relation)) << ',' << format_real(v.slack)
          << ',' << format_real(v.tol) << ',' << (v.pass ? "true" : "false")
          << ',' << (v.informational ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

}  // namespace hycap
