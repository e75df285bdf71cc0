#include "hycap/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hycap/certify.hpp"
#include "hycap/errors.hpp"
#include "hycap/potentials.hpp"
#include "hycap/radii.hpp"
#include "hycap/version.hpp"

namespace hycap::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Real-valued flags, in the order they appear in report params.
const std::vector<std::string> kValueFlags = {
    "r",    "R", "t",  "volume", "capacity", "vol-K",   "vol-O",   "d",
    "s",    "k", "area", "rv",   "ball-r",   "inflate", "u-scale", "o-scale",
    "inner-volume-scale"};

const std::map<std::string, std::string> kFlagHelp = {
    {"r", "inner radius"},
    {"R", "outer radius (inf for the compact ball)"},
    {"t", "distance or level probe"},
    {"volume", "hyperbolic volume"},
    {"capacity", "p-capacity value to invert"},
    {"vol-K", "inner volume for the Mazya bound"},
    {"vol-O", "outer volume for the Mazya bound"},
    {"d", "diameter"},
    {"s", "parallel distance"},
    {"k", "quermass index"},
    {"area", "boundary area"},
    {"rv", "relative volume"},
    {"ball-r", "radius of ball quermass data"},
    {"inflate", "factor >= 1 applied to P_1..P_n"},
    {"u-scale", "synthetic scale of s_p(U)"},
    {"o-scale", "synthetic scale of s_p(O)"},
    {"inner-volume-scale", "scale of the inner volume fed to the Mazya bound"}};

struct Inputs {
  int n = 1;
  double p = 2.0;
  bool n_given = false;
  double tol = quadrature::kDefaultTol;
  bool tol_given = false;
  std::optional<double> verdict_tol;
  std::map<std::string, std::optional<double>> values;
  std::optional<std::string> route;
  std::optional<std::string> d_grid;
  std::optional<std::string> quermass_path;
  std::optional<QuermassData> quermass;
  bool strict = false;
};

struct Evaluation {
  NamedValues results;
  std::optional<CapacityBounds> bounds;
  std::vector<Verdict> verdicts;
};

using Operation = std::function<Evaluation(const Inputs&)>;

std::optional<double> maybe(const Inputs& in, const std::string& key) {
  const auto it = in.values.find(key);
  return it == in.values.end() ? std::nullopt : it->second;
}

double need(const Inputs& in, const std::string& key) {
  const auto value = maybe(in, key);
  if (!value) throw UsageError("missing required flag --" + key);
  return *value;
}

Params params_of(const Inputs& in) { return Params{in.n, in.p}; }

NamedValues params_record(const Inputs& in) {
  NamedValues out{{"n", static_cast<double>(in.n)}, {"p", in.p}};
  for (const auto& key : kValueFlags) {
    if (const auto value = maybe(in, key)) out.emplace_back(key, *value);
  }
  return out;
}

CertifyOptions certify_options(const Inputs& in) {
  CertifyOptions options;
  options.quad_tol = in.tol;
  if (in.tol_given) options.tol = options.extrapolation_tol = in.tol;
  if (in.verdict_tol) options.tol = options.extrapolation_tol = *in.verdict_tol;
  return options;
}

std::optional<QuermassData> quermass_source(const Inputs& in) {
  std::optional<QuermassData> q = in.quermass;
  if (!q) {
    if (const auto r = maybe(in, "ball-r")) q = QuermassData::ball(in.n, *r);
  }
  if (q) {
    if (const auto factor = maybe(in, "inflate")) q = q->inflated(*factor);
  }
  return q;
}

QuermassData need_quermass(const Inputs& in) {
  auto q = quermass_source(in);
  if (!q) throw UsageError("needs --quermass <path> or --ball-r <radius>");
  return *q;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse '" + item + "' as a real");
    }
  }
  return out;
}

// --- compute -------------------------------------------------------------

Evaluation compute_ring(const Inputs& in) {
  const RingCondenser condenser(params_of(in), need(in, "r"), need(in, "R"));
  Evaluation out;
  out.bounds = ring_capacity_bounds(condenser, in.tol);
  out.results = {{"capacity", ring_capacity(condenser, in.tol)}};
  return out;
}

Evaluation compute_ball_cap(const Inputs& in) {
  const double r = need(in, "r");
  return {{{"capacity", ball_capacity(params_of(in), r, in.tol)},
           {"large_r_asymptotic", ball_capacity_large_r_asymptotic(params_of(in), r)}},
          std::nullopt, {}};
}

Evaluation compute_kappa(const Inputs& in) {
  return {{{"kappa", kappa(params_of(in), need(in, "r"), in.tol)}}, std::nullopt, {}};
}

Evaluation compute_rvol(const Inputs& in) {
  const auto report = rvol(in.n, need(in, "volume"));
  return {{{"rvol", report.value}, {"residual", report.residual}}, std::nullopt, {}};
}

Evaluation compute_rcap(const Inputs& in) {
  const auto report = rcap(params_of(in), need(in, "capacity"), in.tol);
  return {{{"rcap", report.value}, {"residual", report.residual}}, std::nullopt, {}};
}

Evaluation compute_rv(const Inputs& in) {
  if (in.quermass || maybe(in, "ball-r")) {
    return {{{"rv", relative_volume_quermass(need_quermass(in))}}, std::nullopt, {}};
  }
  const double r = need(in, "r");
  if (const auto R = maybe(in, "R")) {
    return {{{"rv_ratio", relative_volume_ratio(in.n, r, *R)},
             {"rv", relative_volume_ball(in.n, r)}},
            std::nullopt, {}};
  }
  return {{{"rv", relative_volume_ball(in.n, r)}}, std::nullopt, {}};
}

Evaluation compute_point_cap(const Inputs& in) {
  const double R = maybe(in, "R").value_or(kInfinity);
  const Params params = params_of(in);
  return {{{"capacity", point_capacity(params, R, in.tol)},
           {"polar", points_are_polar(params) ? 1.0 : 0.0}},
          std::nullopt, {}};
}

RadialPotential potential_of(const Inputs& in) {
  return RadialPotential(
      RingCondenser(params_of(in), need(in, "r"), maybe(in, "R").value_or(kInfinity)),
      in.tol);
}

Evaluation compute_potential(const Inputs& in) {
  const RadialPotential potential = potential_of(in);
  const double t = need(in, "t");
  const auto sample = potential.value(t);
  Evaluation out;
  out.results = {{"value", sample.value}, {"clamped", sample.clamped ? 1.0 : 0.0}};
  const auto& c = potential.condenser();
  if (t > c.inner() && t < c.outer()) {
    out.results.emplace_back("gradient_norm", potential.gradient_norm(t));
  }
  return out;
}

Evaluation compute_flux(const Inputs& in) {
  const RadialPotential potential = potential_of(in);
  const auto& c = potential.condenser();
  const double capacity = c.compact() ? ball_capacity(c.params(), c.inner(), in.tol)
                                      : ring_capacity(c, in.tol);
  return {{{"flux", potential.flux_integral(need(in, "t"))}, {"capacity", capacity}},
          std::nullopt, {}};
}

// --- bound ---------------------------------------------------------------

Evaluation bound_mazya(const Inputs& in) {
  double vol_K = 0.0;
  double vol_O = 0.0;
  if (maybe(in, "vol-K")) {
    vol_K = need(in, "vol-K");
    vol_O = maybe(in, "vol-O").value_or(kInfinity);
  } else {
    vol_K = ball_volume(in.n, need(in, "r"));
    const double R = maybe(in, "R").value_or(kInfinity);
    vol_O = std::isinf(R) ? kInfinity : ball_volume(in.n, R);
  }
  MazyaRoute route =
      std::isinf(vol_O) ? MazyaRoute::substituted : MazyaRoute::volume_integral;
  if (in.route) {
    if (*in.route == "volume") {
      route = MazyaRoute::volume_integral;
    } else if (*in.route == "substituted") {
      route = MazyaRoute::substituted;
    } else {
      throw UsageError("--route must be 'volume' or 'substituted'");
    }
  }
  return {{{"lower", mazya_lower(params_of(in), vol_K, vol_O, route, in.tol)},
           {"vol_K", vol_K},
           {"vol_O", vol_O}},
          std::nullopt, {}};
}

Evaluation bound_polya(const Inputs& in) {
  const QuermassData q = need_quermass(in);
  return {{{"upper", polya_upper(params_of(in), q, in.tol)}}, std::nullopt, {}};
}

Evaluation bound_rv_upper(const Inputs& in) {
  double rv = 0.0;
  if (const auto given = maybe(in, "rv")) {
    rv = *given;
  } else {
    rv = relative_volume_quermass(need_quermass(in));
  }
  return {{{"rv", rv}, {"upper", rv_upper_capacity(params_of(in), rv, in.tol)}},
          std::nullopt, {}};
}

Evaluation bound_diam(const Inputs& in) {
  const auto b = diameter_harmonic_radius_bound(need(in, "d"));
  return {{{"r_of_d", b.r_of_d},
           {"linear_bound", b.linear_bound},
           {"excess", b.excess},
           {"gap_to_ln2", std::numbers::ln2 - b.excess}},
          std::nullopt, {}};
}

Evaluation bound_steiner(const Inputs& in) {
  const QuermassData q = need_quermass(in);
  const double s = need(in, "s");
  return {{{"area", steiner_area(q, s)},
           {"area_growth_lower", area_growth_lower(q.n(), q.area(), s)}},
          std::nullopt, {}};
}

Evaluation bound_af(const Inputs& in) {
  double area = 0.0;
  if (const auto given = maybe(in, "area")) {
    area = *given;
  } else {
    area = need_quermass(in).area();
  }
  Evaluation out;
  if (const auto k = maybe(in, "k")) {
    if (*k != std::floor(*k)) throw UsageError("--k must be an integer");
    out.results = {{"lower", af_lower_bound(in.n, static_cast<int>(*k), area)}};
  } else {
    for (int k = 1; k <= in.n; ++k) {
      out.results.emplace_back("lower_P" + std::to_string(k),
                               af_lower_bound(in.n, k, area));
    }
  }
  return out;
}

// --- certify -------------------------------------------------------------

Evaluation certify_t21_op(const Inputs& in) {
  IsocapacitaryProbe probe;
  probe.inner_volume_scale = maybe(in, "inner-volume-scale").value_or(1.0);
  return {{}, std::nullopt,
          certify_t21(params_of(in), need(in, "r"), need(in, "R"),
                      certify_options(in), probe)};
}

Evaluation certify_t31_op(const Inputs& in) {
  PointCapacityProbe probe;
  probe.u_scale = maybe(in, "u-scale").value_or(1.0);
  probe.o_scale = maybe(in, "o-scale").value_or(1.0);
  return {{}, std::nullopt,
          certify_t31_eq31(params_of(in), need(in, "r"), need(in, "R"),
                           certify_options(in), probe)};
}

Evaluation certify_t32_op(const Inputs& in) {
  std::vector<double> grid;
  if (in.d_grid) {
    grid = parse_reals(*in.d_grid);
  } else if (const auto d = maybe(in, "d")) {
    grid = {*d};
  } else {
    for (int d = 1; d <= 10; ++d) grid.push_back(d);
  }
  Evaluation out;
  out.verdicts = certify_t31_eq32(grid, certify_options(in));
  out.results = {{"grid_points", static_cast<double>(grid.size())}};
  return out;
}

Evaluation certify_t41_op(const Inputs& in) {
  return {{}, std::nullopt, certify_t41(params_of(in), need(in, "r"), certify_options(in))};
}

Evaluation certify_t51_op(const Inputs& in) {
  if (in.quermass || maybe(in, "inflate")) {
    return {{}, std::nullopt,
            certify_t51_quermass(params_of(in), need_quermass(in), certify_options(in))};
  }
  return {{}, std::nullopt,
          certify_t51_ball(params_of(in), need(in, "ball-r"), certify_options(in))};
}

const std::map<std::string, Operation>& compute_ops() {
  static const std::map<std::string, Operation> ops = {
      {"ring", compute_ring},           {"ball-cap", compute_ball_cap},
      {"kappa", compute_kappa},         {"rvol", compute_rvol},
      {"rcap", compute_rcap},           {"rv", compute_rv},
      {"point-cap", compute_point_cap}, {"potential", compute_potential},
      {"flux", compute_flux}};
  return ops;
}

const std::map<std::string, Operation>& bound_ops() {
  static const std::map<std::string, Operation> ops = {
      {"mazya", bound_mazya},     {"polya", bound_polya},
      {"rv-upper", bound_rv_upper}, {"diam", bound_diam},
      {"steiner", bound_steiner}, {"af", bound_af}};
  return ops;
}

const std::map<std::string, Operation>& certify_ops() {
  static const std::map<std::string, Operation> ops = {
      {"t21", certify_t21_op}, {"t31", certify_t31_op}, {"t32", certify_t32_op},
      {"t41", certify_t41_op}, {"t51", certify_t51_op}};
  return ops;
}

// Subcommand order in help text follows the grammar, not the map.
const std::vector<std::string> kComputeNames = {"ring", "ball-cap", "kappa",
                                                "rvol", "rcap",     "rv",
                                                "point-cap", "potential", "flux"};
const std::vector<std::string> kBoundNames = {"mazya", "polya",   "rv-upper",
                                              "diam",  "steiner", "af"};
const std::vector<std::string> kCertifyNames = {"t21", "t31", "t32", "t41", "t51"};

// --- scan ----------------------------------------------------------------

struct ScanRow {
  double x = 0.0;
  NamedValues results;
  std::string error;
  double max_error = 0.0;
};

void set_swept(Inputs& in, const std::string& param, double value) {
  if (param == "n") {
    if (value != std::round(value)) {
      fail(ErrorKind::domain, "sweep over n hit non-integer " + format_real(value));
    }
    in.n = static_cast<int>(value);
  } else if (param == "p") {
    in.p = value;
  } else {
    in.values[param] = value;
  }
}

ScanRow evaluate_row(Inputs in, const std::string& param, double x,
                     const Operation& op) {
  ScanRow row;
  row.x = x;
  quadrature::ErrorAudit audit;
  try {
    set_swept(in, param, x);
    row.results = op(in).results;
  } catch (const Error& e) {
    row.error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  row.max_error = audit.max_relative_error();
  return row;
}

std::string run_scan(const Inputs& in, const SweepSpec& sweep,
                     const std::string& target, double& max_error) {
  const std::map<std::string, Operation>* table = nullptr;
  if (compute_ops().count(target)) table = &compute_ops();
  if (bound_ops().count(target)) table = &bound_ops();
  if (!table) throw UsageError("scan target '" + target + "' is not a compute or bound operation");
  if (sweep.param != "n" && sweep.param != "p" &&
      std::find(kValueFlags.begin(), kValueFlags.end(), sweep.param) == kValueFlags.end()) {
    throw UsageError("cannot sweep unknown parameter '" + sweep.param + "'");
  }
  const Operation& op = table->at(target);
  const auto grid = sweep.grid();

  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < grid.size(); start += workers) {
    std::vector<std::future<ScanRow>> batch;
    const std::size_t stop = std::min(grid.size(), start + workers);
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, evaluate_row, in, sweep.param,
                                 grid[i], std::cref(op)));
    }
    for (auto& f : batch) rows.push_back(f.get());
  }

  // Columns in order of first appearance down the rows.
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [name, value] : row.results) {
      if (std::find(columns.begin(), columns.end(), name) == columns.end()) {
        columns.push_back(name);
      }
    }
  }
  std::ostringstream out;
  out << csv_field(sweep.param);
  for (const auto& c : columns) out << ',' << csv_field(c);
  out << ",error\n";
  max_error = 0.0;
  for (const auto& row : rows) {
    max_error = std::max(max_error, row.max_error);
    out << format_real(row.x);
    for (const auto& c : columns) {
      out << ',';
      const auto it = std::find_if(row.results.begin(), row.results.end(),
                                   [&c](const auto& kv) { return kv.first == c; });
      if (it != row.results.end()) out << format_real(it->second);
    }
    out << ',' << csv_field(row.error) << '\n';
  }
  return out.str();
}

std::vector<std::string> reversed(std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

std::vector<double> SweepSpec::grid() const {
  std::vector<double> out;
  out.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    out.push_back(i + 1 == steps ? hi : lo + (hi - lo) * i / (steps - 1));
  }
  return out;
}

SweepSpec parse_sweep(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (const char c : text) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.size() != 4 || parts[0].empty()) {
    fail(ErrorKind::validation, "sweep must look like <param>:<lo>:<hi>:<steps>");
  }
  SweepSpec spec;
  spec.param = parts[0];
  try {
    std::size_t used = 0;
    spec.lo = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    spec.hi = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    spec.steps = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
  } catch (const std::exception&) {
    fail(ErrorKind::validation, "sweep bounds or step count do not parse");
  }
  if (!(spec.lo < spec.hi) || !std::isfinite(spec.lo) || !std::isfinite(spec.hi)) {
    fail(ErrorKind::validation, "sweep needs finite lo < hi");
  }
  if (spec.steps < 2) fail(ErrorKind::validation, "sweep needs at least 2 steps");
  return spec;
}

QuermassData parse_quermass(std::string_view json_text, bool strict) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::validation, std::string("quermass file is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) fail(ErrorKind::validation, "quermass file must hold an object");
  for (const char* key : {"n", "area", "P"}) {
    if (!root.contains(key)) {
      fail(ErrorKind::validation, std::string("quermass file lacks field '") + key + "'");
    }
  }
  if (strict) {
    for (const auto& [key, value] : root.items()) {
      if (key != "n" && key != "area" && key != "P") {
        fail(ErrorKind::validation, "unknown quermass field '" + key + "' (strict mode)");
      }
    }
  }
  if (!root["n"].is_number_integer()) fail(ErrorKind::validation, "quermass 'n' must be an integer");
  if (!root["area"].is_number()) fail(ErrorKind::validation, "quermass 'area' must be a number");
  if (!root["P"].is_array()) fail(ErrorKind::validation, "quermass 'P' must be an array");
  std::vector<double> P;
  for (const auto& value : root["P"]) {
    if (!value.is_number()) fail(ErrorKind::validation, "quermass 'P' entries must be numbers");
    P.push_back(value.get<double>());
  }
  return QuermassData(root["n"].get<int>(), root["area"].get<double>(), std::move(P));
}

QuermassData load_quermass(const std::string& path, bool strict) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::validation, "cannot open quermass file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_quermass(buffer.str(), strict);
}

CommandResult run_command(const std::vector<std::string>& argv) {
  CommandResult result;
  result.report.version = kVersion;
  Inputs in;
  for (const auto& key : kValueFlags) in.values[key];

  CLI::App app{"Hyperbolic p-capacities: compute, bound, certify, scan", "hycap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  app.add_option("--n", in.n, "ambient dimension index (space is H^{n+1})");
  app.add_option("--p", in.p, "capacity exponent");
  app.add_option("--tol", in.tol, "quadrature tolerance; also the verdict tolerance when given");
  app.add_option("--verdict-tol", in.verdict_tol, "verdict tolerance for certify");
  auto* json_flag = app.add_flag("--json", "emit JSON (default)");
  auto* csv_flag = app.add_flag("--csv", "emit CSV");
  json_flag->excludes(csv_flag);
  app.add_option("--quermass", in.quermass_path, "quermass data file (JSON)");
  app.add_flag("--strict", in.strict, "reject unknown quermass fields");
  app.add_option("--route", in.route, "Mazya route: volume or substituted");
  app.add_option("--d-grid", in.d_grid, "comma-separated diameters for certify t32");
  for (const auto& key : kValueFlags) {
    app.add_option("--" + key, in.values[key], kFlagHelp.at(key));
  }
  std::optional<std::string> sweep_text;
  std::optional<std::string> target;

  auto add_group = [&app](const std::string& name, const std::string& help,
                          const std::vector<std::string>& leaves) {
    auto* group = app.add_subcommand(name, help);
    group->fallthrough();
    group->require_subcommand(1);
    for (const auto& leaf : leaves) group->add_subcommand(leaf)->fallthrough();
    return group;
  };
  auto* compute = add_group("compute", "evaluate a quantity", kComputeNames);
  auto* bound = add_group("bound", "evaluate a bound", kBoundNames);
  auto* certify = add_group("certify", "emit theorem verdicts", kCertifyNames);
  auto* scan = app.add_subcommand("scan", "sweep one parameter of a compute or bound target");
  scan->fallthrough();
  scan->add_option("--sweep", sweep_text, "<param>:<lo>:<hi>:<steps>")->required();
  scan->add_option("--of", target, "compute or bound operation to sweep")->required();

  try {
    app.parse(reversed(argv));
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    result.output = out.str();
    result.error = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitUsage;
    return result;
  }
  in.n_given = app.get_option("--n")->count() > 0;
  in.tol_given = app.get_option("--tol")->count() > 0;
  const bool csv = csv_flag->count() > 0;

  std::string group;
  std::string leaf;
  for (auto* sub : {compute, bound, certify, scan}) {
    if (sub->parsed()) {
      group = sub->get_name();
      if (sub != scan) leaf = sub->get_subcommands().front()->get_name();
    }
  }
  result.report.command = leaf.empty() ? group : group + " " + leaf;
  result.report.quadrature.tol = in.tol;

  try {
    quadrature::ErrorAudit audit;
    if (in.quermass_path) {
      in.quermass = load_quermass(*in.quermass_path, in.strict);
      if (in.n_given && in.quermass->n() != in.n) {
        fail(ErrorKind::validation, "quermass file has n = " +
                                        std::to_string(in.quermass->n()) +
                                        " but --n is " + std::to_string(in.n));
      }
      in.n = in.quermass->n();
    }
    result.report.params = params_record(in);

    if (group == "scan") {
      SweepSpec sweep;
      try {
        sweep = parse_sweep(*sweep_text);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      result.report.command += " " + sweep.param + " " + *target;
      double max_error = 0.0;
      result.output = run_scan(in, sweep, *target, max_error);
      result.report.quadrature.max_error_estimate = max_error;
      return result;
    }

    const auto& table = group == "compute" ? compute_ops()
                        : group == "bound" ? bound_ops()
                                           : certify_ops();
    Evaluation evaluation = table.at(leaf)(in);
    result.report.results = std::move(evaluation.results);
    result.report.bounds = std::move(evaluation.bounds);
    result.report.verdicts = std::move(evaluation.verdicts);
    result.report.quadrature.max_error_estimate = audit.max_relative_error();
    result.output = csv ? to_csv(result.report) : to_json(result.report);
    if (!all_pass(result.report.verdicts)) {
      result.exit_code = kExitFailedVerdict;
      result.error = "certification failed: at least one verdict did not pass\n";
    }
  } catch (const UsageError& e) {
    result.exit_code = kExitUsage;
    result.error = std::string("usage error: ") + e.what() + "\n";
  } catch (const Error& e) {
    result.exit_code = kExitError;
    result.error = std::string("error (") + std::string(to_string(e.kind())) +
                   "): " + e.what() + "\n";
  }
  return result;
}

}  // namespace hycap::cli
