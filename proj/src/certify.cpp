#include "hycap/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hycap/errors.hpp"

namespace hycap {
namespace {

InputRecord params_record(const Params& params) {
  return {{"n", static_cast<double>(params.n)}, {"p", params.p}};
}

InputRecord with(InputRecord base,
                 std::initializer_list<std::pair<std::string, double>> extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

}  // namespace

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::greater_equal: return ">=";
    case Relation::less_equal: return "<=";
    case Relation::equal: return "=";
  }
  return "?";
}

Relation relation_from_string(std::string_view text) {
  if (text == ">=") return Relation::greater_equal;
  if (text == "<=") return Relation::less_equal;
  if (text == "=") return Relation::equal;
  fail(ErrorKind::validation, "unknown relation '" + std::string(text) + "'");
}

Verdict make_verdict(std::string theorem_id, std::string check,
                     InputRecord inputs, double lhs, double rhs,
                     Relation relation, double tol) {
  Verdict v;
  v.theorem_id = std::move(theorem_id);
  v.check = std::move(check);
  v.inputs = std::move(inputs);
  v.lhs = lhs;
  v.rhs = rhs;
  v.relation = relation;
  v.tol = tol;
  const double scale = std::max(1.0, std::abs(rhs));
  switch (relation) {
    case Relation::greater_equal:
      v.slack = (lhs - rhs) / scale;
      v.pass = v.slack >= -tol;
      break;
    case Relation::less_equal:
      v.slack = (rhs - lhs) / scale;
      v.pass = v.slack >= -tol;
      break;
    case Relation::equal:
      v.slack = (lhs - rhs) / scale;
      v.pass = std::abs(v.slack) <= tol;
      break;
  }
  // NaN anywhere must never certify.
  if (std::isnan(v.slack)) v.pass = false;
  return v;
}

bool all_pass(const std::vector<Verdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) {
    return v.informational || v.pass;
  });
}

std::vector<Verdict> certify_t21(const Params& params, double r, double R,
                                 const CertifyOptions& options,
                                 const IsocapacitaryProbe& probe) {
  const RingCondenser condenser(params, r, R);
  const double tol = options.tol;
  const double quad_tol = options.quad_tol;
  const int n = params.n;
  const InputRecord base = with(params_record(params), {{"r", r}, {"R", R}});

  std::vector<Verdict> out;
  const double capacity = ring_capacity(condenser, quad_tol);
  const double vol_K = ball_volume(n, r);
  const double vol_O = ball_volume(n, R);
  const double mazya =
      mazya_lower(params, vol_K, vol_O, MazyaRoute::volume_integral, quad_tol);
  out.push_back(make_verdict("T21", "ring_capacity_equals_mazya_bound", base,
                             capacity, mazya, Relation::equal, tol));

  const RadialPotential potential(condenser, quad_tol);
  // For the ball condenser the capacity ratio is 1 identically.
  const double capacity_ratio = std::pow(capacity / capacity, 1.0 / params.p);
  for (const double level : {0.25, 0.5, 0.75}) {
    const double radius = potential.level_radius(level);
    const double volume_radius = rvol(n, ball_volume(n, radius)).value;
    const double area_ratio =
        sphere_area(n, radius) / sphere_area(n, volume_radius);
    const InputRecord at = with(base, {{"t", level}});
    Verdict sandwich = make_verdict("T21", "capacity_ratio_dominates_area_ratio",
                                    at, capacity_ratio, area_ratio,
                                    Relation::greater_equal, tol);
    out.push_back(std::move(sandwich));
    Verdict equality = make_verdict("T21", "level_set_area_ratio_is_one", at,
                                    area_ratio, 1.0, Relation::equal, tol);
    equality.note = "every t in (0,1] witnesses t0 for the ball condenser";
    out.push_back(std::move(equality));
  }

  if (probe.inner_volume_scale != 1.0) {
    const double scaled = probe.inner_volume_scale * vol_K;
    const double bound = mazya_lower(params, scaled, vol_O,
                                     MazyaRoute::volume_integral, quad_tol);
    Verdict v = make_verdict(
        "T21", "ring_capacity_vs_perturbed_mazya_bound",
        with(base, {{"inner_volume_scale", probe.inner_volume_scale}}), capacity,
        bound, Relation::greater_equal, tol);
    v.informational = true;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> certify_t31_eq31(const Params& params, double r, double R,
                                      const CertifyOptions& options,
                                      const PointCapacityProbe& probe) {
  validate(params);
  if (points_are_polar(params)) {
    fail(ErrorKind::regime, "point-capacity ratio inequality needs p > n+1");
  }
  const double tol = options.tol;
  const double quad_tol = options.quad_tol;
  const InputRecord base = with(params_record(params), {{"r", r}, {"R", R}});
  std::vector<Verdict> out;

  const auto sides = capacity_ratio_excess(params, r, R, 1.0, 1.0, quad_tol);
  out.push_back(make_verdict("T31i", "ratio_excess_equality", base, sides.lhs,
                             sides.rhs, Relation::equal, tol));

  const double s_outer = point_capacity(params, R, quad_tol);
  const double green = green_diag_from_point_capacity(params, s_outer);
  const double direct =
      radial::log_integral_from_origin(params, R, quad_tol).value();
  out.push_back(make_verdict("T31i", "green_diagonal_matches_kernel_integral",
                             base, green, direct, Relation::equal, tol));

  // Equality case from separate integrals: int_0^R = int_0^r + int_r^R.
  const double ring = ring_capacity(RingCondenser(params, r, R), quad_tol);
  const double s_inner = point_capacity(params, r, quad_tol);
  out.push_back(make_verdict("T31i", "outer_point_capacity_is_series_of_parts",
                             base, s_outer,
                             series_combination(s_inner, ring, params.p),
                             Relation::equal, tol));

  const double floor = point_capacity(params, kInfinity, quad_tol);
  out.push_back(make_verdict("T31i", "ring_capacity_above_point_constant", base,
                             ring, floor, Relation::greater_equal, tol));

  if (probe.u_scale != 1.0 || probe.o_scale != 1.0) {
    const auto perturbed = capacity_ratio_excess(params, r, R, probe.u_scale,
                                                 probe.o_scale, quad_tol);
    const InputRecord at = with(
        base, {{"u_scale", probe.u_scale}, {"o_scale", probe.o_scale}});
    Verdict eq = make_verdict("T31i", "perturbed_ratio_excess_equality", at,
                              perturbed.lhs, perturbed.rhs, Relation::equal, tol);
    eq.informational = true;
    out.push_back(std::move(eq));
    Verdict ge = make_verdict("T31i", "perturbed_ratio_excess_inequality", at,
                              perturbed.lhs, perturbed.rhs,
                              Relation::greater_equal, tol);
    ge.informational = true;
    out.push_back(std::move(ge));
  }
  return out;
}

std::vector<Verdict> certify_t31_eq32(const std::vector<double>& d_grid,
                                      const CertifyOptions& options) {
  if (d_grid.empty()) fail(ErrorKind::domain, "diameter grid is empty");
  for (std::size_t i = 1; i < d_grid.size(); ++i) {
    if (!(d_grid[i] > d_grid[i - 1])) {
      fail(ErrorKind::domain, "diameter grid must be strictly increasing");
    }
  }
  const double tol = options.tol;
  std::vector<Verdict> out;
  std::vector<DiameterBound> bounds;
  bounds.reserve(d_grid.size());
  for (const double d : d_grid) {
    bounds.push_back(diameter_harmonic_radius_bound(d));
    out.push_back(make_verdict("T31ii", "radius_below_linear_bound", {{"d", d}},
                               bounds.back().r_of_d, bounds.back().linear_bound,
                               Relation::less_equal, tol));
  }
  for (std::size_t i = 1; i < bounds.size(); ++i) {
    // Strict growth: zero tolerance on an exactly computed excess.
    Verdict v = make_verdict("T31ii", "excess_increasing",
                             {{"d_prev", d_grid[i - 1]}, {"d", d_grid[i]}},
                             bounds[i].excess, bounds[i - 1].excess,
                             Relation::greater_equal, 0.0);
    v.pass = v.pass && bounds[i].excess > bounds[i - 1].excess;
    out.push_back(std::move(v));
  }
  Verdict gap = make_verdict("T31ii", "excess_gap_to_ln2", {{"d", d_grid.back()}},
                             bounds.back().excess, std::numbers::ln2,
                             Relation::equal, 1e-6);
  gap.informational = true;
  gap.note = d_grid.size() == 1 ? "single-point grid: monotonicity vacuous"
                                : "gap closes like e^{-d}";
  out.push_back(std::move(gap));
  return out;
}

std::vector<Verdict> certify_t41(const Params& params, double r,
                                 const CertifyOptions& options) {
  validate(params);
  const double tol = options.tol;
  const double quad_tol = options.quad_tol;
  const int n = params.n;
  const InputRecord base = with(params_record(params), {{"r", r}});
  std::vector<Verdict> out;

  const double capacity = ball_capacity(params, r, quad_tol);
  const RadialPotential potential(RingCondenser(params, r, kInfinity), quad_tol);
  const double flux = potential.flux_integral(r + 1.0);
  out.push_back(make_verdict("T41i", "ball_capacity_kappa_power_equals_flux",
                             base, capacity, flux, Relation::equal, tol));

  const double uhat = boundary_trace_uhat_ball(params, r, quad_tol,
                                               radial::TailRoute::compactified);
  out.push_back(make_verdict("T41ii", "boundary_metric_volume_equals_capacity",
                             base, capacity_from_boundary_metric(params, uhat),
                             capacity, Relation::equal, tol));

  const double probe = r + 20.0;
  Verdict trace = make_verdict("T41ii", "trace_limit_matches_uhat",
                               with(base, {{"t", probe}}),
                               boundary_trace_at(params, r, probe, quad_tol),
                               uhat, Relation::equal,
                               std::max(tol, options.extrapolation_tol * 0.1));
  out.push_back(std::move(trace));

  const double rate = n / (params.p - 1.0);
  out.push_back(make_verdict("T41ii", "log_gradient_tends_to_rate",
                             with(base, {{"t", 30.0}}),
                             potential.log_gradient_norm(30.0), rate,
                             Relation::equal,
                             std::max(tol, options.extrapolation_tol * 0.1)));
  Verdict above = make_verdict("T41ii", "log_gradient_at_boundary_vs_rate",
                               with(base, {{"t", r}}),
                               potential.log_gradient_norm(r), rate,
                               Relation::greater_equal, tol);
  above.informational = true;
  above.note = "radial ball potentials approach n/(p-1) from above";
  out.push_back(std::move(above));
  return out;
}

std::vector<Verdict> certify_t51_ball(const Params& params, double r,
                                      const CertifyOptions& options) {
  validate(params);
  const double tol = options.tol;
  const double quad_tol = options.quad_tol;
  const int n = params.n;
  const InputRecord base = with(params_record(params), {{"ball_r", r}});
  const QuermassData q = QuermassData::ball(n, r);
  std::vector<Verdict> out;

  const double capacity = ball_capacity(params, r, quad_tol);
  const double capacity_radius = rcap(params, capacity, quad_tol).value;
  const double rv = relative_volume_quermass(q);
  const double log_rv_radius = std::log(rv) / n;
  out.push_back(make_verdict("T51i", "capacity_radius_equals_radius", base,
                             capacity_radius, r, Relation::equal, tol));
  out.push_back(make_verdict("T51i", "log_relative_volume_equals_radius", base,
                             log_rv_radius, r, Relation::equal, tol));
  out.push_back(make_verdict("T51i", "capacity_radius_below_log_rv", base,
                             capacity_radius, log_rv_radius,
                             Relation::less_equal, tol));
  out.push_back(make_verdict("T51i", "polya_bound_equals_ball_capacity", base,
                             polya_upper(params, q, quad_tol), capacity,
                             Relation::equal, tol));

  const double volume_radius = rvol(n, ball_volume(n, r)).value;
  const double cap1_radius = sphere_area_inverse(n, cap1_ball(n, r));
  const double area_radius = sphere_area_inverse(n, q.area());
  out.push_back(make_verdict("T51ii", "volume_radius_equals_radius", base,
                             volume_radius, r, Relation::equal, tol));
  out.push_back(make_verdict("T51ii", "volume_radius_below_cap1_radius", base,
                             volume_radius, cap1_radius, Relation::less_equal, tol));
  out.push_back(make_verdict("T51ii", "cap1_radius_below_area_radius", base,
                             cap1_radius, area_radius, Relation::less_equal, tol));
  out.push_back(make_verdict("T51ii", "area_radius_below_log_rv", base,
                             area_radius, log_rv_radius, Relation::less_equal, tol));

  const auto rc = relative_pcapacity_ball(params, r, kRelativeCapacityProbes[2],
                                          kRelativeCapacityProbes, quad_tol);
  out.push_back(make_verdict("T51ii", "relative_capacity_equals_relative_volume",
                             base, rc.extrapolated, relative_volume_ball(n, r),
                             Relation::equal, options.extrapolation_tol));
  return out;
}

std::vector<Verdict> certify_t51_quermass(const Params& params,
                                          const QuermassData& q,
                                          const CertifyOptions& options) {
  validate(params);
  if (q.n() != params.n) {
    fail(ErrorKind::validation, "quermass data dimension differs from n");
  }
  const double tol = options.tol;
  const double quad_tol = options.quad_tol;
  const int n = params.n;
  InputRecord base = with(params_record(params), {{"area", q.area()}});
  for (int k = 1; k <= n; ++k) base.emplace_back("P" + std::to_string(k), q.P(k));
  std::vector<Verdict> out;

  const double log_rv_radius = std::log(relative_volume_quermass(q)) / n;
  const double upper = polya_upper(params, q, quad_tol);
  const double capacity_radius = rcap(params, upper, quad_tol).value;
  out.push_back(make_verdict("T51i", "capacity_radius_of_polya_bound_below_log_rv",
                             base, capacity_radius, log_rv_radius,
                             Relation::less_equal, tol));

  const double area_radius = sphere_area_inverse(n, q.area());
  out.push_back(make_verdict("T51ii", "area_radius_below_log_rv", base,
                             area_radius, log_rv_radius, Relation::less_equal, tol));
  for (const double s : {0.5, 1.0, 2.0}) {
    const double grown = sphere_area_inverse(n, steiner_area(q, s)) - s;
    out.push_back(make_verdict("T51i", "parallel_area_radius_growth",
                               with(base, {{"s", s}}), grown, area_radius,
                               Relation::greater_equal, tol));
  }
  return out;
}

}  // namespace hycap
