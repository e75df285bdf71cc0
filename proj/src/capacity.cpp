#include "hycap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hycap/errors.hpp"

namespace hycap {
namespace {

std::string describe(const Params& params) {
  std::ostringstream out;
  out.precision(17);
  out << "(n = " << params.n << ", p = " << params.p << ")";
  return out.str();
}

void require_polar(const Params& params, const char* what) {
  if (!points_are_polar(params)) {
    fail(ErrorKind::regime,
         std::string(what) + " needs p <= n+1 " + describe(params));
  }
}

void require_nonpolar(const Params& params, const char* what) {
  if (points_are_polar(params)) {
    fail(ErrorKind::regime,
         std::string(what) + " needs p > n+1 " + describe(params));
  }
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " must be > 0, got " << value;
    fail(ErrorKind::domain, msg.str());
  }
}

// x^{1/(1-p)} through logs.
double reciprocal_power(double x, double p) {
  return std::exp(std::log(x) / (1.0 - p));
}

}  // namespace

RingCondenser::RingCondenser(Params params, double r, double R)
    : params_(params), r_(r), R_(R) {
  validate(params_);
  require_positive(r_, "inner radius");
  if (!(r_ < R_)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "degenerate condenser: inner radius " << r_
        << " must be below outer radius " << R_;
    fail(ErrorKind::degenerate, msg.str());
  }
}

bool points_are_polar(const Params& params) {
  return params.p <= params.n + 1.0;
}

double ring_capacity(const RingCondenser& condenser, double tol) {
  const Params& params = condenser.params();
  const auto integral = radial::log_integral(
      params, condenser.inner(), condenser.outer(), tol);
  return std::exp((1.0 - params.p) * integral.log_value);
}

CapacityBounds ring_capacity_bounds(const RingCondenser& condenser,
                                    double tol) {
  const Params& params = condenser.params();
  const auto integral = radial::log_integral(
      params, condenser.inner(), condenser.outer(), tol);
  const double value = std::exp((1.0 - params.p) * integral.log_value);
  const double error = (params.p - 1.0) * integral.rel_error * value;
  CapacityBounds bounds;
  bounds.lower = std::max(0.0, value - error);
  bounds.upper = value + error;
  bounds.exact = value;
  bounds.method = {condenser.compact() ? "ball:kappa-power" : "ring:radial-quadrature"};
  bounds.quad_error = error;
  return bounds;
}

double log_kappa(const Params& params, double r, double tol,
                 radial::TailRoute route) {
  validate(params);
  require_positive(r, "radius");
  return radial::log_integral(params, r, kInfinity, tol, route).log_value;
}

double kappa(const Params& params, double r, double tol,
             radial::TailRoute route) {
  return std::exp(log_kappa(params, r, tol, route));
}

double kappa_inverse(const Params& params, double t, double tol) {
  validate(params);
  require_positive(t, "kappa value");
  const double log_t = std::log(t);
  if (!points_are_polar(params)) {
    const double ceiling =
        radial::log_integral_from_origin(params, kInfinity, tol).log_value;
    if (log_t >= ceiling) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "kappa value " << t << " is not below kappa(0+) = "
          << std::exp(ceiling) << " " << describe(params);
      fail(ErrorKind::range, msg.str());
    }
  }
  auto residual = [&](double r) { return log_kappa(params, r, tol) - log_t; };
  double hi = 1.0;
  while (residual(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e6) fail(ErrorKind::range, "kappa value too small to invert");
  }
  double lo = 0.5 * hi;
  while (residual(lo) < 0.0) {
    hi = lo;
    lo *= 0.5;
    if (lo < 1e-300) fail(ErrorKind::range, "kappa value too large to invert");
  }
  return quadrature::find_root_monotone(residual, lo, hi, 1e-13);
}

double ball_capacity(const Params& params, double r, double tol,
                     radial::TailRoute route) {
  return std::exp((1.0 - params.p) * log_kappa(params, r, tol, route));
}

double cap1_ball(int n, double r) { return sphere_area(n, r); }

double point_capacity(const Params& params, double R, double tol) {
  validate(params);
  require_positive(R, "outer radius");
  if (points_are_polar(params)) return 0.0;
  const auto integral = radial::log_integral_from_origin(params, R, tol);
  return std::exp((1.0 - params.p) * integral.log_value);
}

double green_diag_from_point_capacity(const Params& params, double s_p) {
  validate(params);
  require_nonpolar(params, "Green-function diagonal");
  require_positive(s_p, "point capacity");
  return reciprocal_power(s_p, params.p);
}

TauRho tau_rho_ball(const Params& params, double r, double tol) {
  validate(params);
  require_polar(params, "harmonic radius");
  const double tau = kappa(params, r, tol);
  return TauRho{tau, kappa_inverse(params, tau, tol)};
}

HarmonicRadiusEstimate harmonic_radius_from_capacity_curve(
    const Params& params, std::span<const CapacitySample> samples,
    double tol) {
  validate(params);
  require_polar(params, "harmonic radius");
  if (samples.empty()) fail(ErrorKind::domain, "no capacity samples given");

  std::vector<double> gaps;
  gaps.reserve(samples.size());
  double previous_r = kInfinity;
  for (const auto& sample : samples) {
    require_positive(sample.r, "sample radius");
    require_positive(sample.capacity, "sample capacity");
    if (!(sample.r < previous_r)) {
      fail(ErrorKind::domain, "sample radii must decrease strictly");
    }
    previous_r = sample.r;
    const double k = kappa(params, sample.r, tol);
    const double reduced = reciprocal_power(sample.capacity, params.p);
    const double gap = k - reduced;
    if (!(gap > 0.0)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "kappa(r) - cap^{1/(1-p)} = " << gap << " is not positive at r = "
          << sample.r;
      fail(ErrorKind::data_inconsistency, msg.str());
    }
    if (!gaps.empty()) {
      const double noise = 100.0 * tol * (k + reduced) + 1e-15 * k;
      if (gap > gaps.back() + noise) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "capacity curve is not monotone: gap rose from " << gaps.back()
            << " to " << gap << " at r = " << sample.r;
        fail(ErrorKind::data_inconsistency, msg.str());
      }
    }
    gaps.push_back(gap);
  }

  HarmonicRadiusEstimate estimate;
  estimate.samples_used = std::min<std::size_t>(samples.size(), 3);
  double tau = gaps.back();
  if (gaps.size() < 3) {
    estimate.low_confidence = true;
  } else {
    const std::size_t m = gaps.size();
    const double d1 = gaps[m - 2] - gaps[m - 3];
    const double d2 = gaps[m - 1] - gaps[m - 2];
    const double noise = 1e3 * std::numeric_limits<double>::epsilon() *
                         kappa(params, samples.back().r, tol);
    if (std::abs(d2) > noise) {
      const double denom = d2 - d1;
      const double candidate = gaps[m - 1] - d2 * d2 / denom;
      if (denom != 0.0 && candidate > 0.0 && candidate <= gaps[m - 1]) {
        tau = candidate;
      } else {
        estimate.low_confidence = true;
      }
    }
  }
  estimate.tau = tau;
  estimate.rho = kappa_inverse(params, tau, tol);
  return estimate;
}

double series_combination(double c1, double c2, double p) {
  require_positive(c1, "first capacity");
  require_positive(c2, "second capacity");
  if (!(p > 1.0)) fail(ErrorKind::domain, "series combination needs p > 1");
  // log-sum-exp keeps exponents 1/(1-p) of large magnitude finite.
  const double a = std::log(c1) / (1.0 - p);
  const double b = std::log(c2) / (1.0 - p);
  const double top = std::max(a, b);
  const double log_sum = top + std::log(std::exp(a - top) + std::exp(b - top));
  return std::exp((1.0 - p) * log_sum);
}

double hansen_bound(const Params& params, double r_K, double r_U, double r_O,
                    double cap_KU, double tol) {
  validate(params);
  require_positive(r_K, "volume radius r_K");
  if (!(r_K < r_U && r_U < r_O)) {
    fail(ErrorKind::domain, "volume radii must satisfy r_K < r_U < r_O");
  }
  require_positive(cap_KU, "cap_p(K, U)");
  const double p = params.p;
  const double c = ring_capacity(RingCondenser(params, r_K, r_O), tol);
  const double c1 = ring_capacity(RingCondenser(params, r_K, r_U), tol);
  if (cap_KU < c1 * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "cap_p(K, U) = " << cap_KU
        << " is below the ring capacity of equal volumes " << c1;
    fail(ErrorKind::inconsistent_input, msg.str());
  }
  const double gap =
      std::max(0.0, reciprocal_power(c1, p) - reciprocal_power(cap_KU, p));
  return c + (p - 1.0) * std::pow(c, p / (p - 1.0)) * gap;
}

RatioExcess capacity_ratio_excess(const Params& params, double r, double R,
                                  double u_scale, double o_scale, double tol) {
  validate(params);
  require_nonpolar(params, "point-capacity ratio inequality");
  require_positive(r, "inner radius");
  if (!(r < R)) fail(ErrorKind::degenerate, "need r < R");
  require_positive(u_scale, "u_scale");
  require_positive(o_scale, "o_scale");
  const double p = params.p;
  const double s_outer_ball = point_capacity(params, R, tol);
  const double s_inner_ball = point_capacity(params, r, tol);
  const double s_O = o_scale * s_outer_ball;
  const double s_U = u_scale * s_inner_ball;
  const double q = 1.0 / (p - 1.0);
  RatioExcess out{};
  out.lhs = s_O / s_outer_ball - 1.0;
  out.rhs = (p - 1.0) * std::pow(s_outer_ball / s_inner_ball, q) *
            (1.0 - std::pow(s_inner_ball / s_U, q));
  return out;
}

double kappa_small_r_asymptotic(const Params& params, double r) {
  validate(params);
  require_polar(params, "small-r kappa asymptotic");
  require_positive(r, "radius");
  const int n = params.n;
  const double p = params.p;
  const double prefactor = reciprocal_power(sphere_area_const(n), p);
  if (p == n + 1.0) return prefactor * std::abs(std::log(r));
  return prefactor * ((p - 1.0) / (n + 1.0 - p)) *
         std::pow(r, (n + 1.0 - p) / (1.0 - p));
}

double ball_capacity_large_r_asymptotic(const Params& params, double r) {
  validate(params);
  const int n = params.n;
  const double p = params.p;
  return std::exp(-n * std::numbers::ln2 + (p - 1.0) * std::log(n / (p - 1.0)) +
                  std::log(sphere_area_const(n)) + n * r);
}

double trace_constant(const Params& params) {
  validate(params);
  const int n = params.n;
  const double p = params.p;
  return reciprocal_power(sphere_area_const(n), p) *
         std::exp(n * std::numbers::ln2 / (p - 1.0)) * (p - 1.0) / n;
}

double boundary_trace_uhat_ball(const Params& params, double r, double tol,
                                radial::TailRoute route) {
  const double log_ratio =
      std::log(trace_constant(params)) - log_kappa(params, r, tol, route);
  return std::exp((params.p - 1.0) / params.n * log_ratio);
}

double boundary_trace_at(const Params& params, double r, double t,
                         double tol) {
  if (!(t >= r)) fail(ErrorKind::domain, "trace probe needs t >= r");
  const double log_ratio = log_kappa(params, t, tol) - log_kappa(params, r, tol);
  return std::exp(t + (params.p - 1.0) / params.n * log_ratio);
}

double capacity_from_boundary_metric(const Params& params, double uhat) {
  validate(params);
  require_positive(uhat, "boundary trace");
  const int n = params.n;
  const double p = params.p;
  return std::pow(n / (p - 1.0), p - 1.0) * std::pow(0.5 * uhat, n) *
         sphere_area_const(n);
}

}  // namespace hycap
