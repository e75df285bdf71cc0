#include "hycap/radial.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "hycap/errors.hpp"

namespace hycap::radial {
namespace {

// Past this offset from the inner radius coth(s) is within 0.5% of 1, so
// the kernel decays at essentially its asymptotic rate.
constexpr double kNearZone = 3.0;

struct Accumulated {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;

  void add(const quadrature::IntegralResult& piece) {
    value += piece.value;
    error += piece.error_estimate;
    evaluations += piece.evaluations;
  }
};

double exponent(const Params& params) { return 1.0 / (1.0 - params.p); }

// Local e-folding rate of g at s: (n/(p-1)) coth(s).
double local_decay(const Params& params, double s) {
  return tail_decay_rate(params) / std::tanh(s);
}

// Breakpoints a, a+w, a+3w, a+7w, ... capped at b, so that the steep
// left end of g is resolved before panels widen.
std::vector<double> geometric_breakpoints(double a, double b, double width) {
  std::vector<double> points{a};
  double offset = width;
  while (a + offset < b) {
    points.push_back(a + offset);
    offset *= 2.0;
  }
  points.push_back(b);
  return points;
}

// Integral of g(s)/g(a) over [a, b], b finite, a > 0.
Accumulated scaled_finite(const Params& params, double a, double b,
                          double tol) {
  const double e = exponent(params);
  const double log_ref = log_sphere_area(params.n, a);
  auto integrand = [&params, e, log_ref](double s) {
    return std::exp(e * (log_sphere_area(params.n, s) - log_ref));
  };
  const double width = 8.0 / local_decay(params, a);
  const auto points = geometric_breakpoints(a, b, width);
  Accumulated total;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    total.add(quadrature::integrate(integrand, points[i], points[i + 1], tol));
  }
  return total;
}

Accumulated scaled_tail_truncated(const Params& params, double a, double tol) {
  const double e = exponent(params);
  const double log_ref = log_sphere_area(params.n, a);
  const double split = a + kNearZone;
  Accumulated total = scaled_finite(params, a, split, tol);
  auto integrand = [&params, e, log_ref](double s) {
    return std::exp(e * (log_sphere_area(params.n, s) - log_ref));
  };
  total.add(quadrature::integrate_to_infinity(integrand, split,
                                              tail_decay_rate(params), tol));
  return total;
}

// v = exp(-lambda (s - a)) maps [a, inf) onto (0, 1]; ds = -dv / (lambda v).
// The kernel then behaves like v near 0, so the mapped integrand is bounded.
Accumulated scaled_tail_compactified(const Params& params, double a,
                                     double tol) {
  const double e = exponent(params);
  const double lambda = tail_decay_rate(params);
  const double log_ref = log_sphere_area(params.n, a);
  auto integrand = [&params, e, lambda, a, log_ref](double v) {
    const double log_v = std::log(v);
    const double s = a - log_v / lambda;
    return std::exp(e * (log_sphere_area(params.n, s) - log_ref) - log_v) /
           lambda;
  };
  // Near v = 1 the kernel e-folds over a v-width of about tanh(a).
  std::vector<double> points{0.0};
  std::vector<double> upper;
  for (double w = std::tanh(a); w < 0.5; w *= 2.0) upper.push_back(1.0 - w);
  points.push_back(0.5);
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) points.push_back(*it);
  points.push_back(1.0);
  Accumulated total;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i + 1] > points[i]) {
      total.add(quadrature::integrate(integrand, points[i], points[i + 1], tol));
    }
  }
  return total;
}

LogIntegral to_log(const Accumulated& total, double log_scale) {
  if (!(total.value > 0.0)) {
    fail(ErrorKind::evaluation, "radial integral underflowed to zero");
  }
  return LogIntegral{log_scale + std::log(total.value),
                     total.error / total.value, total.evaluations};
}

}  // namespace

double LogIntegral::value() const { return std::exp(log_value); }

double tail_decay_rate(const Params& params) {
  return params.n / (params.p - 1.0);
}

double log_kernel(const Params& params, double s) {
  return exponent(params) * log_sphere_area(params.n, s);
}

LogIntegral log_integral(const Params& params, double a, double b, double tol,
                         TailRoute route) {
  validate(params);
  if (!(a > 0.0) || !(a < b)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "radial integral needs 0 < a < b, got a = " << a << ", b = " << b;
    fail(ErrorKind::degenerate, msg.str());
  }
  const double log_scale = log_kernel(params, a);
  if (std::isinf(b)) {
    const Accumulated total = route == TailRoute::truncated
                                  ? scaled_tail_truncated(params, a, tol)
                                  : scaled_tail_compactified(params, a, tol);
    return to_log(total, log_scale);
  }
  return to_log(scaled_finite(params, a, b, tol), log_scale);
}

LogIntegral log_integral_from_origin(const Params& params, double b,
                                     double tol) {
  validate(params);
  if (!(params.p > params.n + 1.0)) {
    fail(ErrorKind::divergence,
         "kernel is not integrable at the origin for p <= n+1");
  }
  if (!(b > 0.0)) fail(ErrorKind::domain, "outer radius must be > 0");
  const double e = exponent(params);
  auto absolute = [&params, e](double s) {
    return std::exp(e * log_sphere_area(params.n, s));
  };
  const double alpha = params.n * e;
  const double near = std::min(b, 1.0);
  Accumulated total;
  total.add(quadrature::integrate_singular_left(absolute, 0.0, near, alpha, tol));
  if (b > near) {
    const LogIntegral rest = log_integral(params, near, b, tol);
    const double rest_value = rest.value();
    total.value += rest_value;
    total.error += rest.rel_error * rest_value;
    total.evaluations += rest.evaluations;
  }
  return to_log(total, 0.0);
}

}  // namespace hycap::radial
