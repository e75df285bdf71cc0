#include "hycap/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <sstream>

#include "hycap/errors.hpp"

namespace hycap {
namespace {

constexpr double kLargeArgument = 30.0;

void require_positive(double value, const char* what) {
  if (!(value > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " must be > 0, got " << value;
    fail(ErrorKind::domain, msg.str());
  }
}

// sinh(x) - x without cancellation for small x.
double sinh_minus_identity(double x) {
  if (std::abs(x) > 0.5) return std::sinh(x) - x;
  const double x2 = x * x;
  double term = x * x2 / 6.0;
  double sum = term;
  for (int k = 2; k < 30; ++k) {
    term *= x2 / ((2.0 * k) * (2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

void validate_dimension(int n) {
  if (n < 1) {
    fail(ErrorKind::domain,
         "dimension index n must be >= 1, got " + std::to_string(n));
  }
}

void validate(const Params& params, bool allow_p_one) {
  validate_dimension(params.n);
  const bool ok = allow_p_one ? params.p >= 1.0 : params.p > 1.0;
  if (!ok || !std::isfinite(params.p)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "capacity exponent p must be " << (allow_p_one ? ">= 1" : "> 1")
        << ", got " << params.p;
    fail(ErrorKind::domain, msg.str());
  }
}

double sphere_area_const(int n) {
  validate_dimension(n);
  const double half = 0.5 * (n + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double log_sinh(double s) {
  if (s > kLargeArgument) {
    return s - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * s));
  }
  return std::log(std::sinh(s));
}

double log_sphere_area(int n, double s) {
  require_positive(s, "radius");
  return std::log(sphere_area_const(n)) + n * log_sinh(s);
}

double sphere_area(int n, double s) {
  require_positive(s, "radius");
  if (s > kLargeArgument) return std::exp(log_sphere_area(n, s));
  return sphere_area_const(n) * std::pow(std::sinh(s), n);
}

double sphere_area_inverse(int n, double area) {
  require_positive(area, "area");
  return std::asinh(std::pow(area / sphere_area_const(n), 1.0 / n));
}

double ball_volume_closed_form(int n, double r) {
  require_positive(r, "radius");
  switch (n) {
    case 1: {
      // 2 pi (cosh r - 1) = 4 pi sinh^2(r/2)
      const double h = std::sinh(0.5 * r);
      return 4.0 * std::numbers::pi * h * h;
    }
    case 2:
      // 4 pi (sinh r cosh r - r) / 2 = pi (sinh 2r - 2r)
      return std::numbers::pi * sinh_minus_identity(2.0 * r);
    default:
      fail(ErrorKind::domain,
           "no closed-form ball volume for n = " + std::to_string(n));
  }
}

double ball_volume_quadrature(int n, double r, double tol) {
  validate_dimension(n);
  require_positive(r, "radius");
  // Scale by sinh^n(r) so the integrand stays in [0, 1] for any r.
  const double log_peak = n * log_sinh(r);
  auto integrand = [n, log_peak](double t) {
    if (t <= 0.0) return 0.0;
    return std::exp(n * log_sinh(t) - log_peak);
  };
  const auto scaled = quadrature::integrate(integrand, 0.0, r, tol);
  return sphere_area_const(n) * std::exp(log_peak) * scaled.value;
}

double ball_volume(int n, double r) {
  validate_dimension(n);
  if (n <= 2) return ball_volume_closed_form(n, r);
  return ball_volume_quadrature(n, r);
}

double ball_volume_inverse(int n, double volume, double rel_tol) {
  validate_dimension(n);
  require_positive(volume, "volume");
  const double sigma = sphere_area_const(n);
  // F(r) >= sigma r^{n+1}/(n+1), and F(r) >= sigma sinh^n(r-1) for r >= 1.
  double hi = std::pow((n + 1) * volume / sigma, 1.0 / (n + 1));
  hi = std::min(hi, 1.0 + std::asinh(std::pow(volume / sigma, 1.0 / n)));
  hi = std::max(hi, std::numeric_limits<double>::min());
  auto residual = [n, volume](double r) {
    if (r <= 0.0) return -1.0;
    return ball_volume(n, r) / volume - 1.0;
  };
  while (residual(hi) < 0.0) hi *= 1.5;
  return quadrature::find_root_monotone(residual, 0.0, hi, rel_tol);
}

PoincarePoint::PoincarePoint(std::vector<double> coordinates)
    : coordinates_(std::move(coordinates)), norm_squared_(0.0) {
  if (coordinates_.empty()) {
    fail(ErrorKind::domain, "Poincare point needs at least one coordinate");
  }
  for (const double c : coordinates_) norm_squared_ += c * c;
  if (!(norm_squared_ < 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Poincare point must lie strictly inside the unit ball, |x|^2 = "
        << norm_squared_;
    fail(ErrorKind::domain, msg.str());
  }
}

double poincare_distance(const PoincarePoint& x, const PoincarePoint& y) {
  const auto xs = x.coordinates();
  const auto ys = y.coordinates();
  if (xs.size() != ys.size()) {
    fail(ErrorKind::domain, "Poincare points have different dimensions");
  }
  double gap = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = xs[i] - ys[i];
    gap += d * d;
  }
  const double denom = (1.0 - x.norm_squared()) * (1.0 - y.norm_squared());
  return 2.0 * std::asinh(std::sqrt(gap / denom));
}

double side_from_cosine_rule(double b, double d, double angle_cos) {
  require_positive(b, "side b");
  require_positive(d, "side d");
  if (!(angle_cos >= -1.0 && angle_cos <= 1.0)) {
    fail(ErrorKind::domain, "angle cosine must lie in [-1, 1]");
  }
  // cosh a - 1 = 2 sinh^2((b-d)/2) + sinh b sinh d (1 - cos)
  const double h = std::sinh(0.5 * (b - d));
  const double excess =
      2.0 * h * h + std::sinh(b) * std::sinh(d) * (1.0 - angle_cos);
  if (!(excess >= 0.0)) {
    fail(ErrorKind::domain, "degenerate triangle: cosh a < 1");
  }
  return 2.0 * std::asinh(std::sqrt(0.5 * excess));
}

}  // namespace hycap
