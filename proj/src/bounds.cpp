#include "hycap/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hycap/errors.hpp"

namespace hycap {
namespace {

// Ball data reproduces the Alexandrov-Fenchel bound only up to rounding.
constexpr double kAfSlack = 1e-10;

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " must be finite and > 0, got " << value;
    fail(ErrorKind::validation, msg.str());
  }
}

std::vector<double> geometric_breakpoints(double a, double b, double width) {
  std::vector<double> points{a};
  for (double offset = width; a + offset < b; offset *= 2.0) {
    points.push_back(a + offset);
  }
  points.push_back(b);
  return points;
}

}  // namespace

QuermassData::QuermassData(int n, double area,
                           std::vector<double> curvature_integrals)
    : n_(n), area_(area), curvature_integrals_(std::move(curvature_integrals)) {
  if (n_ < 1) fail(ErrorKind::validation, "quermass data needs n >= 1");
  require_positive(area_, "area");
  if (curvature_integrals_.size() != static_cast<std::size_t>(n_)) {
    fail(ErrorKind::validation,
         "expected " + std::to_string(n_) + " curvature integrals, got " +
             std::to_string(curvature_integrals_.size()));
  }
  for (int k = 1; k <= n_; ++k) {
    const double value = curvature_integrals_[k - 1];
    require_positive(value, "curvature integral");
    const double floor = af_lower_bound(n_, k, area_);
    if (value < floor * (1.0 - kAfSlack)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "P_" << k << " = " << value
          << " violates the Alexandrov-Fenchel lower bound " << floor;
      fail(ErrorKind::validation, msg.str());
    }
  }
}

QuermassData QuermassData::ball(int n, double r) {
  validate_dimension(n);
  if (!(r > 0.0)) fail(ErrorKind::domain, "ball radius must be > 0");
  const double sigma = sphere_area_const(n);
  std::vector<double> integrals;
  integrals.reserve(n);
  for (int k = 1; k <= n; ++k) {
    integrals.push_back(sigma * std::pow(std::sinh(r), n - k) *
                        std::pow(std::cosh(r), k));
  }
  return QuermassData(n, sphere_area(n, r), std::move(integrals));
}

QuermassData QuermassData::inflated(double factor) const {
  if (!(factor >= 1.0)) {
    fail(ErrorKind::domain, "inflation factor must be >= 1");
  }
  std::vector<double> scaled(curvature_integrals_);
  for (auto& value : scaled) value *= factor;
  return QuermassData(n_, area_, std::move(scaled));
}

double QuermassData::P(int k) const {
  if (k < 0 || k > n_) fail(ErrorKind::domain, "P_k index out of range");
  return k == 0 ? area_ : curvature_integrals_[k - 1];
}

double mazya_lower(const Params& params, double vol_K, double vol_O,
                   MazyaRoute route, double tol) {
  validate(params);
  if (!(vol_K > 0.0)) fail(ErrorKind::domain, "inner volume must be > 0");
  if (!(vol_K < vol_O)) {
    fail(ErrorKind::degenerate, "inner volume must be below outer volume");
  }
  const int n = params.n;
  const double p = params.p;
  const double r_K = ball_volume_inverse(n, vol_K);
  if (route == MazyaRoute::substituted) {
    const double r_O = std::isinf(vol_O) ? kInfinity : ball_volume_inverse(n, vol_O);
    return ring_capacity(RingCondenser(params, r_K, r_O), tol);
  }
  if (std::isinf(vol_O)) {
    fail(ErrorKind::domain, "volume-variable route needs a finite outer volume");
  }

  // Isoperimetric profile I(s) = f(F^{-1}(s)), scaled by its value at vol_K.
  const double e = p / (1.0 - p);
  const double log_ref = log_sphere_area(n, r_K);
  auto integrand = [n, e, log_ref](double s) {
    const double radius = ball_volume_inverse(n, s);
    return std::exp(e * (log_sphere_area(n, radius) - log_ref));
  };
  // d/ds log I = n coth(r) / f(r) sets the initial e-folding width.
  const double decay = -e * n / std::tanh(r_K) / std::exp(log_ref);
  const auto points = geometric_breakpoints(vol_K, vol_O, 8.0 / decay);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    total += quadrature::integrate(integrand, points[i], points[i + 1], tol).value;
  }
  const double log_integral = e * log_ref + std::log(total);
  return std::exp((1.0 - p) * log_integral);
}

double steiner_area(const QuermassData& q, double s) {
  if (!(s >= 0.0)) fail(ErrorKind::domain, "parallel distance must be >= 0");
  const int n = q.n();
  const double sh = std::sinh(s);
  const double ch = std::cosh(s);
  double total = 0.0;
  for (int k = 0; k <= n; ++k) {
    total += binomial(n, k) * std::pow(sh, k) * std::pow(ch, n - k) * q.P(k);
  }
  return total;
}

double af_lower_bound(int n, int k, double area) {
  validate_dimension(n);
  if (k < 1 || k > n) fail(ErrorKind::domain, "AF index k must lie in 1..n");
  if (!(area > 0.0)) fail(ErrorKind::domain, "area must be > 0");
  const double sigma = sphere_area_const(n);
  const double ratio = area / sigma;
  const double inner = std::pow(ratio, 2.0 / k) +
                       std::pow(ratio, 2.0 * (n - k) / (static_cast<double>(k) * n));
  return sigma * std::pow(inner, 0.5 * k);
}

double area_growth_lower(int n, double area, double s) {
  if (!(s >= 0.0)) fail(ErrorKind::domain, "parallel distance must be >= 0");
  if (s == 0.0) return area;
  return sphere_area(n, s + sphere_area_inverse(n, area));
}

double polya_upper(const Params& params, const AreaFunction& area_fn,
                   double tol) {
  validate(params);
  const double area0 = area_fn(0.0);
  if (!(area0 > 0.0)) fail(ErrorKind::domain, "area function must be positive");
  const double e = 1.0 / (1.0 - params.p);
  const double log_ref = std::log(area0);
  auto integrand = [&area_fn, e, log_ref](double s) {
    const double area = area_fn(s);
    if (!(area > 0.0)) fail(ErrorKind::divergence, "area function vanished");
    return std::exp(e * (std::log(area) - log_ref));
  };
  const double lambda = radial::tail_decay_rate(params);
  const double h = 1e-6;
  const double slope = (std::log(area_fn(h)) - log_ref) / h;
  const double decay = std::max(lambda, -e * slope);
  constexpr double kNearZone = 3.0;
  const auto points = geometric_breakpoints(0.0, kNearZone, 8.0 / decay);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    total += quadrature::integrate(integrand, points[i], points[i + 1], tol).value;
  }
  total += quadrature::integrate_to_infinity(integrand, kNearZone, lambda, tol).value;
  return std::exp((1.0 - params.p) * (e * log_ref + std::log(total)));
}

double polya_upper(const Params& params, const QuermassData& q, double tol) {
  if (q.n() != params.n) {
    fail(ErrorKind::validation, "quermass data dimension differs from n");
  }
  return polya_upper(
      params, [&q](double s) { return steiner_area(q, s); }, tol);
}

double rv_upper_capacity(const Params& params, double rv, double tol) {
  validate(params);
  if (!(rv >= 1.0)) fail(ErrorKind::domain, "relative volume must be >= 1");
  const double radius = std::log(rv) / params.n;
  if (radius == 0.0) return point_capacity(params, kInfinity, tol);
  return ball_capacity(params, radius, tol);
}

DiameterBound diameter_harmonic_radius_bound(double d) {
  if (!(d > 0.0)) fail(ErrorKind::domain, "diameter must be > 0");
  DiameterBound out{};
  out.linear_bound = 0.5 * d + std::numbers::ln2;
  if (d <= 1.0) {
    // cosh d / cosh(d/2) - 1 = 2 sinh(3d/4) sinh(d/4) / cosh(d/2)
    const double x =
        2.0 * std::sinh(0.75 * d) * std::sinh(0.25 * d) / std::cosh(0.5 * d);
    out.r_of_d = std::log1p(x + std::sqrt(x * (x + 2.0)));
    out.excess = out.r_of_d - 0.5 * d;
  } else {
    // With y = cosh d / cosh(d/2): e^{-d/2} y = (1 + e^{-2d}) / (1 + e^{-d}).
    const double decay = std::exp(-d);
    const double scaled = (1.0 + decay * decay) / (1.0 + decay);
    out.excess = std::log(scaled + std::sqrt(scaled * scaled - decay));
    out.r_of_d = 0.5 * d + out.excess;
  }
  return out;
}

}  // namespace hycap
