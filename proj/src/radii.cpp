#include "hycap/radii.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hycap/errors.hpp"

namespace hycap {

std::string_view to_string(RadiusKind kind) {
  switch (kind) {
    case RadiusKind::rvol: return "Rvol";
    case RadiusKind::rcap: return "Rcap";
    case RadiusKind::relative_volume: return "RV";
    case RadiusKind::relative_capacity: return "RC";
  }
  return "unknown";
}

RadiusReport rvol(int n, double volume) {
  const double radius = ball_volume_inverse(n, volume);
  return RadiusReport{RadiusKind::rvol, radius, "volume-inverse",
                      std::abs(ball_volume(n, radius) / volume - 1.0)};
}

RadiusReport rcap(const Params& params, double capacity, double tol) {
  validate(params);
  if (!(capacity > 0.0)) fail(ErrorKind::domain, "capacity must be > 0");
  if (!points_are_polar(params)) {
    const double floor = point_capacity(params, kInfinity, tol);
    if (!(capacity > floor)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "capacity " << capacity
          << " is not above the universal point-capacity constant " << floor
          << " that every ball exceeds when p > n+1";
      fail(ErrorKind::range, msg.str());
    }
  }
  const double log_cap = std::log(capacity);
  auto residual = [&](double r) {
    return (1.0 - params.p) * log_kappa(params, r, tol) - log_cap;
  };
  // Balls never exceed the large-r asymptote, so its inverse brackets from
  // below.
  const double log_prefactor =
      std::log(ball_capacity_large_r_asymptotic(params, 0.0));
  double lo = (log_cap - log_prefactor) / params.n;
  if (!(lo > 0.0) || residual(lo) > 0.0) {
    lo = 1.0;
    while (residual(lo) > 0.0) {
      lo *= 0.5;
      if (lo < 1e-300) fail(ErrorKind::range, "capacity too small to invert");
    }
  }
  double hi = lo + 1.0;
  while (residual(hi) < 0.0) hi = lo + 2.0 * (hi - lo);
  const double radius = quadrature::find_root_monotone(residual, lo, hi, 1e-14);
  return RadiusReport{RadiusKind::rcap, radius, "capacity-inverse",
                      std::abs(std::expm1(residual(radius)))};
}

double relative_volume_ball(int n, double r) {
  validate_dimension(n);
  if (!(r >= 0.0)) fail(ErrorKind::domain, "radius must be >= 0");
  return std::exp(n * r);
}

double relative_volume_ratio(int n, double r, double R) {
  if (!(R > 0.0) || !(r >= 0.0)) {
    fail(ErrorKind::domain, "relative volume ratio needs r >= 0 and R > 0");
  }
  return ball_volume(n, r + R) / ball_volume(n, R);
}

double relative_volume_quermass(const QuermassData& q) {
  const int n = q.n();
  double total = 0.0;
  double binomial = 1.0;
  for (int k = 0; k <= n; ++k) {
    total += binomial * q.P(k);
    binomial = binomial * (n - k) / (k + 1);
  }
  return total / sphere_area_const(n);
}

RelativeCapacity relative_pcapacity_ball(const Params& params, double r,
                                         double R_probe,
                                         std::array<double, 3> probes,
                                         double tol) {
  validate(params);
  if (!(r >= 0.0)) fail(ErrorKind::domain, "radius must be >= 0");
  if (!(R_probe >= 5.0)) fail(ErrorKind::domain, "R_probe must be >= 5");
  const double step = probes[1] - probes[0];
  if (!(step > 0.0) ||
      std::abs((probes[2] - probes[1]) - step) > 1e-12 * std::abs(step)) {
    fail(ErrorKind::domain, "extrapolation probes must be equally spaced");
  }
  auto ratio = [&](double R) {
    if (r == 0.0) return 1.0;
    return std::exp((1.0 - params.p) *
                    (log_kappa(params, r + R, tol) - log_kappa(params, R, tol)));
  };
  RelativeCapacity out{};
  out.ratio_at_probe = ratio(R_probe);
  const double q1 = ratio(probes[0]);
  const double q2 = ratio(probes[1]);
  const double q3 = ratio(probes[2]);
  const double d1 = q2 - q1;
  const double d2 = q3 - q2;
  out.extrapolated = q3;
  // Geometric corrections L a e^{-bR} make (q1, q2, q3) an Aitken-exact triple.
  const double noise = 1e3 * std::numeric_limits<double>::epsilon() * std::abs(q3);
  if (std::abs(d2) > noise && d2 != d1) {
    const double candidate = q3 - d2 * d2 / (d2 - d1);
    if (std::abs(candidate - q3) <= 10.0 * std::abs(d2)) out.extrapolated = candidate;
  }
  return out;
}

}  // namespace hycap
