#include "hycap/potentials.hpp"

#include <cmath>
#include <sstream>

#include "hycap/errors.hpp"

namespace hycap {
namespace {

// The compact-ball normalizer uses the compactified tail route, which keeps
// it independent of capacity::kappa's truncated route.
double compute_log_normalizer(const RingCondenser& c, double tol) {
  const auto route = c.compact() ? radial::TailRoute::compactified
                                 : radial::TailRoute::truncated;
  return radial::log_integral(c.params(), c.inner(), c.outer(), tol, route)
      .log_value;
}

}  // namespace

RadialPotential::RadialPotential(RingCondenser condenser, double tol)
    : condenser_(condenser),
      tol_(tol),
      log_normalizer_(compute_log_normalizer(condenser_, tol)) {}

PotentialSample RadialPotential::value(double t) const {
  const double r = condenser_.inner();
  const double R = condenser_.outer();
  if (t <= r) return {1.0, t < r};
  if (t >= R) return {0.0, t > R};
  const double log_num =
      radial::log_integral(condenser_.params(), t, R, tol_).log_value;
  return {std::exp(log_num - log_normalizer_), false};
}

double RadialPotential::gradient_norm(double t) const {
  if (!(t > condenser_.inner() && t < condenser_.outer())) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "gradient probe t = " << t << " must lie strictly between "
        << condenser_.inner() << " and " << condenser_.outer();
    fail(ErrorKind::domain, msg.str());
  }
  return std::exp(radial::log_kernel(condenser_.params(), t) - log_normalizer_);
}

double RadialPotential::flux_integral(double t) const {
  const double p = condenser_.params().p;
  const double log_grad =
      std::log(gradient_norm(t));
  return std::exp(log_sphere_area(condenser_.params().n, t) +
                  (p - 1.0) * log_grad);
}

double RadialPotential::level_radius(double level) const {
  if (!(level > 0.0 && level < 1.0)) {
    fail(ErrorKind::domain, "level must lie in (0, 1)");
  }
  const double r = condenser_.inner();
  double hi = condenser_.outer();
  if (condenser_.compact()) {
    hi = r + 1.0;
    while (value(hi).value > level) hi = r + 2.0 * (hi - r);
  }
  auto residual = [this, level](double t) { return value(t).value - level; };
  return quadrature::find_root_monotone(residual, r, hi, 1e-15);
}

double RadialPotential::log_gradient_norm(double t) const {
  if (!condenser_.compact()) {
    fail(ErrorKind::wrong_condenser,
         "log-gradient bound applies to the compact-ball potential (R = inf)");
  }
  if (!(t >= condenser_.inner())) {
    fail(ErrorKind::domain, "log-gradient probe must satisfy t >= r");
  }
  // grad ln v = g(t) / kappa(t); the r-dependence cancels.
  const auto tail = radial::log_integral(condenser_.params(), t, kInfinity, tol_);
  return std::exp(radial::log_kernel(condenser_.params(), t) - tail.log_value);
}

}  // namespace hycap
