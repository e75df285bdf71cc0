#pragma once

#include <cmath>

#include "hycap/capacity.hpp"

namespace hycap {

struct PotentialSample {
  double value;
  /// Set when the probe lay outside [r, R] and the constant extension was used.
  bool clamped;
};

/// Capacitary potential of a concentric ring (or, with R = inf, of a
/// compact ball): v(t) = int_t^R g / int_r^R g with g = f^{1/(1-p)}.
/// Immutable once built.
class RadialPotential {
 public:
  explicit RadialPotential(RingCondenser condenser,
                           double tol = quadrature::kDefaultTol);

  [[nodiscard]] const RingCondenser& condenser() const noexcept {
    return condenser_;
  }
  /// int_r^R g(s) ds; kappa_p(r) when R = inf.
  [[nodiscard]] double normalizer() const noexcept {
    return std::exp(log_normalizer_);
  }
  [[nodiscard]] double log_normalizer() const noexcept { return log_normalizer_; }

  [[nodiscard]] PotentialSample value(double t) const;
  [[nodiscard]] double gradient_norm(double t) const;
  /// f(t) |grad v|^{p-1}, the flux through the level sphere at distance t.
  [[nodiscard]] double flux_integral(double t) const;
  /// Geodesic radius of the sphere {v = level}.
  [[nodiscard]] double level_radius(double level) const;
  /// |grad ln v|(t), defined for the compact-ball potential only.
  [[nodiscard]] double log_gradient_norm(double t) const;

 private:
  RingCondenser condenser_;
  double tol_;
  double log_normalizer_;
};

}  // namespace hycap
