#pragma once

#include "hycap/geometry.hpp"

// Building blocks shared by the capacity and potential modules: integrals of
// the radial kernel g(s) = (sigma_n sinh^n s)^{1/(1-p)} kept in log space so
// that p close to 1 or large radii neither underflow nor overflow.
namespace hycap::radial {

struct LogIntegral {
  double log_value = 0.0;
  double rel_error = 0.0;
  std::size_t evaluations = 0;

  [[nodiscard]] double value() const;
};

/// Which quadrature route evaluates the tail integral over [a, inf).
enum class TailRoute {
  /// Panel-by-panel truncation with an analytic decay bound.
  truncated,
  /// Compactified variable v = exp(-(n/(p-1)) (s - a)) on (0, 1].
  compactified,
};

/// log g(s).
double log_kernel(const Params& params, double s);

/// log of the integral of g over [a, b] with 0 < a < b. b may be +inf.
LogIntegral log_integral(const Params& params, double a, double b, double tol,
                         TailRoute route = TailRoute::truncated);

/// log of the integral of g over [0, b]; needs p > n+1 so g is integrable
/// at the origin. b may be +inf.
LogIntegral log_integral_from_origin(const Params& params, double b,
                                     double tol);

/// Decay rate n/(p-1) of g at infinity.
double tail_decay_rate(const Params& params);

}  // namespace hycap::radial
