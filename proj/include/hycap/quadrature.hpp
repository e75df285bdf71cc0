#pragma once

#include <cstddef>
#include <functional>

namespace hycap::quadrature {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::size_t kMaxEvaluations = 1'000'000;

using Integrand = std::function<double(double)>;

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (G10/K21) integration on a finite
/// interval. Converges when the summed panel error drops below
/// max(tol*|value|, roundoff of the L1 norm). Throws
/// ErrorKind::evaluation on a non-finite sample and AccuracyError when the
/// evaluation budget runs out first.
IntegralResult integrate(const Integrand& f, double a, double b,
                         double tol = kDefaultTol,
                         std::size_t max_evaluations = kMaxEvaluations);

/// Integrand behaving like (s-a)^alpha near the left end. The substitution
/// s = a + u^(1/(1+alpha)) removes the power singularity before handing off
/// to integrate(). alpha <= -1 is a divergence error.
IntegralResult integrate_singular_left(const Integrand& f, double a, double b,
                                       double alpha, double tol = kDefaultTol);

/// Integral over [a, inf) of an integrand with |f(s)| <= M exp(-decay_rate s).
/// The range is consumed in panels of length 8/decay_rate until the
/// analytic tail bound |f(T)|/decay_rate falls under tol*|value|; the tail
/// bound is folded into error_estimate. A sampled envelope
/// |f(T)| exp(decay_rate T) that keeps growing raises a divergence error.
IntegralResult integrate_to_infinity(const Integrand& f, double a,
                                     double decay_rate,
                                     double tol = kDefaultTol);

/// Root of a strictly monotone function on [lo, hi]. Needs a sign change.
/// Stops once |f(x)| <= tol or the bracket has shrunk to a few ulps.
double find_root_monotone(const std::function<double(double)>& f, double lo,
                          double hi, double tol = 1e-14);

/// Records the largest relative quadrature error estimate produced on the
/// current thread while alive. Nested audits each see every integral.
class ErrorAudit {
 public:
  ErrorAudit();
  ~ErrorAudit();
  ErrorAudit(const ErrorAudit&) = delete;
  ErrorAudit& operator=(const ErrorAudit&) = delete;

  [[nodiscard]] double max_relative_error() const noexcept { return max_; }
  [[nodiscard]] std::size_t integrals() const noexcept { return count_; }
  void record(double relative_error) noexcept;

 private:
  ErrorAudit* parent_;
  double max_ = 0.0;
  std::size_t count_ = 0;
};

}  // namespace hycap::quadrature
