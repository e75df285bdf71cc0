#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hycap/geometry.hpp"
#include "hycap/radial.hpp"

namespace hycap {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Concentric condenser (closed ball of radius r, open ball of radius R).
/// R = +inf stands for the compact ball alone.
class RingCondenser {
 public:
  RingCondenser(Params params, double r, double R);

  [[nodiscard]] const Params& params() const noexcept { return params_; }
  [[nodiscard]] double inner() const noexcept { return r_; }
  [[nodiscard]] double outer() const noexcept { return R_; }
  [[nodiscard]] bool compact() const noexcept { return R_ == kInfinity; }

 private:
  Params params_;
  double r_;
  double R_;
};

struct CapacityBounds {
  double lower = 0.0;
  double upper = kInfinity;
  std::optional<double> exact;
  std::vector<std::string> method;
  double quad_error = 0.0;

  friend bool operator==(const CapacityBounds&, const CapacityBounds&) = default;
};

/// True when p <= n+1, the regime in which points carry zero capacity.
bool points_are_polar(const Params& params);

// --- ring and ball capacities -------------------------------------------

double ring_capacity(const RingCondenser& condenser,
                     double tol = quadrature::kDefaultTol);

/// Exact value with its quadrature envelope, for reports.
CapacityBounds ring_capacity_bounds(const RingCondenser& condenser,
                                    double tol = quadrature::kDefaultTol);

/// kappa_p(r): the integral of (sigma_n sinh^n s)^{1/(1-p)} over [r, inf).
double kappa(const Params& params, double r,
             double tol = quadrature::kDefaultTol,
             radial::TailRoute route = radial::TailRoute::truncated);
double log_kappa(const Params& params, double r,
                 double tol = quadrature::kDefaultTol,
                 radial::TailRoute route = radial::TailRoute::truncated);

double kappa_inverse(const Params& params, double t,
                     double tol = quadrature::kDefaultTol);

/// cap_p of the closed ball of radius r, kappa_p(r)^{1-p}.
double ball_capacity(const Params& params, double r,
                     double tol = quadrature::kDefaultTol,
                     radial::TailRoute route = radial::TailRoute::truncated);

/// cap_1 of a ball: the area sigma_n sinh^n r of its boundary sphere.
double cap1_ball(int n, double r);

/// s_p(x, B_x(R)). Zero for p <= n+1; R = inf gives the universal lower
/// constant for p > n+1.
double point_capacity(const Params& params, double R = kInfinity,
                      double tol = quadrature::kDefaultTol);

/// G_p(x,x) = s_p^{1/(1-p)}, valid for p > n+1.
double green_diag_from_point_capacity(const Params& params, double s_p);

struct TauRho {
  double tau;
  double rho;
};

/// tau_p and rho_p for a ball centred at the pole; p <= n+1 only.
TauRho tau_rho_ball(const Params& params, double r,
                    double tol = quadrature::kDefaultTol);

struct CapacitySample {
  double r;
  double capacity;
};

struct HarmonicRadiusEstimate {
  double tau = 0.0;
  double rho = 0.0;
  bool low_confidence = false;
  std::size_t samples_used = 0;
};

/// Estimates tau_p(x, O) from capacities cap_p(B_x(r), O) sampled at
/// radii decreasing toward 0, then maps it through kappa^{-1}. The
/// differences kappa(r) - cap^{1/(1-p)} must be non-increasing along the
/// samples; the last three are Aitken-extrapolated to r -> 0.
HarmonicRadiusEstimate harmonic_radius_from_capacity_curve(
    const Params& params, std::span<const CapacitySample> samples,
    double tol = quadrature::kDefaultTol);

/// Capacity of two concentric condensers glued in series.
double series_combination(double c1, double c2, double p);

/// Lower bound for cap_p(K, O) from volume radii r_K < r_U < r_O and the
/// inner capacity cap_p(K, U).
double hansen_bound(const Params& params, double r_K, double r_U, double r_O,
                    double cap_KU, double tol = quadrature::kDefaultTol);

struct RatioExcess {
  double lhs;
  double rhs;
};

/// Both sides of the point-capacity ratio inequality for O = B(R),
/// U = B(r), p > n+1. The scales replace s_p(U) by u_scale * s_p(B(r)) and
/// s_p(O) by o_scale * s_p(B(R)) to probe off-equality configurations.
RatioExcess capacity_ratio_excess(const Params& params, double r, double R,
                                  double u_scale = 1.0, double o_scale = 1.0,
                                  double tol = quadrature::kDefaultTol);

/// Leading small-r behaviour of kappa_p. Uses |ln r| at p = n+1.
double kappa_small_r_asymptotic(const Params& params, double r);

/// 2^{-n} (n/(p-1))^{p-1} sigma_n e^{n r}.
double ball_capacity_large_r_asymptotic(const Params& params, double r);

/// C_{n,p} with kappa_p(t) ~ C_{n,p} e^{-n t/(p-1)}.
double trace_constant(const Params& params);

/// Boundary value of e^t u^{(p-1)/n} for the capacitary potential of the
/// ball of radius r; constant over the sphere at infinity.
double boundary_trace_uhat_ball(const Params& params, double r,
                                double tol = quadrature::kDefaultTol,
                                radial::TailRoute route =
                                    radial::TailRoute::truncated);

/// e^t (kappa(t)/kappa(r))^{(p-1)/n}, whose t -> inf limit is uhat.
double boundary_trace_at(const Params& params, double r, double t,
                         double tol = quadrature::kDefaultTol);

/// (n/(p-1))^{p-1} (uhat/2)^n sigma_n.
double capacity_from_boundary_metric(const Params& params, double uhat);

}  // namespace hycap
