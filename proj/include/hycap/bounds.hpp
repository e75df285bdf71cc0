#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hycap/capacity.hpp"

namespace hycap {

/// Boundary area and curvature integrals P_k = int p_k dsigma (k = 1..n) of
/// a horospherically convex body. Construction rejects data that violates
/// the hyperbolic Alexandrov-Fenchel lower bounds.
class QuermassData {
 public:
  QuermassData(int n, double area, std::vector<double> curvature_integrals);

  /// Data of the geodesic ball of radius r: P_k = sigma_n sinh^{n-k} r cosh^k r.
  static QuermassData ball(int n, double r);

  /// Copy with every P_k (k >= 1) multiplied by factor >= 1.
  [[nodiscard]] QuermassData inflated(double factor) const;

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] double area() const noexcept { return area_; }
  [[nodiscard]] std::span<const double> curvature_integrals() const noexcept {
    return curvature_integrals_;
  }
  /// P_k with P_0 = area.
  [[nodiscard]] double P(int k) const;

  friend bool operator==(const QuermassData&, const QuermassData&) = default;

 private:
  int n_;
  double area_;
  std::vector<double> curvature_integrals_;
};

enum class MazyaRoute {
  /// Integrate (f o F^{-1})^{p/(1-p)} in the volume variable.
  volume_integral,
  /// Substitute theta = F^{-1}(s), collapsing to the ring capacity.
  substituted,
};

/// Maz'ya isocapacitary lower bound for a condenser with the given volumes.
double mazya_lower(const Params& params, double vol_K, double vol_O,
                   MazyaRoute route = MazyaRoute::volume_integral,
                   double tol = quadrature::kDefaultTol);

/// Steiner area sum_k C(n,k) sinh^k(s) cosh^{n-k}(s) P_k of the parallel
/// surface at distance s.
double steiner_area(const QuermassData& q, double s);

/// Alexandrov-Fenchel lower bound for P_k given the boundary area.
double af_lower_bound(int n, int k, double area);

/// f(s + f^{-1}(area)), the area of the parallel surface of the ball with
/// the same boundary area.
double area_growth_lower(int n, double area, double s);

using AreaFunction = std::function<double(double)>;

/// Polya upper bound (int_0^inf A(s)^{1/(1-p)} ds)^{1-p} for a parallel-set
/// area function A. The integral is truncated once its tail is negligible,
/// which can only raise the bound.
double polya_upper(const Params& params, const AreaFunction& area_fn,
                   double tol = quadrature::kDefaultTol);
double polya_upper(const Params& params, const QuermassData& q,
                   double tol = quadrature::kDefaultTol);

/// Ball capacity at radius ln(rv)/n, an upper bound for cap_p given RV.
double rv_upper_capacity(const Params& params, double rv,
                         double tol = quadrature::kDefaultTol);

struct DiameterBound {
  /// arccosh(cosh d / cosh(d/2)).
  double r_of_d;
  /// d/2 + ln 2.
  double linear_bound;
  /// r(d) - d/2, evaluated without cancellation; increases toward ln 2.
  double excess;
};

DiameterBound diameter_harmonic_radius_bound(double d);

}  // namespace hycap
