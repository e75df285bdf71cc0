#pragma once

#include <span>
#include <vector>

#include "hycap/quadrature.hpp"

namespace hycap {

/// Dimension index n (the ambient space is H^{n+1}) and capacity exponent p.
struct Params {
  int n = 1;
  double p = 2.0;

  friend bool operator==(const Params&, const Params&) = default;
};

/// Throws ErrorKind::domain unless n >= 1 and p > 1 (p >= 1 when
/// allow_p_one is set).
void validate(const Params& params, bool allow_p_one = false);
void validate_dimension(int n);

/// sigma_n, the area of the unit n-sphere in R^{n+1}.
double sphere_area_const(int n);

/// log sinh(s), switching to s - ln 2 + log1p(-exp(-2s)) past s = 30.
double log_sinh(double s);

/// f(s) = sigma_n sinh^n(s), the area of a geodesic sphere of radius s.
double sphere_area(int n, double s);
double log_sphere_area(int n, double s);

/// F(r) = sigma_n * integral_0^r sinh^n(t) dt. Closed form for n = 1, 2 and
/// quadrature for n >= 3.
double ball_volume(int n, double r);
double ball_volume_closed_form(int n, double r);
double ball_volume_quadrature(int n, double r,
                              double tol = quadrature::kDefaultTol * 1e-3);

/// F^{-1}(V) by bracketed monotone root finding; |F(r) - V| / V <= rel_tol.
double ball_volume_inverse(int n, double volume, double rel_tol = 1e-14);

/// f^{-1}(A) = asinh((A / sigma_n)^{1/n}).
double sphere_area_inverse(int n, double area);

/// A point of the Poincare ball model, strictly inside the unit ball.
class PoincarePoint {
 public:
  explicit PoincarePoint(std::vector<double> coordinates);

  [[nodiscard]] std::span<const double> coordinates() const noexcept {
    return coordinates_;
  }
  [[nodiscard]] double norm_squared() const noexcept { return norm_squared_; }

 private:
  std::vector<double> coordinates_;
  double norm_squared_;
};

/// Hyperbolic distance between two Poincare-ball points, evaluated as
/// 2 asinh(|x-y| / sqrt((1-|x|^2)(1-|y|^2))) for accuracy near the diagonal.
double poincare_distance(const PoincarePoint& x, const PoincarePoint& y);

/// Side a opposite the included angle: cosh a = cosh b cosh d - sinh b sinh d
/// cos(angle).
double side_from_cosine_rule(double b, double d, double angle_cos);

}  // namespace hycap
