#pragma once

#include <array>
#include <string>

#include "hycap/bounds.hpp"

namespace hycap {

enum class RadiusKind { rvol, rcap, relative_volume, relative_capacity };

std::string_view to_string(RadiusKind kind);

struct RadiusReport {
  RadiusKind kind;
  double value;
  std::string method;
  /// Relative mismatch in the defining equation at the returned value.
  double residual;
};

/// Radius of the geodesic ball with the given volume.
RadiusReport rvol(int n, double volume);

/// Radius of the closed geodesic ball with the given p-capacity.
RadiusReport rcap(const Params& params, double capacity,
                  double tol = quadrature::kDefaultTol);

/// RV of a geodesic ball, e^{n r}.
double relative_volume_ball(int n, double r);

/// F(r + R) / F(R), the defining ratio of RV at finite R.
double relative_volume_ratio(int n, double r, double R);

/// sum_k C(n,k) P_k / sigma_n, the s -> inf limit of the Steiner ratio.
double relative_volume_quermass(const QuermassData& q);

struct RelativeCapacity {
  double ratio_at_probe;
  double extrapolated;
};

inline constexpr std::array<double, 3> kRelativeCapacityProbes{8.0, 10.0, 12.0};

/// cap_p(B(r + R)) / cap_p(B(R)) at R = R_probe, plus the limit R -> inf
/// extrapolated from the model L (1 + a e^{-b R}) fitted on equally spaced
/// probes.
RelativeCapacity relative_pcapacity_ball(
    const Params& params, double r, double R_probe,
    std::array<double, 3> probes = kRelativeCapacityProbes,
    double tol = quadrature::kDefaultTol);

}  // namespace hycap
