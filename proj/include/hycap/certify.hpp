#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hycap/bounds.hpp"
#include "hycap/potentials.hpp"
#include "hycap/radii.hpp"

namespace hycap {

enum class Relation { greater_equal, less_equal, equal };

std::string_view to_string(Relation relation);
Relation relation_from_string(std::string_view text);

using InputRecord = std::vector<std::pair<std::string, double>>;

/// One checked statement. slack is signed so that a non-negative value
/// means the relation holds, and is scaled by max(1, |rhs|):
///   >= : (lhs - rhs) / scale      <= : (rhs - lhs) / scale
///   =  : (lhs - rhs) / scale, pass iff |slack| <= tol
/// Informational verdicts are reported but never decide the outcome.
struct Verdict {
  std::string theorem_id;
  std::string check;
  InputRecord inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::equal;
  double slack = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool informational = false;
  std::string note;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict make_verdict(std::string theorem_id, std::string check,
                     InputRecord inputs, double lhs, double rhs,
                     Relation relation, double tol);

/// True when every non-informational verdict passes.
bool all_pass(const std::vector<Verdict>& verdicts);

struct CertifyOptions {
  /// Tolerance for closed-form and single-quadrature checks.
  double tol = 1e-8;
  /// Tolerance for checks that rest on an extrapolated limit.
  double extrapolation_tol = 1e-5;
  double quad_tol = quadrature::kDefaultTol;
};

struct IsocapacitaryProbe {
  /// Mazya bound evaluated with the inner volume scaled by this factor.
  double inner_volume_scale = 1.0;
};

/// Ball-condenser certification of the isocapacitary inequality: ring
/// capacity against the Mazya bound, and the area ratio of level sets
/// against their volume-equivalent spheres at t = 0.25, 0.5, 0.75.
std::vector<Verdict> certify_t21(const Params& params, double r, double R,
                                 const CertifyOptions& options = {},
                                 const IsocapacitaryProbe& probe = {});

struct PointCapacityProbe {
  double u_scale = 1.0;
  double o_scale = 1.0;
};

/// Point-capacity ratio inequality (p > n+1) at its ball equality case,
/// plus the Green-diagonal relation and the universal lower constant.
std::vector<Verdict> certify_t31_eq31(const Params& params, double r, double R,
                                      const CertifyOptions& options = {},
                                      const PointCapacityProbe& probe = {});

/// Diameter bound r(d) < d/2 + ln 2 and monotonicity of r(d) - d/2.
std::vector<Verdict> certify_t31_eq32(const std::vector<double>& d_grid,
                                      const CertifyOptions& options = {});

/// Compact-ball capacity by two routes and the boundary-metric equality.
std::vector<Verdict> certify_t41(const Params& params, double r,
                                 const CertifyOptions& options = {});

/// Capacity-radius and relative-volume chain for a ball of radius r.
std::vector<Verdict> certify_t51_ball(const Params& params, double r,
                                      const CertifyOptions& options = {});

/// Bound direction Rcap(Polya bound) <= ln(RV)/n for quermass data.
std::vector<Verdict> certify_t51_quermass(const Params& params,
                                          const QuermassData& q,
                                          const CertifyOptions& options = {});

}  // namespace hycap
