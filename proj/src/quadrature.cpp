#include "hycap/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "hycap/errors.hpp"

namespace hycap::quadrature {
namespace {

constexpr unsigned kKronrodPoints = 21;
constexpr unsigned kGaussPoints = (kKronrodPoints - 1) / 2;
constexpr double kEps = std::numeric_limits<double>::epsilon();

using Kronrod = boost::math::quadrature::gauss_kronrod<double, kKronrodPoints>;
using Gauss = boost::math::quadrature::gauss<double, kGaussPoints>;

thread_local ErrorAudit* current_audit = nullptr;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double l1;
};

double checked_sample(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "non-finite integrand sample f(" << x << ") = " << y;
    fail(ErrorKind::evaluation, msg.str());
  }
  return y;
}

// One G10/K21 panel. The Gauss rule has an even order, so the centre is a
// Kronrod-only node and Gauss nodes sit at the odd abscissa indices.
Panel apply_rule(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();

  const double fc = checked_sample(f, centre);
  double kronrod = fc * wk[0];
  double gauss = 0.0;
  double l1 = std::abs(fc) * wk[0];
  for (unsigned i = 1; i < x.size(); ++i) {
    const double fp = checked_sample(f, centre + half * x[i]);
    const double fm = checked_sample(f, centre - half * x[i]);
    kronrod += (fp + fm) * wk[i];
    l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
    if (i % 2 == 1) gauss += (fp + fm) * wg[i / 2];
  }
  const double value = kronrod * half;
  const double error = std::max(std::abs((kronrod - gauss) * half),
                                2.0 * kEps * std::abs(value));
  return Panel{a, b, value, error, l1 * std::abs(half)};
}

void report(double value, double error) {
  if (current_audit == nullptr) return;
  const double scale = std::abs(value);
  current_audit->record(scale > 0.0 ? error / scale : error);
}

}  // namespace

ErrorAudit::ErrorAudit() : parent_(current_audit) { current_audit = this; }

ErrorAudit::~ErrorAudit() { current_audit = parent_; }

void ErrorAudit::record(double relative_error) noexcept {
  max_ = std::max(max_, relative_error);
  ++count_;
  if (parent_ != nullptr) parent_->record(relative_error);
}

IntegralResult integrate(const Integrand& f, double a, double b, double tol,
                         std::size_t max_evaluations) {
  if (!(a < b)) {
    std::ostringstream msg;
    msg << "integrate requires a < b, got [" << a << ", " << b << "]";
    fail(ErrorKind::domain, msg.str());
  }
  if (!(tol > 0.0)) fail(ErrorKind::domain, "integrate requires tol > 0");

  std::vector<Panel> panels;
  panels.push_back(apply_rule(f, a, b));
  std::size_t evaluations = kKronrodPoints;

  auto by_error = [&panels](std::size_t lhs, std::size_t rhs) {
    return panels[lhs].error < panels[rhs].error;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_error)>
      queue(by_error);
  queue.push(0);

  long double total = panels[0].value;
  long double total_error = panels[0].error;
  long double total_l1 = panels[0].l1;

  auto converged = [&] {
    const double target =
        std::max(tol * std::abs(static_cast<double>(total)),
                 50.0 * kEps * static_cast<double>(total_l1));
    return static_cast<double>(total_error) <= target;
  };

  while (!converged()) {
    if (evaluations + 2 * kKronrodPoints > max_evaluations) {
      std::ostringstream msg;
      msg.precision(6);
      msg << "quadrature budget of " << max_evaluations
          << " evaluations exhausted on [" << a << ", " << b
          << "] with error estimate " << static_cast<double>(total_error);
      throw AccuracyError(msg.str(), static_cast<double>(total),
                          static_cast<double>(total_error));
    }
    const std::size_t worst = queue.top();
    queue.pop();
    const Panel parent = panels[worst];
    const double mid = 0.5 * (parent.a + parent.b);
    if (!(mid > parent.a && mid < parent.b)) {
      // Panel cannot be split further in double precision; accept it.
      total_error -= parent.error;
      panels[worst].error = 0.0;
      queue.push(worst);
      if (queue.size() == 1 || panels[queue.top()].error == 0.0) break;
      continue;
    }
    const Panel left = apply_rule(f, parent.a, mid);
    const Panel right = apply_rule(f, mid, parent.b);
    evaluations += 2 * kKronrodPoints;
    total += static_cast<long double>(left.value) + right.value - parent.value;
    total_error +=
        static_cast<long double>(left.error) + right.error - parent.error;
    total_l1 += static_cast<long double>(left.l1) + right.l1 - parent.l1;
    panels[worst] = left;
    panels.push_back(right);
    queue.push(worst);
    queue.push(panels.size() - 1);
  }

  // Fixed left-to-right summation order keeps the result reproducible.
  std::sort(panels.begin(), panels.end(),
            [](const Panel& lhs, const Panel& rhs) { return lhs.a < rhs.a; });
  long double value = 0.0L;
  long double error = 0.0L;
  for (const auto& panel : panels) {
    value += panel.value;
    error += panel.error;
  }
  IntegralResult result{static_cast<double>(value), static_cast<double>(error),
                        evaluations};
  report(result.value, result.error_estimate);
  return result;
}

IntegralResult integrate_singular_left(const Integrand& f, double a, double b,
                                       double alpha, double tol) {
  if (!(alpha > -1.0)) {
    std::ostringstream msg;
    msg << "endpoint exponent alpha = " << alpha
        << " <= -1: the integral diverges at the left endpoint";
    fail(ErrorKind::divergence, msg.str());
  }
  if (!(a < b)) fail(ErrorKind::domain, "integrate_singular_left requires a < b");
  if (alpha == 0.0) return integrate(f, a, b, tol);

  const double beta = 1.0 / (1.0 + alpha);
  const double upper = std::pow(b - a, 1.0 + alpha);
  auto substituted = [&f, a, beta](double u) {
    const double offset = std::pow(u, beta);
    return beta * std::pow(u, beta - 1.0) * f(a + offset);
  };
  return integrate(substituted, 0.0, upper, tol);
}

IntegralResult integrate_to_infinity(const Integrand& f, double a,
                                     double decay_rate, double tol) {
  if (!(decay_rate > 0.0) || !std::isfinite(decay_rate)) {
    fail(ErrorKind::domain, "integrate_to_infinity requires decay_rate > 0");
  }
  const double panel = 8.0 / decay_rate;
  // Beyond this many e-foldings every double-precision tail has vanished.
  constexpr double kMaxFoldings = 1500.0;

  IntegralResult total{};
  long double value = 0.0L;
  double envelope_floor = std::abs(checked_sample(f, a));
  double t = a;
  for (;;) {
    const IntegralResult piece = integrate(f, t, t + panel, tol);
    value += piece.value;
    total.error_estimate += piece.error_estimate;
    total.evaluations += piece.evaluations + 1;
    t += panel;

    const double f_end = std::abs(checked_sample(f, t));
    const double foldings = decay_rate * (t - a);
    const double envelope = f_end * std::exp(std::min(foldings, 700.0));
    if (envelope > 4.0 * envelope_floor && envelope > 0.0) {
      std::ostringstream msg;
      msg.precision(6);
      msg << "integrand does not decay at rate " << decay_rate
          << ": envelope grew to " << envelope << " at s = " << t;
      fail(ErrorKind::divergence, msg.str());
    }
    envelope_floor = std::min(envelope_floor, envelope);

    const double tail = f_end / decay_rate;
    const double current = std::abs(static_cast<double>(value));
    if (tail <= 1e-2 * tol * current || f_end == 0.0) {
      total.error_estimate += tail;
      break;
    }
    if (foldings > kMaxFoldings) {
      fail(ErrorKind::divergence,
           "tail bound never fell below tolerance; decay hint violated");
    }
  }
  total.value = static_cast<double>(value);
  return total;
}

double find_root_monotone(const std::function<double(double)>& f, double lo,
                          double hi, double tol) {
  if (!(lo < hi)) fail(ErrorKind::bracket, "find_root_monotone requires lo < hi");
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi)) {
    fail(ErrorKind::evaluation, "non-finite value at a bracket endpoint");
  }
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "no sign change on [" << lo << ", " << hi << "]: f(lo) = " << f_lo
        << ", f(hi) = " << f_hi;
    fail(ErrorKind::bracket, msg.str());
  }

  double best_x = std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
  double best_abs = std::min(std::abs(f_lo), std::abs(f_hi));
  auto tracked = [&](double x) {
    const double y = f(x);
    if (!std::isfinite(y)) fail(ErrorKind::evaluation, "non-finite residual");
    if (std::abs(y) < best_abs) {
      best_abs = std::abs(y);
      best_x = x;
    }
    return y;
  };
  auto done = [&](double a, double b) {
    return best_abs <= tol ||
           std::abs(b - a) <= 4.0 * kEps * std::max(std::abs(a), std::abs(b)) ||
           std::abs(b - a) <= std::numeric_limits<double>::min();
  };
  std::uintmax_t max_iter = 400;
  boost::math::tools::toms748_solve(tracked, lo, hi, f_lo, f_hi, done, max_iter);
  return best_x;
}

}  // namespace hycap::quadrature
