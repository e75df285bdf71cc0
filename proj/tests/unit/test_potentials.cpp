#include <doctest.h>

#include "hycap/errors.hpp"
#include "hycap/potentials.hpp"
#include "oracles.hpp"

using namespace hycap;
using oracle::rel;

namespace {

double coth(double x) { return 1.0 / std::tanh(x); }

}  // namespace

TEST_SUITE("potentials") {

TEST_CASE("boundary values and clamping") {
  const RadialPotential v(RingCondenser({2, 2.0}, 0.5, 2.0));
  CHECK(v.value(0.5).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(v.value(2.0).value) < 1e-14);
  const auto inside = v.value(0.1);
  CHECK(inside.clamped);
  CHECK(inside.value == 1.0);
  const auto outside = v.value(3.0);
  CHECK(outside.clamped);
  CHECK(outside.value == 0.0);
  CHECK_FALSE(v.value(1.0).clamped);
}

TEST_CASE("ring potential closed form") {
  const RadialPotential v(RingCondenser({2, 2.0}, 0.5, 2.0));
  const double expected = (coth(1.0) - coth(2.0)) / (coth(0.5) - coth(2.0));
  CHECK(rel(v.value(1.0).value, expected) < 1e-12);
  CHECK(v.value(1.0).value == doctest::Approx(0.24472847).epsilon(1e-7));
  // |grad v| = f(1)^{-1} / normalizer with normalizer = (coth 0.5 - coth 2)/(4 pi)
  const double grad = 1.0 / (std::sinh(1.0) * std::sinh(1.0) * (coth(0.5) - coth(2.0)));
  CHECK(rel(v.gradient_norm(1.0), grad) < 1e-12);
  CHECK(rel(v.normalizer(), (coth(0.5) - coth(2.0)) / (4 * oracle::pi)) < 1e-12);
}

TEST_CASE("gradient is minus the derivative of the value") {
  for (const Params params : {Params{1, 2.0}, Params{2, 3.0}, Params{3, 1.5}}) {
    const RadialPotential v(RingCondenser(params, 0.4, 2.5));
    for (double t : {0.6, 1.2, 2.0}) {
      const double h = 1e-5;
      const double derivative = (v.value(t + h).value - v.value(t - h).value) / (2 * h);
      CHECK(std::abs(-derivative / v.gradient_norm(t) - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("gradient domain") {
  const RadialPotential v(RingCondenser({2, 2.0}, 0.5, 2.0));
  CHECK_THROWS_AS((void)v.gradient_norm(0.5), Error);
  CHECK_THROWS_AS((void)v.gradient_norm(2.0), Error);
}

TEST_CASE("large R approaches the ball potential") {
  const Params params{2, 2.0};
  const RadialPotential ball(RingCondenser(params, 1.0, kInfinity));
  const RadialPotential wide(RingCondenser(params, 1.0, 25.0));
  CHECK(rel(wide.gradient_norm(1.5), ball.gradient_norm(1.5)) < 1e-12);
  CHECK(rel(ball.normalizer(), kappa(params, 1.0)) < 1e-10);
}

TEST_CASE("flux is independent of the level") {
  const RadialPotential v(RingCondenser({2, 2.0}, 0.5, 2.0));
  const double capacity = oracle::ring_n2_p2(0.5, 2.0);
  for (double t : {0.7, 1.0, 1.8}) CHECK(rel(v.flux_integral(t), capacity) < 1e-10);
  CHECK(std::abs(v.flux_integral(0.7) / v.flux_integral(1.8) - 1.0) < 1e-12);
  const RadialPotential ball(RingCondenser({2, 2.0}, 1.0, kInfinity));
  CHECK(rel(ball.flux_integral(3.0), oracle::ball_n2_p2(1.0)) < 1e-10);
}

TEST_CASE("level radius inverts the potential") {
  const RadialPotential v(RingCondenser({2, 2.0}, 0.5, 2.0));
  const double level = (coth(1.0) - coth(2.0)) / (coth(0.5) - coth(2.0));
  CHECK(std::abs(v.level_radius(level) - 1.0) < 1e-10);
  for (int i = 1; i <= 9; ++i) {
    const double l = 0.1 * i;
    CHECK(std::abs(v.value(v.level_radius(l)).value - l) < 1e-8);
  }
  CHECK(v.level_radius(1.0 - 1e-9) - 0.5 < 1e-6);
  CHECK(2.0 - v.level_radius(1e-9) < 1e-6);
  const RadialPotential three(RingCondenser({3, 2.0}, 0.5, 2.0));
  CHECK(rel(three.level_radius(0.5), oracle::kLevel_3_2_half) < 1e-10);
  CHECK_THROWS_AS((void)v.level_radius(0.0), Error);
  CHECK_THROWS_AS((void)v.level_radius(1.0), Error);
}

TEST_CASE("level radius of the compact-ball potential") {
  const RadialPotential ball(RingCondenser({2, 2.0}, 1.0, kInfinity));
  for (double l : {0.9, 0.5, 1e-3}) {
    CHECK(std::abs(ball.value(ball.level_radius(l)).value - l) < 1e-10);
  }
}

TEST_CASE("log-gradient decreases toward n/(p-1) from above") {
  for (const Params params : {Params{1, 2.0}, Params{2, 2.0}, Params{2, 3.0}, Params{3, 2.0}}) {
    const RadialPotential ball(RingCondenser(params, 0.05, kInfinity));
    const double rate = params.n / (params.p - 1.0);
    double previous = kInfinity;
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      const double value = ball.log_gradient_norm(t);
      CHECK(value > rate);
      CHECK(value < previous);
      previous = value;
    }
    CHECK(std::abs(ball.log_gradient_norm(30.0) - rate) < 1e-6);
  }
  const RadialPotential ball(RingCondenser({2, 2.0}, 1.0, kInfinity));
  CHECK(rel(ball.log_gradient_norm(1.0), std::exp(1.0) / std::sinh(1.0)) < 1e-10);
}

TEST_CASE("log-gradient needs the compact-ball condenser") {
  const RadialPotential ring(RingCondenser({2, 2.0}, 0.5, 2.0));
  try {
    (void)ring.log_gradient_norm(1.0);
    FAIL("expected wrong-condenser error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::wrong_condenser);
  }
}

}
