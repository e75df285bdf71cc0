#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hycap/errors.hpp"
#include "hycap/quadrature.hpp"

using namespace hycap;
using namespace hycap::quadrature;

TEST_SUITE("quadrature") {

TEST_CASE("smooth integrals") {
  const auto r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r.error_estimate < 1e-12);
  CHECK(r.evaluations > 0);
  const auto e = integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(e.value == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));
}

TEST_CASE("reversed and empty intervals are domain errors") {
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 2.0, 0.0), Error);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 1.0), Error);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, 0.0), Error);
}

TEST_CASE("sharp peak is resolved") {
  const double w = 1e-3;
  const auto r = integrate([w](double x) { return w / (x * x + w * w); }, -1.0, 1.0, 1e-12);
  CHECK(r.value == doctest::Approx(2.0 * std::atan(1.0 / w)).epsilon(1e-11));
}

TEST_CASE("left endpoint singularities") {
  // int_0^1 x^{-1/2} dx = 2, int_0^1 x^{-0.9} dx = 10
  auto half = integrate_singular_left([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, -0.5);
  CHECK(half.value == doctest::Approx(2.0).epsilon(1e-13));
  auto strong = integrate_singular_left([](double x) { return std::pow(x, -0.9); }, 0.0, 1.0, -0.9);
  CHECK(strong.value == doctest::Approx(10.0).epsilon(1e-12));
  CHECK_THROWS_AS(integrate_singular_left([](double x) { return 1.0 / x; }, 0.0, 1.0, -1.0), Error);
}

TEST_CASE("semi-infinite integrals") {
  auto exp_tail = integrate_to_infinity([](double x) { return std::exp(-3.0 * x); }, 1.0, 3.0);
  CHECK(exp_tail.value == doctest::Approx(std::exp(-3.0) / 3.0).epsilon(1e-13));
  // decay faster than the hint is fine
  auto fast = integrate_to_infinity([](double x) { return std::exp(-10.0 * x); }, 0.0, 1.0);
  CHECK(fast.value == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("divergent tails are rejected") {
  // algebraic decay is slower than any exponential hint
  CHECK_THROWS_AS(
      integrate_to_infinity([](double x) { return 1.0 / (x * x * x); }, 1.0, 1.0), Error);
  try {
    integrate_to_infinity([](double x) { return std::exp(0.1 * x); }, 0.0, 1.0);
    FAIL("expected divergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::divergence);
  }
}

TEST_CASE("non-finite integrand values raise") {
  CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), Error);
}

TEST_CASE("evaluation budget carries the best estimate") {
  try {
    integrate([](double x) { return std::sin(1.0 / x); }, 1e-9, 1.0, 1e-15, 2000);
    FAIL("expected accuracy error");
  } catch (const AccuracyError& e) {
    CHECK(std::isfinite(e.best_value()));
    CHECK(e.best_error() > 0.0);
  }
}

TEST_CASE("monotone root finding") {
  const double root = find_root_monotone([](double x) { return x * x - 2.0; }, 0.0, 2.0);
  CHECK(root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  const double down = find_root_monotone([](double x) { return 1.0 - x; }, 0.0, 3.0);
  CHECK(down == doctest::Approx(1.0).epsilon(1e-14));
  try {
    find_root_monotone([](double x) { return x + 5.0; }, 0.0, 1.0);
    FAIL("expected bracket error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::bracket);
  }
}

TEST_CASE("error audit nests") {
  ErrorAudit outer;
  {
    ErrorAudit inner;
    integrate([](double x) { return std::cos(x); }, 0.0, 1.0);
    CHECK(inner.integrals() == 1);
  }
  integrate([](double x) { return x; }, 0.0, 1.0);
  CHECK(outer.integrals() == 2);
  CHECK(outer.max_relative_error() >= 0.0);
}

}
