#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mixedmeans/error.hpp"
#include "mixedmeans/quadrature.hpp"

using namespace mixedmeans;

TEST_CASE("polynomials and smooth integrands") {
  const QuadResult p = integrate([](double t) { return 3 * t * t; }, 0.0, 2.0);
  CHECK(p.converged);
  CHECK(p.value == doctest::Approx(8.0).epsilon(1e-14));
  const QuadResult s = integrate([](double t) { return std::sin(t); }, 0.0, std::numbers::pi);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(s.error >= 0.0);
}

TEST_CASE("endpoint singularity") {
  const QuadResult q = integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0);
  CHECK(q.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("budget exhaustion") {
  QuadratureParams tiny;
  tiny.max_evals = 21;
  tiny.rel_tol = 1e-15;
  auto rough = [](double t) { return std::abs(std::sin(50 * t)); };
  CHECK_FALSE(integrate(rough, 0.0, 3.0, tiny).converged);
  try {
    integrate_checked(rough, 0.0, 3.0, tiny, "rough");
    FAIL("expected ToleranceNotMet");
  } catch (const ToleranceNotMet& e) {
    CHECK(e.kind() == ErrorKind::ToleranceNotMet);
    CHECK(std::isfinite(e.best_estimate()));
  }
}

TEST_CASE("weighted integrals against (1-t)^alpha") {
  // integral_0^1 t (1-t)^2 dt = B(2, 3) = 1/12.
  const QuadResult b = integrate_against_weight([](double t) { return t; }, 2.0, 1.0, {}, "beta");
  CHECK(b.value == doctest::Approx(1.0 / 12.0).epsilon(1e-10));
  // integral_0^1 (1-t)^-0.5 dt = 2.
  const QuadResult h = integrate_against_weight([](double) { return 1.0; }, -0.5, 1.0, {}, "half");
  CHECK(h.value == doctest::Approx(2.0).epsilon(1e-9));
  // integral_0^x (1-t)^-3 dt = ((1-x)^-2 - 1) / 2, very steep near 1.
  const double x = 1.0 - 1e-6;
  const QuadResult steep = integrate_against_weight([](double) { return 1.0; }, -3.0, x, {}, "steep");
  const double exact = 0.5 * (std::pow(1.0 - x, -2.0) - 1.0);
  CHECK(steep.value == doctest::Approx(exact).epsilon(1e-9));
  CHECK_THROWS_AS(integrate_against_weight([](double) { return 1.0; }, -1.0, 1.0, {}, "div"), Error);
}
