#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mixedmeans/error.hpp"
#include "mixedmeans/geometry.hpp"

using namespace mixedmeans;
constexpr double kPi = std::numbers::pi;

TEST_CASE("monomial area and length in closed form") {
  const PowerSeries f = PowerSeries::monomial(1.0, 3.0, 2);
  const double r = 0.7;
  const GeomValue a = area(f, r);
  CHECK(a.method == GeomMethod::ClosedForm);
  CHECK(a.value == doctest::Approx(kPi * 9.0 * std::pow(r, 4)).epsilon(1e-14));
  const GeomValue l = length_boundary(f, r);
  CHECK(l.value == doctest::Approx(2 * kPi * 3.0 * r * r).epsilon(1e-14));
}

TEST_CASE("Dirichlet area of z + z^2/2") {
  const PowerSeries f({0.0, 1.0, 0.5});
  for (double r : {0.1, 0.5, 0.9}) {
    const double expected = kPi * (r * r + 0.5 * std::pow(r, 4));
    CHECK(area_dirichlet(f, r).value == doctest::Approx(expected).epsilon(1e-14));
    CHECK(area(f, r).value == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("boundary length by quadrature") {
  // |f'| = |1 + z| for z + z^2/2; at r the length is r * integral |1 + r e^{it}| dt.
  const PowerSeries f({0.0, 1.0, 0.5});
  const double r = 0.6;
  const GeomValue l = length_boundary(f, r);
  CHECK(l.method == GeomMethod::Quadrature);
  // Complete elliptic form: integral_0^{2pi} |1 + r e^{it}| dt = 4 (1 + r) E(2 sqrt(r)/(1 + r)).
  const double k = 2 * std::sqrt(r) / (1 + r);
  const double expected = r * 4 * (1 + r) * std::comp_ellint_2(k);
  CHECK(l.value == doctest::Approx(expected).epsilon(1e-10));
  const GeomValue via_eval = length_boundary(DiskEvaluator::from_series(f), r);
  CHECK(via_eval.value == doctest::Approx(l.value).epsilon(1e-12));
}

TEST_CASE("raster area agrees with Dirichlet within bounds") {
  const PowerSeries f({0.0, 1.0, 0.5});
  const GeomValue exact = area_dirichlet(f, 0.9);
  const GeomValue raster = area_image_raster(DiskEvaluator::from_series(f), 0.9, 256);
  CHECK(raster.method == GeomMethod::Raster);
  CHECK(std::abs(raster.value - exact.value) <= raster.error_bound + exact.error_bound);
  CHECK_THROWS_AS(area_image_raster(DiskEvaluator::from_series(f), 0.5, 8), Error);
}

TEST_CASE("raster measures the image set of a covering map") {
  // z^2 covers its image twice; the image area is pi r^4.
  const PowerSeries f = PowerSeries::monomial(0.0, 1.0, 2);
  const GeomValue raster = area_image_raster(DiskEvaluator::from_series(f), 0.8, 256);
  const double image = kPi * std::pow(0.8, 4);
  CHECK(std::abs(raster.value - image) <= raster.error_bound);
}

TEST_CASE("mixed ratios") {
  const PowerSeries id({0.0, 1.0});
  CHECK(mixed_ratio(Kind::Area, id, 0.4, 1.0).value == doctest::Approx(1.0));
  CHECK(mixed_ratio(Kind::Length, id, 0.4, 1.0).value == doctest::Approx(1.0));
  CHECK(mixed_ratio(Kind::Area, id, 0.4, 0.0).value == doctest::Approx(kPi * 0.16));
  CHECK(mixed_ratio_at_zero(Kind::Area, PowerSeries({1.0, 3.0}), 1.0) == doctest::Approx(9.0));
  CHECK(mixed_ratio_at_zero(Kind::Length, PowerSeries({1.0, 3.0}), 1.0) == doctest::Approx(3.0));
  CHECK(mixed_ratio_at_zero(Kind::Area, PowerSeries({1.0, 3.0}), 0.5) == 0.0);
}

TEST_CASE("domain checks") {
  const PowerSeries id({0.0, 1.0});
  for (double r : {0.0, 1.0, -0.1, 1.5}) {
    try {
      area(id, r);
      FAIL("radius accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Domain);
    }
  }
  try {
    mixed_ratio(Kind::Area, id, 0.5, 1.5);
    FAIL("beta accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}
