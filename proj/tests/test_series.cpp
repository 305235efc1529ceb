#include <doctest.h>

#include <cmath>
#include <random>

#include "mixedmeans/error.hpp"
#include "mixedmeans/series.hpp"

using namespace mixedmeans;

TEST_CASE("construction and classification") {
  CHECK_THROWS_AS(PowerSeries(std::vector<Complex>{}), Error);
  CHECK_THROWS_AS(PowerSeries::monomial(0.0, 1.0, 0), Error);

  const PowerSeries m = PowerSeries::monomial(2.0, 3.0, 4);
  CHECK(m.order() == 4);
  CHECK(m.is_monomial());
  CHECK(m.leading_index() == 4);
  CHECK(m.degree() == 4);
  CHECK(m.coeff(9) == Complex(0.0));

  const PowerSeries c({5.0, 1e-16});
  CHECK(c.is_constant());
  CHECK_FALSE(c.is_monomial());
  CHECK(c.leading_index() == 0);

  const PowerSeries p({0.0, 1.0, 0.5});
  CHECK_FALSE(p.is_monomial());
  CHECK(p.leading_index() == 1);
}

TEST_CASE("evaluation and derivative") {
  const PowerSeries cube({8.0, 12.0, 6.0, 1.0});  // (z + 2)^3
  const Complex z(0.3, -0.4);
  CHECK(std::abs(cube.evaluate(z) - std::pow(z + 2.0, 3)) < 1e-13);
  const PowerSeries d = cube.derivative();
  CHECK(d.order() == 2);
  CHECK(std::abs(d.evaluate(z) - 3.0 * (z + 2.0) * (z + 2.0)) < 1e-13);
  CHECK(PowerSeries({4.0}).derivative().is_constant());
}

TEST_CASE("products report truncation") {
  const PowerSeries a({1.0, 1.0});
  const auto full = multiply_flagged(a, a, 2);
  CHECK_FALSE(full.truncated);
  CHECK(full.series.coeff(1) == Complex(2.0));
  const auto cut = multiply_flagged(a, a, 1);
  CHECK(cut.truncated);
  CHECK(cut.series.order() == 1);
  CHECK(multiply(a, a, 4).order() == 4);
}

TEST_CASE("square root of the derivative of (z+2)^3") {
  const PowerSeries fp({12.0, 12.0, 3.0});
  const PowerSeries g = sqrt_zero_free(fp);
  CHECK(std::abs(g.coeff(0) - Complex(2.0 * std::sqrt(3.0))) < 1e-14);
  const PowerSeries back = multiply(g, g, 2);
  for (int k = 0; k <= 2; ++k) CHECK(std::abs(back.coeff(k) - fp.coeff(k)) < 1e-12);
  // Exact square: higher coefficients vanish.
  const PowerSeries long_root = sqrt_zero_free(fp, 10);
  for (int k = 2; k <= 10; ++k) CHECK(std::abs(long_root.coeff(k)) < 1e-13);
}

TEST_CASE("square root needs a nonzero constant term") {
  try {
    sqrt_zero_free(PowerSeries({0.0, 1.0}));
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroConstantTerm);
  }
}

TEST_CASE("square root round trip on random series") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> c(12);
    for (auto& v : c) v = {u(rng), u(rng)};
    c[0] += Complex(2.0, 0.0);
    const PowerSeries s(c);
    const PowerSeries g = sqrt_zero_free(s);
    CHECK(g.coeff(0).real() > 0.0);
    const PowerSeries back = multiply(g, g, s.order());
    for (int k = 0; k <= s.order(); ++k) CHECK(std::abs(back.coeff(k) - s.coeff(k)) < 1e-12);
  }
}
