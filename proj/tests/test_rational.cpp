#include <doctest.h>

#include "mixedmeans/error.hpp"
#include "mixedmeans/rational.hpp"

using namespace mixedmeans;

TEST_CASE("polynomial arithmetic") {
  const RationalPoly p{1, 2, 1};  // (1 + x)^2
  const RationalPoly q{1, 1};
  CHECK(q * q == p);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p.derivative() == RationalPoly{2, 2});
  CHECK(p.evaluate(BigRational(1, 2)) == BigRational(9, 4));
  CHECK(p.evaluate(0.5) == doctest::Approx(2.25));
  CHECK(RationalPoly{0, 0, 3, 1}.x_valuation() == 2);
  CHECK(RationalPoly{0, 0, 3, 1}.shift_down(2) == RationalPoly{3, 1});
  CHECK(RationalPoly{4, -6, 8}.primitive() == RationalPoly{2, -3, 4});
  CHECK(RationalPoly{48, -288, 232, -72, 15}.to_string() == "48 - 288x + 232x^2 - 72x^3 + 15x^4");
}

TEST_CASE("division and gcd") {
  const RationalPoly a = RationalPoly{1, 1} * RationalPoly{2, 0, 1};
  const RationalPoly b = RationalPoly{1, 1} * RationalPoly{-3, 1};
  RationalPoly quot, rem;
  RationalPoly::divmod(a, RationalPoly{1, 1}, quot, rem);
  CHECK(rem.is_zero());
  CHECK(quot == RationalPoly{2, 0, 1});
  CHECK(RationalPoly::gcd(a, b) == RationalPoly{1, 1});
  CHECK_THROWS_AS(RationalPoly::divmod(a, RationalPoly{}, quot, rem), Error);
}

TEST_CASE("rational functions are kept in lowest terms") {
  const RationalFunc f(RationalPoly{1, 1} * RationalPoly{2, 3}, RationalPoly{1, 1} * RationalPoly{0, -4});
  CHECK(f.numerator().degree() == 1);
  CHECK(f.denominator().degree() == 1);
  CHECK(f.denominator().leading() > 0);
  CHECK(f.evaluate(BigRational(1)) == BigRational(-5, 4));
  const RationalFunc g(RationalPoly{2, 3}, RationalPoly{0, -4});
  CHECK(f == g);
  CHECK((f - g).is_zero());
  CHECK(f * RationalFunc(RationalPoly{0, -4}) == RationalFunc(RationalPoly{2, 3}));
  CHECK_THROWS_AS(RationalFunc(RationalPoly{1}, RationalPoly{}), Error);
}

TEST_CASE("sign") {
  CHECK(sign(BigRational(-3, 7)) == -1);
  CHECK(sign(BigRational(0)) == 0);
  CHECK(sign(BigRational(1, 100)) == 1);
}
