#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "mixedmeans/report_io.hpp"
#include "mixedmeans/verify.hpp"

using namespace mixedmeans;

namespace {

const PowerSeries kIdentity({0.0, 1.0});
const PowerSeries kAreaMap({0.0, 1.0, 0.5});
const PowerSeries kLengthMap({8.0, 12.0, 6.0, 1.0});

}  // namespace

TEST_CASE("witness relations") {
  CHECK_FALSE(Witness{"", 1.0, 1.0 + 1e-10, 1e-9, Relation::Equal}.violated());
  CHECK(Witness{"", 1.0, 1.1, 1e-9, Relation::Equal}.violated());
  CHECK(Witness{"", 1.0, 0.5, 0.0, Relation::Below}.violated() == false);
  CHECK(Witness{"", 1.0, 1.0, 0.0, Relation::Below}.violated());
  CHECK(Witness{"", 1.0, 1.0, 0.0, Relation::AtMost}.violated() == false);
  CHECK(Witness{"", 0.0, NAN, 1.0, Relation::AtMost}.violated());
}

TEST_CASE("Schwarz bound") {
  const auto grid = default_r_grid(12);
  const CheckReport eq = check_schwarz(Kind::Area, PowerSeries::monomial(0.0, 3.0, 2), WeightParams(1, 1), grid);
  CHECK(eq.status == CheckStatus::Pass);
  const CheckReport strict = check_schwarz(Kind::Area, kAreaMap, WeightParams(1, 1), grid);
  CHECK(strict.status == CheckStatus::Pass);
  CHECK(check_schwarz(Kind::Area, PowerSeries({2.0}), WeightParams(1, 1), grid).status == CheckStatus::Skipped);
}

TEST_CASE("monotone growth") {
  const auto grid = default_r_grid(20);
  CHECK(check_monotone(Kind::Area, kIdentity, WeightParams(0, 1), grid).status == CheckStatus::Pass);
  CHECK(check_monotone(Kind::Area, kAreaMap, WeightParams(-3, 0), grid).status == CheckStatus::Pass);
  CHECK(check_monotone(Kind::Area, PowerSeries::monomial(0, 1, 2), WeightParams(1, 1), grid).status ==
        CheckStatus::Pass);
  // Non-univalent maps have no defined length mean.
  CHECK(check_monotone(Kind::Length, PowerSeries({0.0, 1.0, 2.0}), WeightParams(0, 1), grid).status ==
        CheckStatus::Skipped);
}

TEST_CASE("Lipschitz bound in log nu") {
  const std::vector<RadiusPair> pairs{{0.3, 0.7}, {0.2, 0.9}};
  CHECK(check_lipschitz(Kind::Area, kIdentity, WeightParams(0, 1), pairs).status == CheckStatus::Pass);
  CHECK(check_lipschitz(Kind::Area, kAreaMap, WeightParams(1, 1), pairs).status == CheckStatus::Pass);
  CHECK(check_lipschitz(Kind::Length, kLengthMap, WeightParams(-1, 0.5), pairs).status == CheckStatus::Pass);
}

TEST_CASE("decrease in alpha at r = 1") {
  const std::vector<double> alphas{-0.5, 0.0, 1.0};
  CHECK(check_alpha_decrease(Kind::Area, kIdentity, 1.0, alphas).status == CheckStatus::Pass);
  CHECK(check_alpha_decrease(Kind::Area, kAreaMap, 0.0, alphas).status == CheckStatus::Pass);
  const std::vector<double> unsorted{0.0, -0.5};
  CHECK_THROWS(check_alpha_decrease(Kind::Area, kAreaMap, 0.0, unsorted));
}

TEST_CASE("univalence criteria") {
  CHECK(check_univalence(UnivalenceCriterion::Wedge, kAreaMap).status == CheckStatus::Pass);
  CHECK(check_univalence(UnivalenceCriterion::Nehari, kLengthMap).status == CheckStatus::Pass);
  const CheckReport unnormalised = check_univalence(UnivalenceCriterion::Wedge, PowerSeries::monomial(0, 1, 2));
  CHECK(unnormalised.status == CheckStatus::Fail);
  CHECK(unnormalised.notes.find("normalization") != std::string::npos);
  const CheckReport bad = check_univalence(UnivalenceCriterion::Wedge, PowerSeries({0.0, 1.0, 2.0}));
  CHECK(bad.status == CheckStatus::Fail);
  CHECK_THROWS(check_univalence(UnivalenceCriterion::Nehari, kLengthMap, 10));
  CHECK(length_hypothesis_holds(kAreaMap));
  CHECK_FALSE(length_hypothesis_holds(PowerSeries({0.0, 1.0, 2.0})));
}

TEST_CASE("limits and norm estimates") {
  CHECK(check_small_radius_limit(Kind::Area, kAreaMap, WeightParams(1, 1), SmallRadiusBounds{}).status ==
        CheckStatus::Pass);
  CHECK(check_small_radius_limit(Kind::Length, kLengthMap, WeightParams(-3, 0.5)).status == CheckStatus::Pass);
  CHECK(check_limit_at_boundary(Kind::Area, kAreaMap, WeightParams(-1, 1)).status == CheckStatus::Pass);
  CHECK(check_limit_at_boundary(Kind::Area, PowerSeries({1.0}), WeightParams(-2, 0)).status == CheckStatus::Pass);
  const auto grid = default_r_grid(10);
  CHECK(check_bounded_by_boundary_mean(Kind::Length, kLengthMap, WeightParams(1, 1), grid).status ==
        CheckStatus::Pass);
  CHECK(check_bounded_by_boundary_mean(Kind::Area, kIdentity, WeightParams(0.5, 1), grid).status ==
        CheckStatus::Pass);
}

TEST_CASE("geometry lemmas") {
  const auto grid = default_r_grid(10);
  for (Kind k : {Kind::Area, Kind::Length}) {
    CHECK(check_geometry_schwarz(k, kAreaMap, grid).status == CheckStatus::Pass);
    CHECK(check_ratio_monotone(k, kLengthMap, 0.5, grid).status == CheckStatus::Pass);
  }
  CHECK(check_isoperimetric(kAreaMap, grid).status == CheckStatus::Pass);
  CHECK(check_d_notation_properties().status == CheckStatus::Pass);
}

TEST_CASE("exact means of the examples") {
  // 2 (z + z^2/2) at alpha = 1, beta = 1: four times (12 - 3x - 2x^2) / (6 (2 - x)).
  const RationalFunc m = exact_mean_over_constant(Kind::Area, {0, 2, 1}, 1, 1);
  CHECK(m == RationalFunc(RationalPoly{48, 0, -12, 0, -8}, RationalPoly{12, 0, -6}));
  CHECK_THROWS(exact_mean_over_constant(Kind::Length, {0, 1, 1}, 1, 1));
}

TEST_CASE("examples and regimes") {
  const auto reports = reproduce_examples();
  CHECK(reports.size() == 18);
  CHECK_FALSE(any_failed(reports));
  CHECK(check_convexity_regimes(Kind::Area, 1.0).status == CheckStatus::Pass);
  CHECK(check_convexity_regimes(Kind::Length, 0.0).status == CheckStatus::Pass);
}

TEST_CASE("parallel runs are deterministic") {
  std::vector<CheckTask> tasks;
  for (double a : {-1.0, 0.0, 1.0}) {
    tasks.push_back([a] {
      return std::vector<CheckReport>{
          check_monotone(Kind::Area, kAreaMap, WeightParams(a, 1.0), default_r_grid(10))};
    });
  }
  std::ostringstream one, two;
  write_reports_json(one, run_parallel(tasks, 3), "t");
  write_reports_json(two, run_parallel(tasks, 1), "t");
  CHECK(one.str() == two.str());
  const auto sorted = run_parallel(tasks, 2);
  for (std::size_t i = 1; i < sorted.size(); ++i) CHECK(sorted[i - 1].check_id < sorted[i].check_id);
}
