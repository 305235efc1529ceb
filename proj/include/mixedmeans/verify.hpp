#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mixedmeans/geometry.hpp"
#include "mixedmeans/rational.hpp"
#include "mixedmeans/series.hpp"
#include "mixedmeans/weights.hpp"

namespace mixedmeans {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

// How `got` is compared with `expected`; tolerance is absolute.
//   Equal:   |got - expected| <= tol
//   AtMost:  got <= expected + tol
//   Below:   got <  expected - tol
//   AtLeast: got >= expected - tol
//   Above:   got >  expected + tol
enum class Relation { Equal, AtMost, Below, AtLeast, Above };

const char* to_string(Relation r);

struct Witness {
  std::string input;
  double expected = 0.0;
  double got = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::Equal;

  bool violated() const;
};

struct CheckReport {
  std::string check_id;
  CheckStatus status = CheckStatus::Pass;
  std::vector<Witness> witnesses;
  std::string notes;

  bool failed() const { return status == CheckStatus::Fail; }
};

// Radii 0.01 .. 0.99 evenly spaced.
std::vector<double> default_r_grid(int points = 50);

CheckReport check_schwarz(Kind kind, const PowerSeries& f, const WeightParams& params,
                          std::span<const double> r_grid);

CheckReport check_monotone(Kind kind, const PowerSeries& f, const WeightParams& params,
                           std::span<const double> r_grid);

struct RadiusPair {
  double r;
  double s;
};

CheckReport check_lipschitz(Kind kind, const PowerSeries& f, const WeightParams& params,
                            std::span<const RadiusPair> pairs);

CheckReport check_alpha_decrease(Kind kind, const PowerSeries& f, double beta,
                                 std::span<const double> alpha_grid);

enum class UnivalenceCriterion { Wedge, Nehari };

CheckReport check_univalence(UnivalenceCriterion criterion, const PowerSeries& f,
                             int samples = 10000);

// r -> 0 limits: |f'(0)|^2 (area) or |f'(0)| (length) for beta = 1, zero for
// beta < 1. With fixed bounds the mean at r is compared directly; otherwise the
// deviation from the limit must shrink at the expected rate from r to r^2.
struct SmallRadiusBounds {
  double tol_beta_one = 1e-4;
  double cap_small_beta = 1e-3;
};

CheckReport check_small_radius_limit(Kind kind, const PowerSeries& f, const WeightParams& params,
                                     std::optional<SmallRadiusBounds> fixed = std::nullopt,
                                     double r = 1e-3);

// Norm estimates for alpha <= -1: the mean of Phi tends to Phi(f, 1) as r -> 1.
CheckReport check_limit_at_boundary(Kind kind, const PowerSeries& f, const WeightParams& params);

// Norm estimates for alpha > -1: mean(r) <= mean_at_one.
CheckReport check_bounded_by_boundary_mean(Kind kind, const PowerSeries& f,
                                           const WeightParams& params,
                                           std::span<const double> r_grid);

// Coefficient lower bounds and strict monotonicity of the mixed ratios.
CheckReport check_geometry_schwarz(Kind kind, const PowerSeries& f, std::span<const double> r_grid);
CheckReport check_ratio_monotone(Kind kind, const PowerSeries& f, double beta,
                                 std::span<const double> r_grid);
CheckReport check_isoperimetric(const PowerSeries& f, std::span<const double> r_grid);

// Additivity, power substitution and positive superposition of the D-notation.
CheckReport check_d_notation_properties();

CheckReport check_convexity_regimes(Kind kind, double beta);

std::vector<CheckReport> reproduce_examples();

// Weighted mean of z -> sum a_k z^k (integer coefficients) as an exact function
// of r, divided by pi^(1-beta) for area or (2 pi)^(1-beta) for length. Needs
// integer alpha >= 0 and beta in {0, 1}; length also needs f' = c q^2 with q a
// polynomial.
RationalFunc exact_mean_over_constant(Kind kind, const std::vector<long long>& a, int beta,
                                      int alpha);

// Every check of the default suite, sorted by check_id. Parallelism is capped
// by the MIXEDMEANS_THREADS environment variable when set.
std::vector<CheckReport> run_default_suite();

using CheckTask = std::function<std::vector<CheckReport>()>;

// Runs independent tasks concurrently on at most max_threads threads (0 means
// MIXEDMEANS_THREADS or the hardware count); output sorted by check_id.
std::vector<CheckReport> run_parallel(const std::vector<CheckTask>& tasks, unsigned max_threads = 0);

unsigned suite_threads();

bool any_failed(std::span<const CheckReport> reports);

// Monomials, and maps passing either univalence criterion (the wedge test is
// applied to (f - f(0)) / f'(0)). Length results are only defined on this class.
bool length_hypothesis_holds(const PowerSeries& f, int samples = 4000);

// Compact text form like "z+0.5z^2", usable inside check ids.
std::string describe(const PowerSeries& f);

}  // namespace mixedmeans
