#pragma once

#include <span>
#include <vector>

#include "mixedmeans/geometry.hpp"
#include "mixedmeans/quadrature.hpp"
#include "mixedmeans/rational.hpp"
#include "mixedmeans/weights.hpp"

namespace mixedmeans {

// D(F)(x) = F'/F + x (F'/F)'. x * D(F)(x) is the second derivative of log F
// with respect to log x, so log-log convexity on (0,1) is D(F) >= 0 there.

/// Numeric D(F)(x) from a five-point stencil in log x with one Richardson
/// step. h is the log-step; h <= 0 picks min(1e-2, -log(x)/4). Throws
/// Error(Domain) if the stencil leaves (0,1) or F is not positive on it.
double d_notation_numeric(const RealFn& F, double x, double h = 0.0);

/// Exact D(R). Throws Error(InvalidInput) when R is identically zero.
RationalFunc d_notation_rational(const RationalFunc& R);

/// The polynomial whose sign is the sign of D(R) on (0,1): numerator of the
/// reduced D(R) made primitive, powers of x removed, sign fixed so the
/// denominator is positive.
RationalPoly sign_core(const RationalFunc& d);

/// D(F) for F(x) = sum_k c_k f_{e_k}(x) / f_0(x). Evaluated from f_lambda and
/// closed forms of its derivatives, with the difference of logarithmic
/// derivatives integrated directly to avoid cancellation.
double ratio_d_notation(std::span<const PowerTerm> terms, double alpha, double x);

/// Delta(lambda, x) = D(f_lambda)(x) - D(f_0)(x).
double delta(double lambda, double alpha, double x);

/// lim_{x->1} Delta(lambda, x) = lambda (alpha+1)(lambda+2+alpha) / ((alpha+2)^2 (alpha+3)),
/// the limit for alpha < -3. Throws Error(SingularParameter) for alpha in {-2, -3}.
double delta_limit(double lambda, double alpha);

/// x * D(F)(x) for F(x) = weighted mean at r = sqrt(x).
double mean_indicator(Kind kind, const PowerSeries& f, const WeightParams& params, double x);

enum class Verdict { Convex, Concave, Neither, Inconclusive };

const char* to_string(Verdict v);

struct SignInterval {
  BigRational lo;
  BigRational hi;
  int sign_lo;
  int sign_hi;
  bool unique;  // p is certified strictly monotone on [lo, hi]
};

/// Sign changes of p on (lo, hi) by exact bisection. Each change is
/// certified unique by a recursive monotonicity test on p', p'', ...
/// and refined to width <= 2^-40 (hi - lo).
std::vector<SignInterval> sign_changes(const RationalPoly& p, const BigRational& lo,
                                       const BigRational& hi);

struct GridSample {
  double x;
  double indicator;    // x * D(F)(x)
  int certified_sign;  // 0 when within the certification margin
};

struct ConvexityReport {
  std::vector<GridSample> grid;
  std::vector<SignInterval> sign_changes;
  Verdict verdict = Verdict::Inconclusive;
};

/// 0.01, 0.02, ..., 0.99, 0.995, 0.999.
std::vector<double> default_scan_grid();

/// Verdict from indicator values: convex if all >= -tol, concave if all <= tol,
/// neither if some exceed 10 tol in each direction, inconclusive otherwise.
ConvexityReport scan_indicator(const RealFn& indicator, std::span<const double> grid, double tol);

/// Indicator via d_notation_numeric on a positive function F.
ConvexityReport loglog_convexity_scan(const RealFn& F, std::span<const double> grid, double tol);

/// Exact scan of a rational function positive on (0,1): exact indicator
/// signs at the grid and certified sign changes of D over (0,1).
ConvexityReport scan_rational(const RationalFunc& F, std::span<const double> grid);

}  // namespace mixedmeans
