#pragma once

#include <vector>

#include "mixedmeans/geometry.hpp"
#include "mixedmeans/quadrature.hpp"
#include "mixedmeans/series.hpp"

namespace mixedmeans {

/// Weight exponent alpha of d mu_alpha(t) = (1-t^2)^alpha dt^2 and the mixing
/// exponent beta in [0, 1].
class WeightParams {
 public:
  WeightParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  double alpha_;
  double beta_;
};

enum class MeanMethod { ClosedForm, Quadrature };

struct MeanValue {
  double value = 0.0;
  double error_bound = 0.0;
  MeanMethod method = MeanMethod::Quadrature;
};

/// Auto takes the incomplete-beta closed path for a0 + an z^n maps;
/// Quadrature always integrates the mixed ratio numerically.
enum class MeanRoute { Auto, Quadrature };

/// nu_alpha(r) = mu_alpha([0, r]), in closed form. Requires 0 < r < 1.
double nu_alpha(double alpha, double r);

/// f_lambda(x) = integral_0^x t^lambda (1-t)^alpha dt to relative accuracy 1e-12.
/// Requires lambda >= 0 and 0 < x < 1. Throws ToleranceNotMet.
double f_lambda(double lambda, double alpha, double x);

/// One term coef * s^exponent of the mixed ratio written in s = t^2.
struct PowerTerm {
  double coef;
  double exponent;
};

/// Expansion Phi_{kind,beta}(f, sqrt(s)) = sum coef * s^exponent.
///
/// Area: exact for polynomials (image-set closed form for a0 + an z^n,
/// Dirichlet sum otherwise). Length: exact for a0 + an z^n; otherwise
/// built from the square root g of f' (requires f'(0) != 0) as
/// (2 pi)^(1-beta) sum |b_n|^2 s^(n + (1-beta)/2), truncated at sqrt_order.
/// The length form presumes f univalent.
std::vector<PowerTerm> ratio_power_terms(Kind kind, const PowerSeries& f, double beta,
                                         int sqrt_order = kDefaultOrder);

/// Weighted integral mean of the mixed area or length over (0, r).
MeanValue weighted_mean(Kind kind, const PowerSeries& f, const WeightParams& params, double r,
                        const QuadratureParams& quad = {}, MeanRoute route = MeanRoute::Auto);

/// Mean of z^n via the ratio f_{lambda}(r^2) / f_0(r^2): lambda = n - beta for
/// area (times pi^(1-beta)), lambda = (n - beta)/2 for length (times (2 pi)^(1-beta)).
MeanValue weighted_mean_monomial(Kind kind, int n, const WeightParams& params, double r);

/// The r -> 1 limit of the weighted mean, defined for alpha > -1.
/// Throws Error(Domain) for alpha <= -1, where the normalisation diverges.
MeanValue mean_at_one(Kind kind, const PowerSeries& f, const WeightParams& params,
                      const QuadratureParams& quad = {});

}  // namespace mixedmeans
