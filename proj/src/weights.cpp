#include "mixedmeans/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mixedmeans/error.hpp"

namespace mixedmeans {
namespace {

constexpr double kPi = std::numbers::pi;

QuadratureParams tight() {
  QuadratureParams q;
  q.rel_tol = 1e-12;
  q.abs_tol = 1e-300;
  return q;
}

void require_radius(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorKind::Domain, std::string(what) + ": radius must lie in (0, 1), got " +
                                       std::to_string(r));
  }
}

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Monomial prefactor and s-exponent: Phi(z^n, sqrt(s)) = prefactor * s^lambda.
PowerTerm monomial_term(Kind kind, int n, double beta) {
  if (kind == Kind::Area) return {std::pow(kPi, 1.0 - beta), n - beta};
  return {std::pow(2.0 * kPi, 1.0 - beta), 0.5 * (n - beta)};
}

double coefficient_scale(Kind kind, const PowerSeries& f) {
  const double a = std::abs(f.coeff(f.leading_index()));
  return kind == Kind::Area ? a * a : a;
}

}  // namespace

WeightParams::WeightParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha)) throw Error(ErrorKind::InvalidInput, "alpha must be finite");
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw Error(ErrorKind::InvalidInput, "beta must lie in [0, 1]");
  }
}

double nu_alpha(double alpha, double r) {
  require_radius(r, "nu_alpha");
  const double log_w = std::log1p(-r * r);  // log(1 - r^2)
  if (alpha == -1.0) return -log_w;
  return -std::expm1((alpha + 1.0) * log_w) / (alpha + 1.0);
}

double f_lambda(double lambda, double alpha, double x) {
  if (!(lambda >= 0.0)) throw Error(ErrorKind::InvalidInput, "f_lambda: lambda must be >= 0");
  if (!(x > 0.0 && x < 1.0)) throw Error(ErrorKind::Domain, "f_lambda: x must lie in (0, 1)");
  if (lambda == 0.0) {
    // integral_0^x (1-t)^alpha dt = nu_alpha(sqrt(x)).
    return nu_alpha(alpha, std::sqrt(x));
  }
  return integrate_against_weight([lambda](double t) { return std::pow(t, lambda); }, alpha, x,
                                  tight(), "f_lambda")
      .value;
}

std::vector<PowerTerm> ratio_power_terms(Kind kind, const PowerSeries& f, double beta,
                                         int sqrt_order) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw Error(ErrorKind::InvalidInput, "beta must lie in [0, 1]");
  }
  std::vector<PowerTerm> terms;
  if (f.is_constant()) return terms;
  if (f.is_monomial()) {
    PowerTerm t = monomial_term(kind, f.leading_index(), beta);
    t.coef *= coefficient_scale(kind, f);
    return {t};
  }
  if (kind == Kind::Area) {
    const double pre = std::pow(kPi, 1.0 - beta);
    for (int n = 1; n <= f.order(); ++n) {
      const double c = n * std::norm(f.coeff(n));
      if (c > 0.0) terms.push_back({pre * c, n - beta});
    }
    return terms;
  }
  const PowerSeries root = sqrt_zero_free(f.derivative(), sqrt_order);
  const double pre = std::pow(2.0 * kPi, 1.0 - beta);
  for (int n = 0; n <= root.order(); ++n) {
    const double c = std::norm(root.coeff(n));
    if (c > 0.0) terms.push_back({pre * c, n + 0.5 * (1.0 - beta)});
  }
  return terms;
}

MeanValue weighted_mean_monomial(Kind kind, int n, const WeightParams& params, double r) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "monomial degree must be >= 1");
  require_radius(r, "weighted_mean_monomial");
  const PowerTerm t = monomial_term(kind, n, params.beta());
  const double x = r * r;
  const double value = t.coef * f_lambda(t.exponent, params.alpha(), x) / nu_alpha(params.alpha(), r);
  return {value, 4e-12 * value, MeanMethod::ClosedForm};
}

MeanValue weighted_mean(Kind kind, const PowerSeries& f, const WeightParams& params, double r,
                        const QuadratureParams& quad, MeanRoute route) {
  require_radius(r, "weighted_mean");
  if (f.is_constant()) return {0.0, 0.0, MeanMethod::ClosedForm};
  if (route == MeanRoute::Auto && f.is_monomial()) {
    MeanValue m = weighted_mean_monomial(kind, f.leading_index(), params, r);
    const double scale = coefficient_scale(kind, f);
    m.value *= scale;
    m.error_bound *= scale;
    return m;
  }
  const double beta = params.beta();
  double inner_err = 0.0;
  auto phi = [&](double s) {
    const GeomValue g = detail::mixed_ratio_unchecked(kind, f, std::sqrt(s), beta, quad);
    inner_err = std::max(inner_err, g.error_bound);
    return g.value;
  };
  const QuadResult q = integrate_against_weight(phi, params.alpha(), r * r, quad, "weighted_mean");
  const double nu = nu_alpha(params.alpha(), r);
  return {q.value / nu, q.error / nu + inner_err, MeanMethod::Quadrature};
}

MeanValue mean_at_one(Kind kind, const PowerSeries& f, const WeightParams& params,
                      const QuadratureParams& quad) {
  const double alpha = params.alpha();
  if (!(alpha > -1.0)) {
    throw Error(ErrorKind::Domain,
                "mean_at_one: alpha <= -1 makes the normalising mass diverge at r = 1");
  }
  if (f.is_constant()) return {0.0, 0.0, MeanMethod::ClosedForm};
  if (f.is_monomial()) {
    // f_lambda(1) / f_0(1) = (alpha + 1) B(lambda + 1, alpha + 1).
    const PowerTerm t = monomial_term(kind, f.leading_index(), params.beta());
    const double value = coefficient_scale(kind, f) * t.coef * (alpha + 1.0) *
                         std::exp(log_beta(t.exponent + 1.0, alpha + 1.0));
    return {value, 1e-13 * value, MeanMethod::ClosedForm};
  }
  const double beta = params.beta();
  double inner_err = 0.0;
  auto phi = [&](double s) {
    const GeomValue g = detail::mixed_ratio_unchecked(kind, f, std::sqrt(s), beta, quad);
    inner_err = std::max(inner_err, g.error_bound);
    return g.value;
  };
  const QuadResult q = integrate_against_weight(phi, alpha, 1.0, quad, "mean_at_one");
  return {q.value * (alpha + 1.0), q.error * (alpha + 1.0) + inner_err, MeanMethod::Quadrature};
}

}  // namespace mixedmeans
