#pragma once

#include <cstddef>
#include <functional>

namespace mixedmeans {

struct QuadratureParams {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_evals = std::size_t{1} << 20;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evals = 0;
  bool converged = true;
};

using RealFn = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (10/21 point) integration of f over [a, b].
/// Bisects the interval with the largest error estimate until the summed
/// estimate drops below max(abs_tol, rel_tol*|I|) or the budget runs out.
QuadResult integrate(const RealFn& f, double a, double b, const QuadratureParams& params = {});

/// Same as integrate() but throws ToleranceNotMet when not converged.
QuadResult integrate_checked(const RealFn& f, double a, double b,
                             const QuadratureParams& params, const char* what);

/// Integral of g(t) (1-t)^alpha over [0, x] for 0 < x <= 1.
///
/// The part of the range above t = 1/2 is integrated in u = -log(1-t), which
/// turns the endpoint behaviour of the weight into an exponential. x == 1
/// requires alpha > -1; the u range is then cut where the remaining weight
/// mass falls below machine precision and the tail is closed with g(1).
/// Throws ToleranceNotMet.
QuadResult integrate_against_weight(const RealFn& g, double alpha, double x,
                                    const QuadratureParams& params, const char* what);

}  // namespace mixedmeans
