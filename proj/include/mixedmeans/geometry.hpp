#pragma once

#include <functional>

#include "mixedmeans/quadrature.hpp"
#include "mixedmeans/series.hpp"

namespace mixedmeans {

enum class Kind { Area, Length };

enum class GeomMethod { CoefficientSum, Quadrature, Raster, ClosedForm };

/// A(f,r), L(f,r) or a mixed ratio, with an absolute error bound.
struct GeomValue {
  double value = 0.0;
  double error_bound = 0.0;
  GeomMethod method = GeomMethod::ClosedForm;
};

/// Uniform access to f and f' on the disk, whatever backs them.
struct DiskEvaluator {
  std::function<Complex(Complex)> eval;
  std::function<Complex(Complex)> eval_deriv;

  static DiskEvaluator from_series(const PowerSeries& s);
};

/// pi * sum n |a_n|^2 r^(2n): the area of f(rD) counted with multiplicity.
/// Equals the image area when f is univalent. Throws Error(Domain) unless 0 < r < 1.
GeomValue area_dirichlet(const PowerSeries& f, double r);

/// Area of the image set f(rD). Closed form pi |a_n|^2 r^(2n) for
/// a0 + an z^n (the image is a disk covered n times); otherwise the
/// Dirichlet sum, which is exact for univalent f.
GeomValue area(const PowerSeries& f, double r);

/// Area of the image set f(rD) measured on a pixel grid over its bounding box.
/// error_bound is the total area of covered cells that touch an uncovered one.
/// Requires cells_per_axis >= 16.
GeomValue area_image_raster(const DiskEvaluator& f, double r, int cells_per_axis);

/// L(f,r) = integral of |f'| over the circle |z| = r. Closed form 2 pi |a_n| r^n
/// for a0 + an z^n. Meaningful for univalent f and monomials only; that
/// hypothesis is the caller's. Throws ToleranceNotMet.
GeomValue length_boundary(const PowerSeries& f, double r, const QuadratureParams& quad = {});
GeomValue length_boundary(const DiskEvaluator& f, double r, const QuadratureParams& quad = {});

/// Phi_{A,beta} = A / (pi r^2)^beta or Phi_{L,beta} = L / (2 pi r)^beta.
GeomValue mixed_ratio(Kind kind, const PowerSeries& f, double r, double beta,
                      const QuadratureParams& quad = {});

/// lim_{r->0} Phi_{kind,beta}(f, r): |a_1|^2 (area) or |a_1| (length) when
/// beta == 1, zero otherwise.
double mixed_ratio_at_zero(Kind kind, const PowerSeries& f, double beta);

namespace detail {
// Unchecked variants accepting r in (0, 1]; used by the integral means.
GeomValue area_unchecked(const PowerSeries& f, double r);
GeomValue length_unchecked(const PowerSeries& f, double r, const QuadratureParams& quad);
GeomValue mixed_ratio_unchecked(Kind kind, const PowerSeries& f, double r, double beta,
                                const QuadratureParams& quad);
}  // namespace detail

}  // namespace mixedmeans
