#include "mixedmeans/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mixedmeans/error.hpp"

namespace mixedmeans {
namespace {

constexpr double kPi = std::numbers::pi;

void require_radius(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorKind::Domain, std::string(what) + ": radius must lie in (0, 1), got " +
                                       std::to_string(r));
  }
}

void require_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw Error(ErrorKind::InvalidInput, "beta must lie in [0, 1]");
  }
}

double circle_length(const std::function<Complex(Complex)>& deriv, double r,
                     const QuadratureParams& quad, double* err) {
  const auto integrand = [&](double theta) { return std::abs(deriv(std::polar(r, theta))) * r; };
  const QuadResult q = integrate_checked(integrand, 0.0, 2.0 * kPi, quad, "length_boundary");
  *err = q.error;
  return q.value;
}

}  // namespace

DiskEvaluator DiskEvaluator::from_series(const PowerSeries& s) {
  PowerSeries d = s.derivative();
  return {[s](Complex z) { return s.evaluate(z); },
          [d = std::move(d)](Complex z) { return d.evaluate(z); }};
}

namespace detail {

GeomValue area_unchecked(const PowerSeries& f, double r) {
  if (f.is_monomial()) {
    const int n = f.leading_index();
    return {kPi * std::norm(f.coeff(n)) * std::pow(r, 2 * n), 0.0, GeomMethod::ClosedForm};
  }
  double sum = 0.0;
  const double r2 = r * r;
  double rp = r2;
  for (int n = 1; n <= f.order(); ++n, rp *= r2) {
    sum += n * std::norm(f.coeff(n)) * rp;
  }
  return {kPi * sum, 0.0, GeomMethod::CoefficientSum};
}

GeomValue length_unchecked(const PowerSeries& f, double r, const QuadratureParams& quad) {
  if (f.is_constant()) return {0.0, 0.0, GeomMethod::ClosedForm};
  if (f.is_monomial()) {
    const int n = f.leading_index();
    return {2.0 * kPi * std::abs(f.coeff(n)) * std::pow(r, n), 0.0, GeomMethod::ClosedForm};
  }
  const PowerSeries d = f.derivative();
  double err = 0.0;
  const double v = circle_length([&d](Complex z) { return d.evaluate(z); }, r, quad, &err);
  return {v, err, GeomMethod::Quadrature};
}

GeomValue mixed_ratio_unchecked(Kind kind, const PowerSeries& f, double r, double beta,
                                const QuadratureParams& quad) {
  GeomValue g = kind == Kind::Area ? area_unchecked(f, r) : length_unchecked(f, r, quad);
  const double scale = kind == Kind::Area ? kPi * r * r : 2.0 * kPi * r;
  const double denom = std::pow(scale, beta);
  g.value /= denom;
  g.error_bound /= denom;
  return g;
}

}  // namespace detail

GeomValue area_dirichlet(const PowerSeries& f, double r) {
  require_radius(r, "area_dirichlet");
  double sum = 0.0;
  const double r2 = r * r;
  double rp = r2;
  for (int n = 1; n <= f.order(); ++n, rp *= r2) {
    sum += n * std::norm(f.coeff(n)) * rp;
  }
  return {kPi * sum, 0.0, GeomMethod::CoefficientSum};
}

GeomValue area(const PowerSeries& f, double r) {
  require_radius(r, "area");
  return detail::area_unchecked(f, r);
}

GeomValue area_image_raster(const DiskEvaluator& f, double r, int cells_per_axis) {
  require_radius(r, "area_image_raster");
  if (cells_per_axis < 16) {
    throw Error(ErrorKind::InvalidInput, "area_image_raster: cells_per_axis must be >= 16");
  }
  const int n_cells = cells_per_axis;
  const int n_theta = 8 * n_cells;
  const int n_rad = 2 * n_cells;

  auto for_each_sample = [&](auto&& visit) {
    visit(f.eval(Complex{}));
    for (int i = 1; i <= n_rad; ++i) {
      const double rho = r * static_cast<double>(i) / n_rad;
      for (int j = 0; j < n_theta; ++j) {
        visit(f.eval(std::polar(rho, 2.0 * kPi * j / n_theta)));
      }
    }
  };

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for_each_sample([&](Complex w) {
    xmin = std::min(xmin, w.real());
    xmax = std::max(xmax, w.real());
    ymin = std::min(ymin, w.imag());
    ymax = std::max(ymax, w.imag());
  });
  const double span = std::max(xmax - xmin, ymax - ymin);
  if (!(span > 0.0)) return {0.0, 0.0, GeomMethod::Raster};
  // Widen slightly so extreme samples land strictly inside the grid.
  const double pad = 1e-9 * span;
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;
  const double cw = (xmax - xmin) / n_cells;
  const double ch = (ymax - ymin) / n_cells;

  std::vector<unsigned char> covered(static_cast<std::size_t>(n_cells) * n_cells, 0);
  auto cell = [&](int ix, int iy) -> unsigned char& {
    return covered[static_cast<std::size_t>(iy) * n_cells + ix];
  };
  for_each_sample([&](Complex w) {
    const int ix = std::clamp(static_cast<int>((w.real() - xmin) / cw), 0, n_cells - 1);
    const int iy = std::clamp(static_cast<int>((w.imag() - ymin) / ch), 0, n_cells - 1);
    cell(ix, iy) = 1;
  });

  std::size_t n_covered = 0, n_boundary = 0;
  for (int iy = 0; iy < n_cells; ++iy) {
    for (int ix = 0; ix < n_cells; ++ix) {
      if (!cell(ix, iy)) continue;
      ++n_covered;
      bool edge = false;
      for (int dy = -1; dy <= 1 && !edge; ++dy) {
        for (int dx = -1; dx <= 1 && !edge; ++dx) {
          const int jx = ix + dx, jy = iy + dy;
          if (jx < 0 || jy < 0 || jx >= n_cells || jy >= n_cells || !cell(jx, jy)) edge = true;
        }
      }
      if (edge) ++n_boundary;
    }
  }
  const double cell_area = cw * ch;
  return {static_cast<double>(n_covered) * cell_area, static_cast<double>(n_boundary) * cell_area,
          GeomMethod::Raster};
}

GeomValue length_boundary(const PowerSeries& f, double r, const QuadratureParams& quad) {
  require_radius(r, "length_boundary");
  return detail::length_unchecked(f, r, quad);
}

GeomValue length_boundary(const DiskEvaluator& f, double r, const QuadratureParams& quad) {
  require_radius(r, "length_boundary");
  double err = 0.0;
  const double v = circle_length(f.eval_deriv, r, quad, &err);
  return {v, err, GeomMethod::Quadrature};
}

GeomValue mixed_ratio(Kind kind, const PowerSeries& f, double r, double beta,
                      const QuadratureParams& quad) {
  require_radius(r, "mixed_ratio");
  require_beta(beta);
  return detail::mixed_ratio_unchecked(kind, f, r, beta, quad);
}

double mixed_ratio_at_zero(Kind kind, const PowerSeries& f, double beta) {
  require_beta(beta);
  if (beta < 1.0) return 0.0;
  const double a1 = std::abs(f.coeff(1));
  return kind == Kind::Area ? a1 * a1 : a1;
}

}  // namespace mixedmeans
