#pragma once

#include <complex>
#include <span>
#include <vector>

namespace mixedmeans {

using Complex = std::complex<double>;

/// Default truncation order for derived series (square roots of derivatives).
inline constexpr int kDefaultOrder = 64;

/// Coefficients below this magnitude count as zero when classifying a series.
inline constexpr double kCoefficientZero = 1e-14;

/// Truncated Taylor expansion a_0 + a_1 z + ... + a_N z^N of a map on the disk.
///
/// The truncation order N is part of the value; every operation states the
/// order of its result and never reads past index N of its inputs. For the
/// polynomial maps used throughout, arithmetic is exact up to rounding.
class PowerSeries {
 public:
  /// Throws Error(InvalidInput) on an empty coefficient list.
  explicit PowerSeries(std::vector<Complex> coeffs);

  /// a0 + an z^n. Requires n >= 1.
  static PowerSeries monomial(Complex a0, Complex an, int n);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Coefficient a_k, or zero when k exceeds the order.
  Complex coeff(int k) const noexcept;

  /// Horner evaluation of the truncated polynomial.
  Complex evaluate(Complex z) const noexcept;

  /// Series of f'. A constant yields the order-0 zero series.
  PowerSeries derivative() const;

  /// Same coefficients, order raised (zero padded) or lowered (truncated).
  PowerSeries with_order(int order) const;

  /// Index of the first coefficient with |a_k| > threshold for k >= 1, or 0
  /// when the series is constant.
  int leading_index(double threshold = kCoefficientZero) const noexcept;

  bool is_constant(double threshold = kCoefficientZero) const noexcept;

  /// True for a0 + an z^n with an != 0 (n >= 1).
  bool is_monomial(double threshold = kCoefficientZero) const noexcept;

  /// Highest index with a nonzero coefficient (0 for constants).
  int degree(double threshold = kCoefficientZero) const noexcept;

  friend PowerSeries operator+(const PowerSeries& s, const PowerSeries& t);
  friend PowerSeries operator*(Complex c, const PowerSeries& s);

 private:
  std::vector<Complex> coeffs_;
};

struct SeriesProduct {
  PowerSeries series;
  bool truncated;  // true when out_order dropped nonzero terms of the full product
};

/// Cauchy product truncated (or zero padded) to out_order.
SeriesProduct multiply_flagged(const PowerSeries& s, const PowerSeries& t, int out_order);

inline PowerSeries multiply(const PowerSeries& s, const PowerSeries& t, int out_order) {
  return multiply_flagged(s, t, out_order).series;
}

/// g with g*g = s up to the output order, g(0) the principal root of s(0).
/// out_order < 0 keeps the order of s. Throws Error(ZeroConstantTerm) when
/// s(0) == 0.
PowerSeries sqrt_zero_free(const PowerSeries& s, int out_order = -1);

}  // namespace mixedmeans
