#include "mixedmeans/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixedmeans/error.hpp"

namespace mixedmeans {

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::InvalidInput, "power series needs at least one coefficient");
  }
}

PowerSeries PowerSeries::monomial(Complex a0, Complex an, int n) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidInput,
                "monomial degree must be >= 1, got " + std::to_string(n));
  }
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{});
  c.front() = a0;
  c.back() = an;
  return PowerSeries(std::move(c));
}

Complex PowerSeries::coeff(int k) const noexcept {
  if (k < 0 || k > order()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex PowerSeries::evaluate(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) return PowerSeries({Complex{}});
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return PowerSeries(std::move(d));
}

PowerSeries PowerSeries::with_order(int order) const {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(order, 0)) + 1, Complex{});
  const std::size_t n = std::min(c.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, c.begin());
  return PowerSeries(std::move(c));
}

int PowerSeries::leading_index(double threshold) const noexcept {
  for (int k = 1; k <= order(); ++k) {
    if (std::abs(coeffs_[static_cast<std::size_t>(k)]) > threshold) return k;
  }
  return 0;
}

int PowerSeries::degree(double threshold) const noexcept {
  for (int k = order(); k >= 1; --k) {
    if (std::abs(coeffs_[static_cast<std::size_t>(k)]) > threshold) return k;
  }
  return 0;
}

bool PowerSeries::is_constant(double threshold) const noexcept {
  return leading_index(threshold) == 0;
}

bool PowerSeries::is_monomial(double threshold) const noexcept {
  const int n = leading_index(threshold);
  return n != 0 && degree(threshold) == n;
}

PowerSeries operator+(const PowerSeries& s, const PowerSeries& t) {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(s.order(), t.order())) + 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = s.coeff(static_cast<int>(k)) + t.coeff(static_cast<int>(k));
  }
  return PowerSeries(std::move(c));
}

PowerSeries operator*(Complex a, const PowerSeries& s) {
  std::vector<Complex> c(s.coeffs_);
  for (auto& v : c) v *= a;
  return PowerSeries(std::move(c));
}

SeriesProduct multiply_flagged(const PowerSeries& s, const PowerSeries& t, int out_order) {
  if (out_order < 0) {
    throw Error(ErrorKind::InvalidInput, "output order must be nonnegative");
  }
  std::vector<Complex> c(static_cast<std::size_t>(out_order) + 1, Complex{});
  bool truncated = false;
  for (int i = 0; i <= s.order(); ++i) {
    const Complex a = s.coeff(i);
    if (a == Complex{}) continue;
    for (int j = 0; j <= t.order(); ++j) {
      const Complex term = a * t.coeff(j);
      if (i + j <= out_order) {
        c[static_cast<std::size_t>(i + j)] += term;
      } else if (term != Complex{}) {
        truncated = true;
      }
    }
  }
  return {PowerSeries(std::move(c)), truncated};
}

PowerSeries sqrt_zero_free(const PowerSeries& s, int out_order) {
  const Complex a0 = s.coeff(0);
  if (a0 == Complex{}) {
    throw Error(ErrorKind::ZeroConstantTerm,
                "square root of a series with zero constant term is not analytic at 0");
  }
  const int n = out_order < 0 ? s.order() : out_order;
  std::vector<Complex> b(static_cast<std::size_t>(n) + 1, Complex{});
  // std::sqrt returns the principal branch, Re(b0) >= 0.
  b[0] = std::sqrt(a0);
  const Complex two_b0 = 2.0 * b[0];
  for (int k = 1; k <= n; ++k) {
    Complex acc = s.coeff(k);
    for (int j = 1; j < k; ++j) {
      acc -= b[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = acc / two_b0;
  }
  return PowerSeries(std::move(b));
}

}  // namespace mixedmeans
