#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mixedmeans {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Polynomial in x with exact rational coefficients, lowest degree first.
/// Trailing zero coefficients are always trimmed; the zero polynomial has
/// no coefficients and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<BigRational> coeffs);
  RationalPoly(std::initializer_list<long long> coeffs);

  static RationalPoly x_power(int k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
  BigRational coeff(int k) const;
  const BigRational& leading() const { return coeffs_.back(); }

  BigRational evaluate(const BigRational& x) const;
  double evaluate(double x) const;
  RationalPoly derivative() const;

  /// Largest k with x^k dividing the polynomial (0 for the zero polynomial).
  int x_valuation() const noexcept;
  RationalPoly shift_down(int k) const;

  /// Integer-coefficient polynomial proportional to this one, coefficients
  /// coprime, sign kept.
  RationalPoly primitive() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const BigRational& c, const RationalPoly& a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) = default;

  /// Euclidean division; throws Error(InvalidInput) on a zero divisor.
  static void divmod(const RationalPoly& num, const RationalPoly& den, RationalPoly& quot,
                     RationalPoly& rem);

  /// Monic greatest common divisor (zero when both are zero).
  static RationalPoly gcd(RationalPoly a, RationalPoly b);

  /// Human-readable form like "48 - 288x + 232x^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Ratio of exact polynomials kept in lowest terms: the polynomial gcd is
/// divided out, both parts carry coprime integer coefficients and the
/// denominator's leading coefficient is positive.
class RationalFunc {
 public:
  RationalFunc(RationalPoly numerator, RationalPoly denominator);
  explicit RationalFunc(RationalPoly numerator);

  const RationalPoly& numerator() const noexcept { return num_; }
  const RationalPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  BigRational evaluate(const BigRational& x) const;
  double evaluate(double x) const;

  friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
  friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
  friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b);
  friend bool operator==(const RationalFunc& a, const RationalFunc& b) = default;

 private:
  RationalPoly num_;
  RationalPoly den_;
};

/// -1, 0 or +1.
int sign(const BigRational& q);

}  // namespace mixedmeans
