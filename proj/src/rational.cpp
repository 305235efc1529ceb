#include "mixedmeans/rational.hpp"

#include <sstream>

#include "mixedmeans/error.hpp"

namespace mixedmeans {

namespace mp = boost::multiprecision;

int sign(const BigRational& q) { return q.sign(); }

RationalPoly::RationalPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RationalPoly RationalPoly::x_power(int k) {
  std::vector<BigRational> c(static_cast<std::size_t>(k) + 1, BigRational(0));
  c.back() = 1;
  return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational RationalPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return BigRational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

BigRational RationalPoly::evaluate(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->convert_to<double>();
  }
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long long>(k);
  return RationalPoly(std::move(d));
}

int RationalPoly::x_valuation() const noexcept {
  int k = 0;
  while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
  return is_zero() ? 0 : k;
}

RationalPoly RationalPoly::shift_down(int k) const {
  if (k <= 0) return *this;
  if (k > degree()) return {};
  return RationalPoly(std::vector<BigRational>(coeffs_.begin() + k, coeffs_.end()));
}

RationalPoly RationalPoly::primitive() const {
  if (is_zero()) return {};
  BigInt l = 1;
  for (const auto& c : coeffs_) l = mp::lcm(l, mp::denominator(c));
  BigInt g = 0;
  std::vector<BigInt> ints;
  ints.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    ints.push_back(mp::numerator(c) * (l / mp::denominator(c)));
    g = mp::gcd(g, ints.back());
  }
  if (g < 0) g = -g;
  std::vector<BigRational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(v / g);
  return RationalPoly(std::move(out));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  }
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  return a + BigRational(-1) * b;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const BigRational& s, const RationalPoly& a) {
  std::vector<BigRational> c(a.coeffs_);
  for (auto& v : c) v *= s;
  return RationalPoly(std::move(c));
}

void RationalPoly::divmod(const RationalPoly& num, const RationalPoly& den, RationalPoly& quot,
                          RationalPoly& rem) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidInput, "polynomial division by zero");
  std::vector<BigRational> r = num.coeffs_;
  const int dd = den.degree();
  const int qd = num.degree() - dd;
  std::vector<BigRational> q(static_cast<std::size_t>(std::max(qd + 1, 0)), BigRational(0));
  for (int k = qd; k >= 0; --k) {
    const BigRational f = r[static_cast<std::size_t>(k + dd)] / den.leading();
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      r[static_cast<std::size_t>(k + j)] -= f * den.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  quot = RationalPoly(std::move(q));
  rem = RationalPoly(std::move(r));
}

RationalPoly RationalPoly::gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly q, r;
    divmod(a, b, q, r);
    // Keep coefficient growth in check between steps.
    a = std::move(b);
    b = r.primitive();
  }
  if (a.is_zero()) return a;
  return (BigRational(1) / a.leading()) * a;
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigRational mag = c < 0 ? BigRational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

RationalFunc::RationalFunc(RationalPoly numerator, RationalPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorKind::InvalidInput, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = RationalPoly{1};
    return;
  }
  const RationalPoly g = RationalPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    RationalPoly q, r;
    RationalPoly::divmod(num_, g, q, r);
    num_ = std::move(q);
    RationalPoly::divmod(den_, g, q, r);
    den_ = std::move(q);
  }
  // Common integer scaling: clear denominators of both, then divide the content.
  BigInt l = 1;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& c : p->coeffs()) l = mp::lcm(l, mp::denominator(c));
  }
  BigInt content = 0;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& c : p->coeffs()) content = mp::gcd(content, mp::numerator(c) * (l / mp::denominator(c)));
  }
  if (content < 0) content = -content;
  BigRational scale = BigRational(l) / BigRational(content);
  if (den_.leading() < 0) scale = -scale;
  num_ = scale * num_;
  den_ = scale * den_;
}

RationalFunc::RationalFunc(RationalPoly numerator)
    : RationalFunc(std::move(numerator), RationalPoly{1}) {}

BigRational RationalFunc::evaluate(const BigRational& x) const {
  return num_.evaluate(x) / den_.evaluate(x);
}

double RationalFunc::evaluate(double x) const { return num_.evaluate(x) / den_.evaluate(x); }

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
  return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
  return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
  return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

}  // namespace mixedmeans
