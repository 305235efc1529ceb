#include "mixedmeans/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "mixedmeans/error.hpp"

namespace mixedmeans {
namespace {

// Kronrod abscissae on [0,1]; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208640728730, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk21(const RealFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  std::array<double, 10> f1{}, f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const double v1 = f(center - dx);
    const double v2 = f(center + dx);
    f1[static_cast<std::size_t>(j)] = v1;
    f2[static_cast<std::size_t>(j)] = v2;
    resk += kWgk[static_cast<std::size_t>(j)] * (v1 + v2);
    resabs += kWgk[static_cast<std::size_t>(j)] * (std::abs(v1) + std::abs(v2));
    if (j % 2 == 1) resg += kWg[static_cast<std::size_t>(j / 2)] * (v1 + v2);
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[static_cast<std::size_t>(j)] *
              (std::abs(f1[static_cast<std::size_t>(j)] - mean) +
               std::abs(f2[static_cast<std::size_t>(j)] - mean));
  }
  const double value = resk * half;
  resasc *= std::abs(half);
  resabs *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  if (!std::isfinite(value)) err = std::numeric_limits<double>::infinity();
  return {a, b, value, err};
}

}  // namespace

QuadResult integrate(const RealFn& f, double a, double b, const QuadratureParams& params) {
  QuadResult out;
  if (a == b) return out;
  constexpr std::size_t kEvalsPerRule = 21;

  std::priority_queue<Segment> heap;
  Segment first = gk21(f, a, b);
  out.evals = kEvalsPerRule;
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  std::vector<Segment> frozen;  // too narrow to split further

  auto target = [&] { return std::max(params.abs_tol, params.rel_tol * std::abs(total)); };

  while (total_err > target()) {
    if (heap.empty()) break;
    if (out.evals + 2 * kEvalsPerRule > params.max_evals) {
      out.converged = false;
      break;
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
      frozen.push_back(worst);
      continue;
    }
    Segment left = gk21(f, worst.a, mid);
    Segment right = gk21(f, mid, worst.b);
    out.evals += 2 * kEvalsPerRule;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the leaves to shed accumulated cancellation in the running totals.
  double sum = 0.0, err = 0.0;
  for (const auto& s : frozen) {
    sum += s.value;
    err += s.error;
  }
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = sum;
  out.error = err;
  if (!std::isfinite(sum) || err > std::max(params.abs_tol, params.rel_tol * std::abs(sum))) {
    out.converged = false;
  }
  return out;
}

QuadResult integrate_checked(const RealFn& f, double a, double b,
                             const QuadratureParams& params, const char* what) {
  QuadResult r = integrate(f, a, b, params);
  if (!r.converged) {
    throw ToleranceNotMet(std::string(what) + ": quadrature tolerance not met", r.value, r.error);
  }
  return r;
}

QuadResult integrate_against_weight(const RealFn& g, double alpha, double x,
                                    const QuadratureParams& params, const char* what) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::Domain, std::string(what) + ": upper limit must lie in (0, 1]");
  }
  if (x == 1.0 && !(alpha > -1.0)) {
    throw Error(ErrorKind::Domain, std::string(what) + ": weight not integrable up to 1");
  }
  constexpr double kSplit = 0.5;
  QuadResult total;
  const double lower_end = std::min(x, kSplit);
  total = integrate_checked(
      [&](double t) { return g(t) * std::pow(1.0 - t, alpha); }, 0.0, lower_end, params, what);
  if (x <= kSplit) return total;

  const double u0 = std::log(2.0);
  auto in_u = [&](double u) {
    const double t = -std::expm1(-u);
    return g(t) * std::exp(-(alpha + 1.0) * u);
  };
  double u1;
  double tail = 0.0;
  if (x < 1.0) {
    u1 = -std::log1p(-x);
  } else {
    // exp(-(alpha+1) u1) / (alpha+1) is the weight mass left above u1.
    u1 = 40.0 / (alpha + 1.0) + u0;
    tail = g(1.0) * std::exp(-(alpha + 1.0) * u1) / (alpha + 1.0);
  }
  const QuadResult upper = integrate_checked(in_u, u0, u1, params, what);
  total.value += upper.value + tail;
  total.error += upper.error + std::abs(tail);
  total.evals += upper.evals;
  return total;
}

}  // namespace mixedmeans
