#include "mixedmeans/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixedmeans/error.hpp"

namespace mixedmeans {
namespace {

QuadratureParams tight() {
  QuadratureParams q;
  q.rel_tol = 1e-12;
  q.abs_tol = 1e-300;
  return q;
}

// Numerator of D(P) over the denominator P^2.
RationalPoly d_numerator(const RationalPoly& p) {
  const RationalPoly d1 = p.derivative();
  const RationalPoly d2 = d1.derivative();
  const RationalPoly x = RationalPoly::x_power(1);
  return d1 * p + x * d2 * p - x * d1 * d1;
}

// G_e(x) = integral_0^x (x^e - t^e) (1-t)^alpha dt.
double gap_integral(double e, double alpha, double x) {
  const double log_x = std::log(x);
  const double xe = std::exp(e * log_x);
  auto g = [=](double t) {
    if (t <= 0.0) return xe;
    return -xe * std::expm1(e * (std::log(t) - log_x));
  };
  return integrate_against_weight(g, alpha, x, tight(), "delta").value;
}

double second_difference(const RealFn& phi, double u, double k) {
  return (-phi(u + 2 * k) + 16 * phi(u + k) - 30 * phi(u) + 16 * phi(u - k) - phi(u - 2 * k)) /
         (12 * k * k);
}

Verdict verdict_from(const std::vector<GridSample>& grid, double tol) {
  bool all_nonneg = true, all_nonpos = true, pos = false, neg = false;
  for (const auto& s : grid) {
    if (s.indicator < -tol) all_nonneg = false;
    if (s.indicator > tol) all_nonpos = false;
    if (s.certified_sign > 0) pos = true;
    if (s.certified_sign < 0) neg = true;
  }
  if (all_nonneg) return Verdict::Convex;
  if (all_nonpos) return Verdict::Concave;
  if (pos && neg) return Verdict::Neither;
  return Verdict::Inconclusive;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Convex: return "convex";
    case Verdict::Concave: return "concave";
    case Verdict::Neither: return "neither";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

double d_notation_numeric(const RealFn& F, double x, double h) {
  if (!(x > 0.0 && x < 1.0)) throw Error(ErrorKind::Domain, "d_notation_numeric: x must lie in (0, 1)");
  const double k = h > 0.0 ? h : std::min(1e-2, -0.25 * std::log(x));
  if (!(x * std::exp(2 * k) < 1.0)) {
    throw Error(ErrorKind::Domain, "d_notation_numeric: stencil leaves (0, 1)");
  }
  const double u = std::log(x);
  auto phi = [&](double v) {
    const double val = F(std::exp(v));
    if (!(val > 0.0)) throw Error(ErrorKind::Domain, "d_notation_numeric: F must be positive");
    return std::log(val);
  };
  const double coarse = second_difference(phi, u, k);
  const double fine = second_difference(phi, u, 0.5 * k);
  return (16.0 * fine - coarse) / 15.0 / x;
}

RationalFunc d_notation_rational(const RationalFunc& R) {
  if (R.is_zero()) throw Error(ErrorKind::InvalidInput, "D-notation of the zero function");
  const RationalPoly& p = R.numerator();
  const RationalPoly& q = R.denominator();
  // D(P/Q) = D(P) - D(Q) = (N_P Q^2 - N_Q P^2) / (P^2 Q^2).
  const RationalPoly p2 = p * p;
  const RationalPoly q2 = q * q;
  return RationalFunc(d_numerator(p) * q2 - d_numerator(q) * p2, p2 * q2);
}

RationalPoly sign_core(const RationalFunc& d) {
  RationalPoly core = d.numerator().shift_down(d.numerator().x_valuation()).primitive();
  if (sign(d.denominator().evaluate(BigRational(1, 2))) < 0) core = BigRational(-1) * core;
  return core;
}

double ratio_d_notation(std::span<const PowerTerm> terms, double alpha, double x) {
  if (!(x > 0.0 && x < 1.0)) throw Error(ErrorKind::Domain, "x must lie in (0, 1)");
  const double f0 = nu_alpha(alpha, std::sqrt(x));
  const double w = std::pow(1.0 - x, alpha);
  double n = 0.0, n_prime_over_w = 0.0, s = 0.0, s_prime = 0.0;
  for (const auto& t : terms) {
    if (t.exponent < 0.0) throw Error(ErrorKind::InvalidInput, "negative exponent in mean expansion");
    n += t.coef * f_lambda(t.exponent, alpha, x);
    const double xe = std::pow(x, t.exponent);
    n_prime_over_w += t.coef * xe;
    if (t.exponent > 0.0) {
      s += t.coef * gap_integral(t.exponent, alpha, x);
      s_prime += t.coef * t.exponent * (xe / x) * f0;
    }
  }
  if (s == 0.0) return 0.0;
  const double d = w * s / (n * f0);
  const double q_n = w * n_prime_over_w / n;
  const double q_0 = w / f0;
  return d * (1.0 + x * (-alpha / (1.0 - x) + s_prime / s - q_n - q_0));
}

double delta(double lambda, double alpha, double x) {
  if (!(lambda >= 0.0)) throw Error(ErrorKind::InvalidInput, "delta: lambda must be >= 0");
  const PowerTerm t{1.0, lambda};
  return ratio_d_notation({&t, 1}, alpha, x);
}

double delta_limit(double lambda, double alpha) {
  if (alpha == -2.0 || alpha == -3.0) {
    throw Error(ErrorKind::SingularParameter, "delta_limit: alpha = " +
                                                  std::to_string(static_cast<int>(alpha)) +
                                                  " is a pole of the limit formula");
  }
  return lambda * (alpha + 1.0) * (lambda + 2.0 + alpha) /
         ((alpha + 2.0) * (alpha + 2.0) * (alpha + 3.0));
}

double mean_indicator(Kind kind, const PowerSeries& f, const WeightParams& params, double x) {
  const auto terms = ratio_power_terms(kind, f, params.beta());
  return x * ratio_d_notation(terms, params.alpha(), x);
}

std::vector<SignInterval> sign_changes(const RationalPoly& p, const BigRational& lo,
                                       const BigRational& hi) {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidInput, "sign_changes: need lo < hi");
  std::vector<SignInterval> out;
  if (p.degree() <= 0) return out;

  std::vector<RationalPoly> derivs{p};
  while (derivs.back().degree() > 0) derivs.push_back(derivs.back().derivative());

  constexpr int kMaxDepth = 40;
  const BigRational min_width = (hi - lo) / BigRational(BigInt(1) << kMaxDepth);

  // Taylor expansion of q about m: q(m + t) = sum c_k t^k. If |c_0| exceeds
  // sum_{k>=1} |c_k| h^k then q has no zero on [m - h, m + h].
  auto taylor_excludes_zero = [](const RationalPoly& q, const BigRational& a,
                                 const BigRational& b) {
    const BigRational m = (a + b) / 2;
    const BigRational h = (b - a) / 2;
    RationalPoly d = q;
    BigRational factorial = 1;
    BigRational c0 = q.evaluate(m);
    if (c0 < 0) c0 = -c0;
    BigRational bound = 0, hk = 1;
    for (int k = 1; k <= q.degree(); ++k) {
      d = d.derivative();
      factorial *= k;
      hk *= h;
      BigRational ck = d.evaluate(m) / factorial;
      if (ck < 0) ck = -ck;
      bound += ck * hk;
    }
    return c0 > bound;
  };

  // True when derivs[level] has no zero on [a, b]: equal nonzero end signs and
  // either a Taylor remainder bound or strict monotonicity (next level).
  auto nonvanishing = [&](auto&& self, std::size_t level, const BigRational& a,
                          const BigRational& b) -> bool {
    const RationalPoly& q = derivs[level];
    if (q.degree() <= 0) return !q.is_zero();
    const int sa = sign(q.evaluate(a));
    const int sb = sign(q.evaluate(b));
    if (sa == 0 || sb == 0 || sa != sb) return false;
    return taylor_excludes_zero(q, a, b) || self(self, level + 1, a, b);
  };

  auto isolate = [&](auto&& self, const BigRational& a, const BigRational& b, int depth) -> void {
    const int sa = sign(p.evaluate(a));
    const int sb = sign(p.evaluate(b));
    if (nonvanishing(nonvanishing, 1, a, b)) {
      if (sa * sb < 0) {
        BigRational l = a, h = b;
        while (h - l > min_width) {
          const BigRational m = (l + h) / 2;
          const int sm = sign(p.evaluate(m));
          if (sm == 0) {
            l = h = m;
            break;
          }
          (sm == sa ? l : h) = m;
        }
        out.push_back({l, h, sa, sb, true});
      } else if (sb == 0 && b != hi && sa != 0) {
        out.push_back({b, b, sa, -sa, true});
      }
      return;
    }
    if (depth >= kMaxDepth) {
      if (sa * sb < 0) out.push_back({a, b, sa, sb, false});
      return;
    }
    const BigRational m = (a + b) / 2;
    self(self, a, m, depth + 1);
    self(self, m, b, depth + 1);
  };
  isolate(isolate, lo, hi, 0);
  return out;
}

std::vector<double> default_scan_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 99; ++i) g.push_back(i / 100.0);
  g.push_back(0.995);
  g.push_back(0.999);
  return g;
}

ConvexityReport scan_indicator(const RealFn& indicator, std::span<const double> grid, double tol) {
  ConvexityReport rep;
  rep.grid.reserve(grid.size());
  for (double x : grid) {
    const double v = indicator(x);
    const int s = v > 10 * tol ? 1 : (v < -10 * tol ? -1 : 0);
    rep.grid.push_back({x, v, s});
  }
  rep.verdict = verdict_from(rep.grid, tol);
  return rep;
}

ConvexityReport loglog_convexity_scan(const RealFn& F, std::span<const double> grid, double tol) {
  return scan_indicator([&](double x) { return x * d_notation_numeric(F, x); }, grid, tol);
}

ConvexityReport scan_rational(const RationalFunc& F, std::span<const double> grid) {
  const RationalFunc d = d_notation_rational(F);
  const RationalPoly core = sign_core(d);
  ConvexityReport rep;
  for (double x : grid) {
    const BigRational xq(x);
    const BigRational ind = xq * d.evaluate(xq);
    rep.grid.push_back({x, ind.convert_to<double>(), sign(ind)});
  }
  rep.sign_changes = sign_changes(core, BigRational(0), BigRational(1));
  bool pos = false, neg = false;
  for (const auto& s : rep.grid) {
    pos = pos || s.certified_sign > 0;
    neg = neg || s.certified_sign < 0;
  }
  for (const auto& c : rep.sign_changes) {
    pos = pos || c.sign_lo > 0 || c.sign_hi > 0;
    neg = neg || c.sign_lo < 0 || c.sign_hi < 0;
  }
  if (rep.sign_changes.empty()) {
    // Constant sign on (0,1): read it off at the midpoint.
    const int s = sign(core.evaluate(BigRational(1, 2)));
    rep.verdict = s >= 0 ? Verdict::Convex : Verdict::Concave;
  } else {
    rep.verdict = pos && neg ? Verdict::Neither : Verdict::Inconclusive;
  }
  return rep;
}

}  // namespace mixedmeans
