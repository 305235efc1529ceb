#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "mixedmeans/convexity.hpp"
#include "mixedmeans/error.hpp"
#include "mixedmeans/rational.hpp"
#include "mixedmeans/verify.hpp"
#include "verify_internal.hpp"

namespace mixedmeans {

using detail::fmt;
using detail::Recorder;

namespace {

const char* kind_name(Kind k) { return k == Kind::Area ? "area" : "length"; }

RationalPoly integrate_from_zero(const RationalPoly& p) {
  std::vector<BigRational> c(p.coeffs().size() + 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[k + 1] = p.coeffs()[k] / BigRational(k + 1);
  return RationalPoly(std::move(c));
}

// Substitutes x -> x^c.
RationalPoly compose_power(const RationalPoly& p, int c) {
  std::vector<BigRational> out(static_cast<std::size_t>(std::max(0, c * p.degree() + 1)));
  for (int k = 0; k <= p.degree(); ++k) out[static_cast<std::size_t>(c * k)] = p.coeff(k);
  return RationalPoly(std::move(out));
}

RationalFunc compose_power(const RationalFunc& f, int c) {
  return RationalFunc(compose_power(f.numerator(), c), compose_power(f.denominator(), c));
}

std::optional<RationalPoly> halve_exponents(const RationalPoly& p) {
  std::vector<BigRational> out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k % 2 == 1) {
      if (p.coeff(k) != 0) return std::nullopt;
    } else {
      out.push_back(p.coeff(k));
    }
  }
  return RationalPoly(std::move(out));
}

// Exact square root of a polynomial with q(0) = 1, when one exists.
std::optional<RationalPoly> exact_sqrt_unit(const RationalPoly& p) {
  if (p.coeff(0) != 1 || p.degree() % 2 != 0) return std::nullopt;
  const int m = p.degree() / 2;
  std::vector<BigRational> q(static_cast<std::size_t>(m + 1));
  q[0] = 1;
  for (int k = 1; k <= m; ++k) {
    BigRational s = p.coeff(k);
    for (int j = 1; j < k; ++j) s -= q[j] * q[k - j];
    q[k] = s / 2;
  }
  RationalPoly root(q);
  if (!(root * root == p)) return std::nullopt;
  return root;
}

}  // namespace

// Weighted mean of z -> sum a_k z^k with integer coefficients, alpha a
// nonnegative integer and beta in {0, 1}, as an exact function of r divided
// by pi^(1-beta) (area) or (2 pi)^(1-beta) (length).
RationalFunc exact_mean_over_constant(Kind kind, const std::vector<long long>& a, int beta,
                                      int alpha) {
  if (alpha < 0 || (beta != 0 && beta != 1)) {
    throw Error(ErrorKind::InvalidInput, "exact means need integer alpha >= 0 and beta in {0, 1}");
  }
  RationalPoly phi;  // Phi(t) divided by the constant, in t.
  if (kind == Kind::Area) {
    for (std::size_t n = 1; n < a.size(); ++n) {
      const BigRational c = BigRational(static_cast<long long>(n)) * a[n] * a[n];
      phi = phi + c * RationalPoly::x_power(static_cast<int>(2 * n) - 2 * beta);
    }
  } else {
    std::vector<BigRational> d;
    for (std::size_t n = 1; n < a.size(); ++n) d.push_back(BigRational(static_cast<long long>(n) * a[n]));
    RationalPoly deriv(d);
    const BigRational d0 = deriv.coeff(0);
    if (d0 == 0) throw Error(ErrorKind::InvalidInput, "exact length mean needs f'(0) != 0");
    const auto root = exact_sqrt_unit(BigRational(1) / d0 * deriv);
    if (!root) throw Error(ErrorKind::InvalidInput, "f' is not a constant times a square");
    const BigRational scale = d0 < 0 ? BigRational(-d0) : d0;
    for (int n = 0; n <= root->degree(); ++n) {
      phi = phi + scale * root->coeff(n) * root->coeff(n) * RationalPoly::x_power(2 * n + 1 - beta);
    }
  }
  RationalPoly weight{1};
  for (int i = 0; i < alpha; ++i) weight = weight * RationalPoly{1, 0, -1};
  const RationalPoly two_t{0, 2};
  return RationalFunc(integrate_from_zero(phi * weight * two_t),
                      integrate_from_zero(weight * two_t));
}

CheckReport check_d_notation_properties() {
  Recorder rec("lemma.d_notation");
  std::mt19937_64 rng(0x5eed1234u);
  std::uniform_int_distribution<int> coef(1, 9), deg(1, 4);
  auto random_poly = [&] {
    std::vector<long long> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& v : c) v = coef(rng);
    std::vector<BigRational> q(c.begin(), c.end());
    return RationalPoly(std::move(q));
  };
  const RationalPoly x = RationalPoly::x_power(1);

  for (int trial = 0; trial < 12; ++trial) {
    const RationalFunc p(random_poly()), q(random_poly(), random_poly());
    const RationalFunc lhs = d_notation_rational(p * q);
    const RationalFunc rhs = d_notation_rational(p) + d_notation_rational(q);
    rec.add("additivity trial " + std::to_string(trial), 1.0, lhs == rhs ? 1.0 : 0.0, 0.0,
            Relation::Equal);
  }

  // F(x^c): x D(G)(x) = c^2 (y D(F)(y)) at y = x^c.
  for (int c : {2, 3}) {
    for (int trial = 0; trial < 4; ++trial) {
      const RationalFunc f(random_poly(), random_poly());
      const RationalFunc lhs = d_notation_rational(compose_power(f, c)) * RationalFunc(x);
      const RationalFunc inner = d_notation_rational(f) * RationalFunc(x);
      const RationalFunc rhs =
          RationalFunc(RationalPoly{c * c}) * compose_power(inner, c);
      rec.add("substitution c=" + std::to_string(c) + " trial " + std::to_string(trial), 1.0,
              lhs == rhs ? 1.0 : 0.0, 0.0, Relation::Equal);
    }
  }

  // Positive sums of log-log convex terms x^e (1 + x)^m stay log-log convex.
  for (int trial = 0; trial < 6; ++trial) {
    RationalPoly sum;
    for (int term = 0; term < 3; ++term) {
      RationalPoly t = BigRational(coef(rng)) * RationalPoly::x_power(deg(rng) - 1);
      for (int m = deg(rng); m > 0; --m) t = t * RationalPoly{1, 1};
      sum = sum + t;
    }
    const RationalFunc d = d_notation_rational(RationalFunc(sum));
    BigRational worst = 1;
    bool first = true;
    for (int k = 1; k < 64; ++k) {
      const BigRational v = d.evaluate(BigRational(k, 64));
      if (first || v < worst) worst = v;
      first = false;
    }
    rec.add("superposition trial " + std::to_string(trial), 0.0, static_cast<double>(worst), 0.0,
            Relation::AtLeast);
  }

  // The numeric stencil agrees with the cancellation-free form.
  for (double alpha : {-3.0, 0.5, 2.0}) {
    for (double x0 : {0.2, 0.7}) {
      const double lambda = 1.5;
      auto ratio = [&](double t) {
        return f_lambda(lambda, alpha, t) / f_lambda(0.0, alpha, t);
      };
      const double ref = delta(lambda, alpha, x0);
      rec.add("numeric alpha=" + fmt(alpha) + " x=" + fmt(x0), ref, d_notation_numeric(ratio, x0),
              1e-5 * std::max(1.0, std::abs(ref)), Relation::Equal);
    }
  }
  return rec.finish();
}

CheckReport check_convexity_regimes(Kind kind, double beta) {
  Recorder rec(std::string("thm.regimes.") + kind_name(kind) + "[beta=" + fmt(beta) + "]");
  const bool area = kind == Kind::Area;
  auto lambda_of = [&](int n) { return area ? n - beta : 0.5 * (n - beta); };
  auto monomial = [](int n) { return PowerSeries::monomial(0.0, 1.0, n); };

  // (i) alpha = -4: the witness map has a negative limit of Delta, a higher
  // power has a positive one.
  {
    const double alpha = -4.0;
    const int n_neg = beta < 1.0 ? 1 : 2;
    const double bound = area ? beta - 2.0 - alpha : beta - 4.0 - 2.0 * alpha;
    const int n_pos = static_cast<int>(std::floor(bound)) + 1;
    const double x_near = 1.0 - 1e-6;
    const WeightParams params(alpha, beta);
    for (auto [n, rel] : {std::pair{n_neg, Relation::Below}, std::pair{n_pos, Relation::Above}}) {
      const std::string tag = "(i) alpha=-4 n=" + std::to_string(n);
      rec.add(tag + " limit", 0.0, delta_limit(lambda_of(n), alpha), 0.0, rel);
      rec.add(tag + " x=1-1e-6", 0.0, mean_indicator(kind, monomial(n), params, x_near), 1e-9, rel);
    }
  }

  // (ii) alpha in [-3, 0], beta = 1: convex scans.
  if (beta == 1.0) {
    const auto grid = default_scan_grid();
    std::vector<std::pair<std::string, PowerSeries>> maps;
    for (int n = 1; n <= 5; ++n) maps.emplace_back("z^" + std::to_string(n), monomial(n));
    maps.emplace_back("z+0.5z^2", PowerSeries({0.0, 1.0, 0.5}));
    maps.emplace_back("(z+2)^3", PowerSeries({8.0, 12.0, 6.0, 1.0}));
    for (double alpha : {-3.0, -2.0, -1.0, 0.0}) {
      const WeightParams params(alpha, 1.0);
      for (const auto& [name, f] : maps) {
        if (!area && alpha == -3.0 && name == "z^2") {
          // Exponent 1/2 at alpha = -3: the indicator turns negative near x = 1,
          // so this monomial is recorded as a counterexample instead.
          rec.add("(ii) alpha=-3 f=z^2 indicator x=0.999 (counterexample)", 0.0,
                  mean_indicator(kind, f, params, 0.999), 1e-9, Relation::Below);
          rec.note("length z^2 at alpha=-3 is not log-log convex");
          continue;
        }
        const ConvexityReport rep = scan_indicator(
            [&](double x) { return mean_indicator(kind, f, params, x); }, grid, 1e-8);
        double lowest = rep.grid.front().indicator;
        for (const auto& s : rep.grid) lowest = std::min(lowest, s.indicator);
        const std::string tag = "(ii) alpha=" + fmt(alpha) + " f=" + name;
        rec.add(tag + " verdict convex", 1.0, rep.verdict == Verdict::Convex ? 1.0 : 0.0, 0.0,
                Relation::Equal);
        rec.add(tag + " min indicator", 0.0, lowest, 1e-8, Relation::AtLeast);
      }
    }
  } else {
    rec.note("(ii) concerns beta = 1 only");
  }

  // (iii) alpha > 0: Delta < 0 near x = 1, so monomial means are not convex.
  for (double alpha : {0.5, 1.0, 2.0}) {
    const WeightParams params(alpha, beta);
    for (int n = 1; n <= 5; ++n) {
      if (lambda_of(n) == 0.0) continue;  // linear map, beta = 1: constant mean
      rec.add("(iii) alpha=" + fmt(alpha) + " n=" + std::to_string(n) + " x=0.999", 0.0,
              mean_indicator(kind, monomial(n), params, 0.999), 1e-9, Relation::Below);
    }
  }
  if (beta == 1.0) rec.note("(iii) skips n=1: the linear map has a constant mean");
  return rec.finish();
}

namespace {

struct ExampleCase {
  Kind kind;
  int beta;
  RationalPoly closed_num;  // closed form = pi * closed_num / closed_den (beta = 0)
  RationalPoly closed_den;  // or closed_num / closed_den (beta = 1), in r
  RationalPoly g;           // expected numerator of the D-notation
  long long g_at_zero;
  long long g_at_one;
};

const std::vector<long long> kAreaMap{0, 2, 1};  // 2 (z + z^2/2): integer coefficients
const std::vector<long long> kLengthMap{8, 12, 6, 1};

std::vector<ExampleCase> example_cases() {
  return {
      {Kind::Area, 0, RationalPoly{0, 0, 12, 0, -4, 0, -3}, RationalPoly{24, 0, -12},
       RationalPoly{48, -288, 232, -72, 15}, 48, -65},
      {Kind::Area, 1, RationalPoly{12, 0, -3, 0, -2}, RationalPoly{12, 0, -6},
       RationalPoly{72, -192, 147, -48, 7}, 72, -14},
      {Kind::Length, 0, RationalPoly{0, 3360, 0, -1512, 0, -360}, RationalPoly{210, 0, -105},
       RationalPoly{3920, 0, -33600, 0, 28098, 0, -8400, 0, 1395}, 3920, -8587},
      {Kind::Length, 1, RationalPoly{24, 0, -9, 0, -2}, RationalPoly{2, 0, -1},
       RationalPoly{144, -384, 297, -96, 13}, 144, -26},
  };
}

}  // namespace

std::vector<CheckReport> reproduce_examples() {
  std::vector<CheckReport> out;
  const PowerSeries area_map({0.0, 1.0, 0.5});
  const PowerSeries length_map({8.0, 12.0, 6.0, 1.0});

  {
    CheckReport r = check_univalence(UnivalenceCriterion::Wedge, area_map, 10000);
    r.check_id = "example.area.univalence";
    out.push_back(std::move(r));
    r = check_univalence(UnivalenceCriterion::Nehari, length_map, 10000);
    r.check_id = "example.length.univalence";
    out.push_back(std::move(r));
  }

  const auto r_grid = default_r_grid(50);
  for (const ExampleCase& ex : example_cases()) {
    const bool area = ex.kind == Kind::Area;
    const PowerSeries& f = area ? area_map : length_map;
    const std::string base =
        std::string("example.") + kind_name(ex.kind) + "[beta=" + std::to_string(ex.beta) + "]";
    const WeightParams params(1.0, ex.beta);
    const double closed_scale = ex.beta == 0 ? std::numbers::pi : 1.0;
    const RationalFunc closed(ex.closed_num, ex.closed_den);

    // Closed form against generic quadrature, and against the exact derivation.
    {
      Recorder rec(base + ".closed_form");
      for (double r : r_grid) {
        const double expected = closed_scale * closed.evaluate(r);
        const double got = weighted_mean(ex.kind, f, params, r, {}, MeanRoute::Quadrature).value;
        rec.add("r=" + fmt(r), expected, got, 1e-9 * std::abs(expected), Relation::Equal);
      }
      // The area map is scaled by 2 to keep integer coefficients, so its means
      // scale by 4; the length constant (2 pi)^(1-beta) carries an extra 2 at beta = 0.
      const RationalFunc derived = exact_mean_over_constant(ex.kind, area ? kAreaMap : kLengthMap,
                                                            ex.beta, 1);
      const long long lhs_factor = (!area && ex.beta == 0) ? 2 : 1;
      const long long rhs_factor = area ? 4 : 1;
      const bool same = RationalFunc(RationalPoly{lhs_factor}) * derived ==
                        RationalFunc(RationalPoly{rhs_factor}) * closed;
      rec.add("exact derivation", 1.0, same ? 1.0 : 0.0, 0.0, Relation::Equal);
      if (area && ex.beta == 1) {
        const double m = weighted_mean(ex.kind, f, params, 1e-3, {}, MeanRoute::Quadrature).value;
        rec.add("r=1e-3 limit |f'(0)|^2", 1.0, m, 1e-4, Relation::Equal);
      }
      out.push_back(rec.finish());
    }

    // Exact D-notation numerator in x = r^2 where the mean is even, else in r.
    const RationalFunc derived =
        exact_mean_over_constant(ex.kind, area ? kAreaMap : kLengthMap, ex.beta, 1);
    const auto num_even = halve_exponents(derived.numerator());
    const auto den_even = halve_exponents(derived.denominator());
    const RationalFunc h = (num_even && den_even) ? RationalFunc(*num_even, *den_even) : derived;
    const RationalPoly core = sign_core(d_notation_rational(h));
    {
      Recorder rec(base + ".numerator");
      rec.note("numerator " + core.to_string());
      rec.add("degree", ex.g.degree(), core.degree(), 0.0, Relation::Equal);
      const int top = std::max(core.degree(), ex.g.degree());
      for (int k = 0; k <= top; ++k) {
        const bool same = core.coeff(k) == ex.g.coeff(k);
        rec.add("x^" + std::to_string(k), static_cast<double>(ex.g.coeff(k)),
                same ? static_cast<double>(ex.g.coeff(k)) : static_cast<double>(core.coeff(k)) + 0.5,
                0.0, Relation::Equal);
      }
      out.push_back(rec.finish());
    }
    {
      Recorder rec(base + ".sign_changes");
      const auto changes = sign_changes(core, BigRational(0), BigRational(1));
      rec.add("changes on (0,1)", 1.0, static_cast<double>(changes.size()), 0.0, Relation::Equal);
      for (const auto& c : changes) {
        rec.add("isolated in [" + fmt(static_cast<double>(c.lo)) + "," +
                    fmt(static_cast<double>(c.hi)) + "] unique",
                1.0, c.unique ? 1.0 : 0.0, 0.0, Relation::Equal);
      }
      const BigRational at0 = core.evaluate(BigRational(0));
      const BigRational at1 = core.evaluate(BigRational(1));
      rec.add("value at 0", static_cast<double>(ex.g_at_zero),
              at0 == ex.g_at_zero ? static_cast<double>(ex.g_at_zero) : static_cast<double>(at0) + 0.5,
              0.0, Relation::Equal);
      rec.add("value at 1", static_cast<double>(ex.g_at_one),
              at1 == ex.g_at_one ? static_cast<double>(ex.g_at_one) : static_cast<double>(at1) + 0.5,
              0.0, Relation::Equal);
      out.push_back(rec.finish());
    }
    {
      Recorder rec(base + ".verdict");
      const auto grid = default_scan_grid();
      const ConvexityReport exact = scan_rational(h, grid);
      rec.add("exact scan neither", 1.0, exact.verdict == Verdict::Neither ? 1.0 : 0.0, 0.0,
              Relation::Equal);
      const ConvexityReport numeric = scan_indicator(
          [&](double x) { return mean_indicator(ex.kind, f, params, x); }, grid, 1e-8);
      rec.add("numeric scan neither", 1.0, numeric.verdict == Verdict::Neither ? 1.0 : 0.0, 0.0,
              Relation::Equal);
      rec.note(std::string("exact ") + to_string(exact.verdict) + ", numeric " +
               to_string(numeric.verdict));
      out.push_back(rec.finish());
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return out;
}

}  // namespace mixedmeans
