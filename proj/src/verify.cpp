#include "mixedmeans/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "mixedmeans/error.hpp"
#include "verify_internal.hpp"

namespace mixedmeans {

namespace {

constexpr double kPi = std::numbers::pi;

const char* kind_name(Kind k) { return k == Kind::Area ? "area" : "length"; }

std::string check_id(const char* base, Kind kind, const PowerSeries& f,
                     const WeightParams* params) {
  std::string id = std::string(base) + "." + kind_name(kind) + "[f=" + describe(f);
  if (params) id += ",alpha=" + detail::fmt(params->alpha()) + ",beta=" + detail::fmt(params->beta());
  return id + "]";
}

double leading_modulus(const PowerSeries& f) { return std::abs(f.coeff(f.leading_index())); }

double mean_of(Kind kind, const PowerSeries& f, const WeightParams& params, double r,
               MeanRoute route = MeanRoute::Auto) {
  return weighted_mean(kind, f, params, r, {}, route).value;
}

}  // namespace

namespace detail {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool is_flat(const PowerSeries& f, double beta) {
  if (f.is_constant()) return true;
  return beta == 1.0 && f.is_monomial() && f.leading_index() == 1;
}

Recorder::Recorder(std::string id) { report_.check_id = std::move(id); }

void Recorder::add(std::string input, double expected, double got, double tolerance,
                   Relation relation) {
  Witness w{std::move(input), expected, got, tolerance, relation};
  ++compared_;
  if (w.violated()) {
    ++violated_;
    if (kept_violations_ < kMaxViolations) {
      ++kept_violations_;
      report_.witnesses.push_back(std::move(w));
    }
  } else if (kept_passing_ < kMaxPassing) {
    ++kept_passing_;
    report_.witnesses.push_back(std::move(w));
  }
}

void Recorder::note(const std::string& text) {
  if (!report_.notes.empty()) report_.notes += "; ";
  report_.notes += text;
}

void Recorder::skip(const std::string& reason) {
  skipped_ = true;
  note(reason);
}

CheckReport Recorder::finish() {
  if (violated_ > 0) {
    report_.status = CheckStatus::Fail;
  } else if (skipped_ && compared_ == 0) {
    report_.status = CheckStatus::Skipped;
  } else {
    report_.status = CheckStatus::Pass;
  }
  if (compared_ > 0) {
    note(std::to_string(compared_) + " comparisons, " + std::to_string(violated_) + " violated");
  }
  return std::move(report_);
}

}  // namespace detail

using detail::fmt;
using detail::is_flat;
using detail::Recorder;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::AtMost: return "at_most";
    case Relation::Below: return "below";
    case Relation::AtLeast: return "at_least";
    case Relation::Above: return "above";
  }
  return "?";
}

bool Witness::violated() const {
  if (!std::isfinite(got)) return true;
  switch (relation) {
    case Relation::Equal: return !(std::abs(got - expected) <= tolerance);
    case Relation::AtMost: return !(got <= expected + tolerance);
    case Relation::Below: return !(got < expected - tolerance);
    case Relation::AtLeast: return !(got >= expected - tolerance);
    case Relation::Above: return !(got > expected + tolerance);
  }
  return true;
}

std::string describe(const PowerSeries& f) {
  std::string out;
  for (int k = 0; k <= f.order(); ++k) {
    const Complex c = f.coeff(k);
    if (std::abs(c) <= kCoefficientZero) continue;
    std::string coef;
    if (c.imag() == 0.0) {
      const double re = c.real();
      if (!out.empty()) out += re < 0 ? "-" : "+";
      else if (re < 0) out += "-";
      if (std::abs(re) != 1.0 || k == 0) coef = fmt(std::abs(re));
    } else {
      if (!out.empty()) out += "+";
      coef = "(" + fmt(c.real()) + (c.imag() < 0 ? "" : "+") + fmt(c.imag()) + "i)";
    }
    out += coef;
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::vector<double> default_r_grid(int points) {
  if (points < 2) throw Error(ErrorKind::InvalidInput, "grid needs at least 2 points");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) g[i] = 0.01 + 0.98 * i / (points - 1);
  return g;
}

bool any_failed(std::span<const CheckReport> reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.failed(); });
}

bool length_hypothesis_holds(const PowerSeries& f, int samples) {
  if (f.is_constant() || f.is_monomial()) return true;
  if (check_univalence(UnivalenceCriterion::Nehari, f, samples).status == CheckStatus::Pass) {
    return true;
  }
  const Complex a1 = f.coeff(1);
  if (std::abs(a1) <= kCoefficientZero) return false;
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  c[0] = 0.0;
  for (auto& v : c) v /= a1;
  return check_univalence(UnivalenceCriterion::Wedge, PowerSeries(std::move(c)), samples).status ==
         CheckStatus::Pass;
}

CheckReport check_schwarz(Kind kind, const PowerSeries& f, const WeightParams& params,
                          std::span<const double> r_grid) {
  Recorder rec(check_id("prop.schwarz", kind, f, &params));
  if (f.is_constant()) {
    rec.skip("constant map has no leading coefficient");
    return rec.finish();
  }
  if (kind == Kind::Length && !length_hypothesis_holds(f)) {
    rec.skip("length is only defined for univalent or monomial maps");
    return rec.finish();
  }
  const int n = f.leading_index();
  const double beta = params.beta();
  const double a = leading_modulus(f);
  const double lambda = kind == Kind::Area ? n - beta : 0.5 * (n - beta);
  const double bound = kind == Kind::Area ? std::pow(kPi, 1.0 - beta) * a * a
                                          : std::pow(2.0 * kPi, 1.0 - beta) * a;
  const bool monomial = f.is_monomial();

  auto scaled = [&](double r) {
    const double m = mean_of(kind, f, params, r, MeanRoute::Quadrature);
    return m * nu_alpha(params.alpha(), r) / f_lambda(lambda, params.alpha(), r * r);
  };
  for (double r : r_grid) {
    const double got = scaled(r);
    if (monomial) {
      rec.add("r=" + fmt(r), bound, got, 1e-9 * bound, Relation::Equal);
    } else {
      rec.add("r=" + fmt(r), bound, got, 1e-9 * bound, Relation::AtLeast);
    }
  }
  if (!monomial) {
    rec.add("strict r=0.5", bound, scaled(0.5), 1e-9 * bound, Relation::Above);
  }
  return rec.finish();
}

CheckReport check_monotone(Kind kind, const PowerSeries& f, const WeightParams& params,
                           std::span<const double> r_grid) {
  Recorder rec(check_id("thm.monotone", kind, f, &params));
  if (kind == Kind::Length && !length_hypothesis_holds(f)) {
    rec.skip("length is only defined for univalent or monomial maps");
    return rec.finish();
  }
  const bool flat = is_flat(f, params.beta());
  double prev = 0.0;
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double m = mean_of(kind, f, params, r_grid[i]);
    if (i > 0) {
      const double diff = m - prev;
      const std::string in = "r=" + fmt(r_grid[i - 1]) + ".." + fmt(r_grid[i]);
      if (flat) {
        rec.add(in, 0.0, diff, 1e-12, Relation::Equal);
      } else {
        rec.add(in, 0.0, diff, 1e-10, Relation::AtLeast);
        rec.add(in + " strict", 0.0, diff, 1e-12, Relation::Above);
      }
    }
    prev = m;
  }
  if (flat) rec.note("flat case: mean is constant in r");
  return rec.finish();
}

CheckReport check_lipschitz(Kind kind, const PowerSeries& f, const WeightParams& params,
                            std::span<const RadiusPair> pairs) {
  Recorder rec(check_id("thm.lipschitz", kind, f, &params));
  if (kind == Kind::Length && !length_hypothesis_holds(f)) {
    rec.skip("length is only defined for univalent or monomial maps");
    return rec.finish();
  }
  const double beta = params.beta();
  auto phi = [&](double t) { return detail::mixed_ratio_unchecked(kind, f, t, beta, {}).value; };

  // Boundedness of Phi along the tail towards the unit circle.
  const double p2 = phi(1.0 - 1e-2), p4 = phi(1.0 - 1e-4), p6 = phi(1.0 - 1e-6);
  if (!(std::isfinite(p2) && std::isfinite(p4) && std::isfinite(p6)) ||
      std::abs(p6 - p4) > 1e-2 * std::max(1.0, std::abs(p4))) {
    rec.skip("Phi does not settle near the unit circle");
    return rec.finish();
  }
  const double phi0 = mixed_ratio_at_zero(kind, f, beta);
  const double alpha = params.alpha();
  for (const RadiusPair& p : pairs) {
    if (!(p.r < p.s)) throw Error(ErrorKind::InvalidInput, "lipschitz pairs need r < s");
    const double mr = mean_of(kind, f, params, p.r);
    const double ms = mean_of(kind, f, params, p.s);
    const double dlog = std::log(nu_alpha(alpha, p.s)) - std::log(nu_alpha(alpha, p.r));
    const double ratio = (ms - mr) / dlog;
    const double noise = 1e-10 * std::max(1.0, std::abs(ms)) / dlog;
    const std::string in = "r=" + fmt(p.r) + ",s=" + fmt(p.s);
    rec.add(in + " lower", 0.0, ratio, noise, Relation::AtLeast);
    rec.add(in + " upper", phi(p.s) - phi0, ratio, 1e-8, Relation::AtMost);
  }
  return rec.finish();
}

CheckReport check_alpha_decrease(Kind kind, const PowerSeries& f, double beta,
                                 std::span<const double> alpha_grid) {
  Recorder rec(check_id("cor.alpha_decrease", kind, f, nullptr) + "[beta=" + fmt(beta) + "]");
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    if (!(alpha_grid[i] > -1.0) || (i > 0 && !(alpha_grid[i] > alpha_grid[i - 1]))) {
      throw Error(ErrorKind::InvalidInput, "alpha grid must be ascending and above -1");
    }
  }
  if (kind == Kind::Length && !length_hypothesis_holds(f)) {
    rec.skip("length is only defined for univalent or monomial maps");
    return rec.finish();
  }
  const bool flat = is_flat(f, beta);
  double prev = 0.0;
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    const double v = mean_at_one(kind, f, WeightParams(alpha_grid[i], beta)).value;
    if (i > 0) {
      const std::string in = "alpha=" + fmt(alpha_grid[i - 1]) + ".." + fmt(alpha_grid[i]);
      if (flat) {
        rec.add(in, prev, v, 1e-12 * std::max(1.0, std::abs(prev)), Relation::Equal);
      } else {
        rec.add(in, prev, v, 1e-10, Relation::AtMost);
        rec.add(in + " strict", prev, v, 1e-12, Relation::Below);
      }
    }
    prev = v;
  }
  return rec.finish();
}

CheckReport check_univalence(UnivalenceCriterion criterion, const PowerSeries& f, int samples) {
  const bool wedge = criterion == UnivalenceCriterion::Wedge;
  Recorder rec(std::string("lemma.univalence.") + (wedge ? "wedge" : "nehari") + "[f=" +
               describe(f) + "]");
  if (samples < 1000) throw Error(ErrorKind::InvalidInput, "univalence check needs >= 1000 samples");

  const PowerSeries d1 = f.derivative();
  const PowerSeries d2 = d1.derivative();
  const PowerSeries d3 = d2.derivative();
  if (wedge) {
    const double f0 = std::abs(f.coeff(0));
    const double g1 = std::abs(f.coeff(1) - Complex(1.0));
    rec.add("f(0)", 0.0, f0, 1e-14, Relation::Equal);
    rec.add("f'(0)-1", 0.0, g1, 1e-14, Relation::Equal);
    if (!(f0 <= 1e-14 && g1 <= 1e-14)) {
      rec.note("normalization f(0)=0, f'(0)=1 does not hold");
      return rec.finish();
    }
  }

  // Sunflower sample of the disk of radius 1 - 1e-3.
  constexpr double kRadius = 1.0 - 1e-3;
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  double worst_slack = std::numeric_limits<double>::infinity();
  Witness worst;
  for (int k = 0; k < samples; ++k) {
    const double rho = kRadius * std::sqrt((k + 0.5) / samples);
    const Complex z = std::polar(rho, golden * k);
    double value, bound;
    if (wedge) {
      const Complex fz = f.evaluate(z);
      value = std::abs(z * z * d1.evaluate(z) / (fz * fz) - 1.0);
      bound = 1.0;
    } else {
      const Complex p = d1.evaluate(z);
      const Complex q = d2.evaluate(z) / p;
      value = std::abs(d3.evaluate(z) / p - 1.5 * q * q);
      const double s = 1.0 - rho * rho;
      bound = 2.0 / (s * s);
    }
    if (!std::isfinite(value)) value = std::numeric_limits<double>::infinity();
    const std::string in = "z=" + fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i";
    if (wedge) {
      rec.add(in, bound, value, 0.0, Relation::Below);
    } else {
      rec.add(in, bound, value, 1e-12 * bound, Relation::AtMost);
    }
    const double slack = bound - value;
    if (slack < worst_slack || !std::isfinite(value)) {
      worst_slack = slack;
      worst = {in + " (tightest)", bound, value, wedge ? 0.0 : 1e-12 * bound,
               wedge ? Relation::Below : Relation::AtMost};
    }
  }
  rec.note(std::to_string(samples) + " disk samples up to radius 1-1e-3");
  CheckReport out = rec.finish();
  out.witnesses.push_back(worst);
  return out;
}

CheckReport check_small_radius_limit(Kind kind, const PowerSeries& f, const WeightParams& params,
                                     std::optional<SmallRadiusBounds> fixed, double r) {
  Recorder rec(check_id("thm.small_radius", kind, f, &params));
  if (kind == Kind::Length && !length_hypothesis_holds(f)) {
    rec.skip("length is only defined for univalent or monomial maps");
    return rec.finish();
  }
  const double beta = params.beta();
  const double d = std::abs(f.coeff(1));
  const double limit = beta < 1.0 ? 0.0 : (kind == Kind::Area ? d * d : d);
  const double m = mean_of(kind, f, params, r);
  if (fixed) {
    if (beta == 1.0) {
      rec.add("r=" + fmt(r), limit, m, fixed->tol_beta_one, Relation::Equal);
    } else {
      rec.add("r=" + fmt(r), 0.0, m, fixed->cap_small_beta, Relation::AtMost);
    }
    return rec.finish();
  }
  // The deviation from the limit vanishes like a positive power of r, at
  // least r^2 (area) or r (length) when beta = 1. Shrinking r to r^2 must
  // shrink it accordingly, up to quadrature noise.
  const double m2 = mean_of(kind, f, params, r * r);
  double rate;
  if (kind == Kind::Area) {
    rate = beta < 1.0 ? std::pow(r, 2.0 - 2.0 * beta) : r * r;
  } else {
    rate = beta < 1.0 ? std::pow(r, 1.0 - beta) : r;
  }
  const double noise = 1e-10 * std::max(1.0, limit);
  rec.add("deviation at r=" + fmt(r * r) + " vs r=" + fmt(r), 0.0, std::abs(m2 - limit),
          2.0 * rate * std::abs(m - limit) + noise, Relation::AtMost);
  return rec.finish();
}

CheckReport check_limit_at_boundary(Kind kind, const PowerSeries& f, const WeightParams& params) {
  Recorder rec(check_id("cor.divergent_norm", kind, f, &params));
  const double alpha = params.alpha();
  if (alpha > -1.0) throw Error(ErrorKind::InvalidInput, "divergent-norm check needs alpha <= -1");
  if (kind == Kind::Length && !length_hypothesis_holds(f)) {
    rec.skip("length is only defined for univalent or monomial maps");
    return rec.finish();
  }
  const double beta = params.beta();
  const double phi1 = detail::mixed_ratio_unchecked(kind, f, 1.0, beta, {}).value;
  const double r_mid = 0.9, r_near = 1.0 - 1e-2, r_far = 1.0 - 1e-6;
  auto mass = [&](double r) { return mean_of(kind, f, params, r) * nu_alpha(alpha, r); };
  if (f.is_constant()) {
    rec.add("integral at r=" + fmt(r_far), 0.0, mass(r_far), 0.0, Relation::Equal);
    return rec.finish();
  }
  // The unnormalised integral grows without bound.
  rec.add("integral growth " + fmt(r_near) + " -> " + fmt(r_far), 2.0 * mass(r_near), mass(r_far),
          0.0, Relation::AtLeast);
  // The means stay below Phi(f, 1) and approach it.
  const double tol = 1e-10 * std::max(1.0, phi1);
  double gap_mid = 0.0, gap_far = 0.0;
  for (double r : {0.5, r_mid, r_near, 1.0 - 1e-4, r_far}) {
    const double m = mean_of(kind, f, params, r);
    rec.add("mean <= Phi(1) at r=" + fmt(r), phi1, m, tol, Relation::AtMost);
    if (r == r_mid) gap_mid = phi1 - m;
    if (r == r_far) gap_far = phi1 - m;
  }
  rec.add("gap shrinks " + fmt(r_mid) + " -> " + fmt(r_far), 0.5 * gap_mid, gap_far, tol,
          Relation::AtMost);
  return rec.finish();
}

CheckReport check_bounded_by_boundary_mean(Kind kind, const PowerSeries& f,
                                           const WeightParams& params,
                                           std::span<const double> r_grid) {
  Recorder rec(check_id("cor.bounded_mean", kind, f, &params));
  if (!(params.alpha() > -1.0)) {
    throw Error(ErrorKind::InvalidInput, "bounded-mean check needs alpha > -1");
  }
  if (kind == Kind::Length && !length_hypothesis_holds(f)) {
    rec.skip("length is only defined for univalent or monomial maps");
    return rec.finish();
  }
  const double top = mean_at_one(kind, f, params).value;
  const double tol = 1e-10 * std::max(1.0, top);
  const bool flat = is_flat(f, params.beta());
  for (double r : r_grid) {
    const double m = mean_of(kind, f, params, r);
    rec.add("r=" + fmt(r), top, m, tol, flat ? Relation::Equal : Relation::AtMost);
  }
  if (!flat) rec.add("strict r=0.5", top, mean_of(kind, f, params, 0.5), 1e-12, Relation::Below);
  return rec.finish();
}

CheckReport check_geometry_schwarz(Kind kind, const PowerSeries& f, std::span<const double> r_grid) {
  Recorder rec(check_id("lemma.coefficient_bound", kind, f, nullptr));
  if (f.is_constant()) {
    rec.skip("constant map has no leading coefficient");
    return rec.finish();
  }
  if (kind == Kind::Length && !length_hypothesis_holds(f)) {
    rec.skip("length is only defined for univalent or monomial maps");
    return rec.finish();
  }
  const int n = f.leading_index();
  const double a = leading_modulus(f);
  auto bound = [&](double r) {
    return kind == Kind::Area ? kPi * std::pow(r, 2 * n) * a * a : 2.0 * kPi * std::pow(r, n) * a;
  };
  auto value = [&](double r) {
    return kind == Kind::Area ? area(f, r).value : length_boundary(f, r).value;
  };
  const bool monomial = f.is_monomial();
  for (double r : r_grid) {
    const double b = bound(r);
    rec.add("r=" + fmt(r), b, value(r), 1e-10 * b, monomial ? Relation::Equal : Relation::AtLeast);
  }
  if (!monomial) rec.add("strict r=0.5", bound(0.5), value(0.5), 1e-10 * bound(0.5), Relation::Above);
  return rec.finish();
}

CheckReport check_ratio_monotone(Kind kind, const PowerSeries& f, double beta,
                                 std::span<const double> r_grid) {
  Recorder rec(check_id("lemma.ratio_monotone", kind, f, nullptr) + "[beta=" + fmt(beta) + "]");
  if (kind == Kind::Length && !length_hypothesis_holds(f)) {
    rec.skip("length is only defined for univalent or monomial maps");
    return rec.finish();
  }
  const bool flat = is_flat(f, beta);
  double prev = mixed_ratio_at_zero(kind, f, beta);
  double prev_r = 0.0;
  for (double r : r_grid) {
    const double v = mixed_ratio(kind, f, r, beta).value;
    const std::string in = "r=" + fmt(prev_r) + ".." + fmt(r);
    const double tol = 1e-12 * std::max(1.0, std::abs(v));
    if (flat) {
      rec.add(in, prev, v, tol, Relation::Equal);
    } else {
      rec.add(in, prev, v, tol, Relation::Above);
    }
    prev = v;
    prev_r = r;
  }
  return rec.finish();
}

CheckReport check_isoperimetric(const PowerSeries& f, std::span<const double> r_grid) {
  Recorder rec("lemma.isoperimetric[f=" + describe(f) + "]");
  if (!length_hypothesis_holds(f)) {
    rec.skip("length is only defined for univalent or monomial maps");
    return rec.finish();
  }
  for (double r : r_grid) {
    const double a = mixed_ratio(Kind::Area, f, r, 1.0).value;
    const double l = mixed_ratio(Kind::Length, f, r, 1.0).value;
    rec.add("r=" + fmt(r), l * l, a, 1e-10 * std::max(1.0, l * l), Relation::AtMost);
  }
  return rec.finish();
}

}  // namespace mixedmeans
