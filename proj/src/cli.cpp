#include "mixedmeans/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <vector>

#include <CLI11.hpp>

#include "mixedmeans/convexity.hpp"
#include "mixedmeans/error.hpp"
#include "mixedmeans/report_io.hpp"
#include "mixedmeans/verify.hpp"
#include "mixedmeans/weights.hpp"

namespace mixedmeans {

namespace {

[[noreturn]] void bad_spec(const std::string& spec, const std::string& why) {
  throw Error(ErrorKind::InvalidInput, "cannot parse function '" + spec + "': " + why);
}

double parse_real(const std::string& text, const std::string& spec) {
  if (text.empty()) bad_spec(spec, "missing number");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(v)) bad_spec(spec, "bad number '" + text + "'");
  return v;
}

// "2", "-1.5e-3", "3i", "-i", "1+2i", "(1-2i)".
Complex parse_complex(std::string text, const std::string& spec) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  if (text.empty()) bad_spec(spec, "empty coefficient");
  if (text.back() != 'i') return {parse_real(text, spec), 0.0};
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : text.substr(0, split);
  std::string im = split == std::string::npos ? text : text.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, spec), parse_real(im, spec)};
}

PowerSeries parse_polynomial(const std::string& spec) {
  std::string s;
  for (char c : spec) {
    if (c != ' ') s += c;
  }
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char c = s[k];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    const bool sign = (c == '+' || c == '-') && depth == 0 && k > 0 && s[k - 1] != '^' &&
                      !((s[k - 1] == 'e' || s[k - 1] == 'E') && k > 1 &&
                        std::isdigit(static_cast<unsigned char>(s[k - 2])));
    if (sign) {
      terms.push_back(cur);
      cur.clear();
    }
    cur += c;
  }
  terms.push_back(cur);

  std::vector<Complex> coeffs(1, 0.0);
  for (std::string term : terms) {
    double sign = 1.0;
    if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      if (term[0] == '-') sign = -1.0;
      term.erase(0, 1);
    }
    if (term.empty()) bad_spec(spec, "empty term");
    const std::size_t zpos = term.find('z');
    Complex c;
    int power = 0;
    if (zpos == std::string::npos) {
      c = parse_complex(term, spec);
    } else {
      std::string coef = term.substr(0, zpos);
      if (!coef.empty() && coef.back() == '*') coef.pop_back();
      c = coef.empty() ? Complex(1.0) : parse_complex(coef, spec);
      const std::string rest = term.substr(zpos + 1);
      if (rest.empty()) {
        power = 1;
      } else if (rest[0] == '^') {
        const double p = parse_real(rest.substr(1), spec);
        if (p < 0 || p != std::floor(p) || p > 4096) bad_spec(spec, "exponent must be a small nonnegative integer");
        power = static_cast<int>(p);
      } else {
        bad_spec(spec, "unexpected '" + rest + "'");
      }
    }
    if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(static_cast<std::size_t>(power) + 1, 0.0);
    coeffs[static_cast<std::size_t>(power)] += sign * c;
  }
  return PowerSeries(std::move(coeffs));
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  g.back() = hi;
  return g;
}

std::vector<MeansRow> compute_means(const RunConfig& c, const PowerSeries& f) {
  const WeightParams params(c.alpha, c.beta);
  QuadratureParams quad;
  quad.rel_tol = c.quad_rel_tol;
  const bool with_length = length_hypothesis_holds(f);
  std::vector<MeansRow> rows;
  for (double r : linear_grid(c.r_min, c.r_max, c.grid_points)) {
    MeansRow row;
    row.r = r;
    row.phi_area = mixed_ratio(Kind::Area, f, r, c.beta, quad).value;
    const MeanValue a = weighted_mean(Kind::Area, f, params, r, quad);
    row.mean_area = a.value;
    row.err_area = a.error_bound;
    if (with_length) {
      row.phi_length = mixed_ratio(Kind::Length, f, r, c.beta, quad).value;
      const MeanValue l = weighted_mean(Kind::Length, f, params, r, quad);
      row.mean_length = l.value;
      row.err_length = l.error_bound;
    }
    rows.push_back(row);
  }
  return rows;
}

int emit_reports(const RunConfig& c, const std::vector<CheckReport>& reports, std::ostream& os,
                 std::ostream& err, const char* command) {
  if (c.format == OutputFormat::Structured) {
    write_reports_json(os, reports, command);
  } else {
    write_reports_csv(os, reports);
  }
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (r.failed()) {
      ++failed;
      err << "FAIL " << r.check_id << '\n';
    }
  }
  err << reports.size() - failed << '/' << reports.size() << " checks without failure\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

PowerSeries parse_function_spec(const std::string& spec) {
  if (spec == "paper_area_example") return PowerSeries({0.0, 1.0, 0.5});
  if (spec == "paper_length_example") return PowerSeries({8.0, 12.0, 6.0, 1.0});
  if (spec == "identity") return PowerSeries({0.0, 1.0});
  if (spec.rfind("monomial:", 0) == 0) {
    const double n = parse_real(spec.substr(9), spec);
    if (n < 1 || n != std::floor(n) || n > 4096) bad_spec(spec, "monomial degree must be a positive integer");
    return PowerSeries::monomial(0.0, 1.0, static_cast<int>(n));
  }
  if (spec.find('z') != std::string::npos) return parse_polynomial(spec);
  std::vector<Complex> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = spec.find(',', start);
    std::string tok = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::string trimmed;
    for (char ch : tok) {
      if (ch != ' ') trimmed += ch;
    }
    coeffs.push_back(parse_complex(trimmed, spec));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return PowerSeries(std::move(coeffs));
}

void validate(const RunConfig& c) {
  auto fail = [](const std::string& m) { throw Error(ErrorKind::InvalidInput, m); };
  if (!(c.r_min > 0.0 && c.r_max < 1.0 && c.r_min < c.r_max)) fail("need 0 < r_min < r_max < 1");
  if (c.grid_points < 2) fail("grid needs at least 2 points");
  if (!(c.beta >= 0.0 && c.beta <= 1.0)) fail("beta must lie in [0, 1]");
  if (!std::isfinite(c.alpha)) fail("alpha must be finite");
  if (!(c.quad_rel_tol > 0.0) || !(c.scan_tol > 0.0)) fail("tolerances must be positive");
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
    std::ofstream file;
    if (!c.output_path.empty()) {
      file.open(c.output_path, std::ios::binary);
      if (!file) throw Error(ErrorKind::InvalidInput, "cannot open output file " + c.output_path);
    }
    std::ostream& os = c.output_path.empty() ? out : file;

    switch (c.command) {
      case Command::Means: {
        const PowerSeries f = parse_function_spec(c.function_spec);
        const auto rows = compute_means(c, f);
        if (c.format == OutputFormat::Structured) {
          write_means_json(os, rows);
        } else {
          write_means_csv(os, rows);
        }
        return kExitOk;
      }
      case Command::Scan: {
        const PowerSeries f = parse_function_spec(c.function_spec);
        if (c.kind == Kind::Length && !length_hypothesis_holds(f)) {
          throw Error(ErrorKind::InvalidInput,
                      "length means are only defined for univalent or monomial maps");
        }
        const WeightParams params(c.alpha, c.beta);
        std::vector<double> grid = default_scan_grid();
        if (c.grid_given) {
          grid = linear_grid(c.r_min, c.r_max, c.grid_points);
          for (double& x : grid) x *= x;
        }
        const ConvexityReport rep = scan_indicator(
            [&](double x) { return mean_indicator(c.kind, f, params, x); }, grid, c.scan_tol);
        if (c.format == OutputFormat::Structured) {
          write_scan_json(os, rep);
        } else {
          write_scan_csv(os, rep);
        }
        return kExitOk;
      }
      case Command::Verify:
        return emit_reports(c, run_default_suite(), os, err, "verify");
      case Command::Examples:
        return emit_reports(c, reproduce_examples(), os, err, "examples");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidInput || e.kind() == ErrorKind::Domain ? kExitUsage
                                                                                : kExitCheckFailed;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted integral means of mixed areas and lengths"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "csv";
  std::string kind = "area";

  auto add_function = [&](CLI::App* sub) {
    sub->add_option("--f,--function", c.function_spec, "builtin, coefficient list or polynomial in z");
    sub->add_option("--alpha", c.alpha, "weight exponent");
    sub->add_option("--beta", c.beta, "mixing exponent in [0, 1]");
    sub->add_option("--r-min", c.r_min);
    sub->add_option("--r-max", c.r_max);
    sub->add_option("--rel-tol", c.quad_rel_tol, "quadrature relative tolerance");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or structured (json)")
        ->check(CLI::IsMember({"csv", "structured", "json"}));
    sub->add_option("-o,--output", c.output_path, "write to this file instead of stdout");
  };

  CLI::App* means = app.add_subcommand("means", "tabulate mixed ratios and weighted means");
  add_function(means);
  add_output(means);
  means->add_option("--grid", c.grid_points, "number of radii");

  CLI::App* scan = app.add_subcommand("scan", "log-log convexity scan of a weighted mean");
  add_function(scan);
  add_output(scan);
  CLI::Option* scan_grid = scan->add_option("--grid", c.grid_points, "radii r, scanned at x = r^2");
  scan->add_option("--kind", kind, "area or length")->check(CLI::IsMember({"area", "length"}));
  scan->add_option("--tol", c.scan_tol, "certification tolerance");

  CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
  add_output(verify);
  CLI::App* examples = app.add_subcommand("examples", "reproduce the worked examples");
  add_output(examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (means->parsed()) c.command = Command::Means;
  if (scan->parsed()) c.command = Command::Scan;
  if (verify->parsed()) c.command = Command::Verify;
  if (examples->parsed()) c.command = Command::Examples;
  c.grid_given = scan->parsed() && scan_grid->count() > 0;
  c.kind = kind == "length" ? Kind::Length : Kind::Area;
  c.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Structured;
  return dispatch(c, out, err);
}

}  // namespace mixedmeans
