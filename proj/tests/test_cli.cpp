#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "mixedmeans/cli.hpp"
#include "mixedmeans/error.hpp"

using namespace mixedmeans;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "mixedmeans");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

TEST_CASE("function specs") {
  const PowerSeries a = parse_function_spec("z+0.5*z^2");
  CHECK(a.coeff(1) == Complex(1.0));
  CHECK(a.coeff(2) == Complex(0.5));
  const PowerSeries b = parse_function_spec("8 + 12z + 6*z^2 + z^3");
  CHECK(b.coeff(0) == Complex(8.0));
  CHECK(b.coeff(3) == Complex(1.0));
  CHECK(parse_function_spec("1e-3*z - 2z^2").coeff(2) == Complex(-2.0));
  CHECK(parse_function_spec("(1+2i)*z").coeff(1) == Complex(1.0, 2.0));
  CHECK(parse_function_spec("0, 1, 0.5").coeff(2) == Complex(0.5));
  CHECK(parse_function_spec("1-2i,3i").coeff(0) == Complex(1.0, -2.0));
  CHECK(parse_function_spec("1-2i,3i").coeff(1) == Complex(0.0, 3.0));
  CHECK(parse_function_spec("monomial:3").is_monomial());
  CHECK(parse_function_spec("paper_length_example").coeff(2) == Complex(6.0));
  CHECK(parse_function_spec("identity").coeff(1) == Complex(1.0));
  CHECK_THROWS_AS(parse_function_spec("z^-1"), Error);
  CHECK_THROWS_AS(parse_function_spec("monomial:0"), Error);
  CHECK_THROWS_AS(parse_function_spec("1,,2"), Error);
  CHECK_THROWS_AS(parse_function_spec("q"), Error);
}

TEST_CASE("means table matches the closed form") {
  const Run r = run({"means", "--f", "z+0.5*z^2", "--alpha", "1", "--beta", "1", "--grid", "50"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 51);
  CHECK(rows[0] == std::vector<std::string>{"r", "phi_A", "phi_L", "mean_A", "mean_L", "err_A", "err_L"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 7);
    const double x = std::pow(std::stod(rows[i][0]), 2);
    const double expected = (12 - 3 * x - 2 * x * x) / (6 * (2 - x));
    CHECK(std::stod(rows[i][3]) == doctest::Approx(expected).epsilon(1e-9));
    CHECK_FALSE(rows[i][4].empty());
  }
}

TEST_CASE("identity map has constant normalised mean") {
  const Run r = run({"means", "--f", "z", "--alpha", "0", "--beta", "1"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][3]) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("undefined lengths are empty fields") {
  const Run r = run({"means", "--f", "z+2*z^2", "--grid", "3"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][2].empty());
  CHECK(rows[1][4].empty());
  CHECK(rows[1][6].empty());
  CHECK_FALSE(rows[1][3].empty());
}

TEST_CASE("output is byte identical across runs") {
  const Run a = run({"means", "--f", "paper_length_example", "--alpha", "-2", "--beta", "0.5"});
  const Run b = run({"means", "--f", "paper_length_example", "--alpha", "-2", "--beta", "0.5"});
  CHECK(a.out == b.out);
  CHECK(a.out.find(".") != std::string::npos);
}

TEST_CASE("scan emits a verdict footer") {
  const Run r = run({"scan", "--f", "paper_area_example", "--alpha", "1", "--beta", "0"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("x,indicator,certified_sign\n", 0) == 0);
  CHECK(r.out.find("# verdict: neither\n") != std::string::npos);
  const Run s = run({"scan", "--f", "monomial:2", "--alpha", "-1", "--beta", "1", "--format", "structured"});
  CHECK(s.out.find("\"verdict\": \"convex\"") != std::string::npos);
  CHECK(run({"scan", "--f", "z+2*z^2", "--kind", "length"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"means", "--beta", "2"}).code == kExitUsage);
  CHECK(run({"means", "--r-min", "0.5", "--r-max", "0.2"}).code == kExitUsage);
  CHECK(run({"means", "--grid", "1"}).code == kExitUsage);
  CHECK(run({"means", "--f", "nonsense"}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"means", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("examples command") {
  const Run r = run({"examples", "--format", "structured"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"failed\": 0") != std::string::npos);
  CHECK(r.out.find("example.length[beta=1].numerator") != std::string::npos);
}

TEST_CASE("dispatch validates the config") {
  RunConfig c;
  c.grid_points = 1;
  std::ostringstream out, err;
  CHECK(dispatch(c, out, err) == kExitUsage);
  CHECK(err.str().find("grid") != std::string::npos);
}
