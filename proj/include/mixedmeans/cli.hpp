#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "mixedmeans/geometry.hpp"
#include "mixedmeans/series.hpp"

namespace mixedmeans {

enum class Command { Means, Scan, Verify, Examples };
enum class OutputFormat { Csv, Structured };

struct RunConfig {
  Command command = Command::Means;
  std::string function_spec = "identity";
  double alpha = 0.0;
  double beta = 1.0;
  double r_min = 0.01;
  double r_max = 0.99;
  int grid_points = 50;
  bool grid_given = false;  // scan: use the r grid (x = r^2) instead of the default x grid
  Kind kind = Kind::Area;
  double quad_rel_tol = 1e-10;
  double scan_tol = 1e-8;
  std::string output_path;  // empty: standard output
  OutputFormat format = OutputFormat::Csv;
};

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Named builtins (paper_area_example, paper_length_example, identity,
// monomial:n), a comma-separated complex coefficient list such as
// "0,1,0.5" or "1+2i,3", or a polynomial such as "z+0.5*z^2".
PowerSeries parse_function_spec(const std::string& spec);

// Throws Error(InvalidInput) when the config breaks its invariants.
void validate(const RunConfig& config);

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mixedmeans
