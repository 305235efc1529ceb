#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "mixedmeans/convexity.hpp"
#include "mixedmeans/verify.hpp"

namespace mixedmeans {

// One row of the `means` table. Length entries are empty when the length
// mean is undefined for the map.
struct MeansRow {
  double r = 0.0;
  double phi_area = 0.0;
  std::optional<double> phi_length;
  double mean_area = 0.0;
  std::optional<double> mean_length;
  double err_area = 0.0;
  std::optional<double> err_length;
};

// 17 significant digits, enough to round-trip a double.
std::string format_number(double v);

void write_means_csv(std::ostream& os, std::span<const MeansRow> rows);
void write_means_json(std::ostream& os, std::span<const MeansRow> rows);

void write_scan_csv(std::ostream& os, const ConvexityReport& report);
void write_scan_json(std::ostream& os, const ConvexityReport& report);

void write_reports_csv(std::ostream& os, std::span<const CheckReport> reports);
void write_reports_json(std::ostream& os, std::span<const CheckReport> reports,
                        const std::string& command);

}  // namespace mixedmeans
