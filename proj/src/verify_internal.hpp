#pragma once

#include <string>

#include "mixedmeans/verify.hpp"

namespace mixedmeans::detail {

std::string fmt(double v);

// Mean is constant in r: constant maps, or linear maps when beta = 1.
bool is_flat(const PowerSeries& f, double beta);

// Collects witnesses for one report. Every comparison counts towards the
// verdict, but only a bounded number of witnesses is kept.
class Recorder {
 public:
  explicit Recorder(std::string id);

  void add(std::string input, double expected, double got, double tolerance, Relation relation);
  void note(const std::string& text);
  void skip(const std::string& reason);
  CheckReport finish();

 private:
  static constexpr int kMaxViolations = 32;
  static constexpr int kMaxPassing = 6;

  CheckReport report_;
  int compared_ = 0;
  int violated_ = 0;
  int kept_violations_ = 0;
  int kept_passing_ = 0;
  bool skipped_ = false;
};

}  // namespace mixedmeans::detail
