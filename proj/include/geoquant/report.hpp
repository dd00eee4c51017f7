#pragma once

#include <string>
#include <vector>

namespace geoquant {

struct CheckReport {
  std::string check;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  double runtime_ms = 0.0;
};

// One JSON object per line, numbers at 15 significant digits.
std::string report_json(const CheckReport& r);

bool all_passed(const std::vector<CheckReport>& reports);

// Folds sub-checks with heterogeneous tolerances into one report whose
// max_error is the largest error-to-tolerance ratio (tolerance 1).
CheckReport combine_reports(const std::string& name, const std::vector<CheckReport>& parts);

}  // namespace geoquant
