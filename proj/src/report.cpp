#include "geoquant/report.hpp"

#include <cmath>
#include <cstdio>

namespace geoquant {

namespace {

std::string num15(double x) {
  if (!std::isfinite(x)) return "1e308";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

}  // namespace

std::string report_json(const CheckReport& r) {
  std::string s = "{\"check\":\"" + r.check + "\",\"passed\":";
  s += r.passed ? "true" : "false";
  s += ",\"max_error\":" + num15(r.max_error);
  s += ",\"tolerance\":" + num15(r.tolerance);
  s += ",\"runtime_ms\":" + num15(r.runtime_ms);
  s += "}";
  return s;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

CheckReport combine_reports(const std::string& name, const std::vector<CheckReport>& parts) {
  CheckReport out;
  out.check = name;
  out.passed = true;
  out.tolerance = 1.0;
  for (const auto& p : parts) {
    out.passed = out.passed && p.passed;
    double scaled = p.tolerance > 0.0 ? p.max_error / p.tolerance : p.max_error;
    out.max_error = std::max(out.max_error, scaled);
    out.runtime_ms += p.runtime_ms;
  }
  return out;
}

}  // namespace geoquant
