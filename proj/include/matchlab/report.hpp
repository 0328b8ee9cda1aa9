#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace matchlab {

inline constexpr const char* kToolVersion = "matchlab 0.1.0";

struct CheckRecord {
  std::string name;
  std::map<std::string, std::string> params;
  std::string expected;
  std::string got;
  bool pass = false;
};

// One verification run: deterministic for deterministic suites. Exact
// rationals are rendered as "num/den" strings, never floats.
struct Report {
  std::string suite;
  std::map<std::string, std::string> params;
  std::vector<CheckRecord> checks;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::string tool_version = kToolVersion;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(std::string name, std::map<std::string, std::string> check_params,
           std::string expected, std::string got, bool pass) {
    checks.push_back({std::move(name), std::move(check_params), std::move(expected),
                      std::move(got), pass});
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

// JSON text; with_timing=false drops the timestamp and wall-time fields so
// reports from identical runs compare byte-for-byte.
std::string to_json_string(const Report& r, bool with_timing);
std::string to_json_string(const std::vector<Report>& rs, bool with_timing);

// Flat CSV: one row per check.
std::string to_csv_string(const Report& r);
std::string to_csv_string(const std::vector<Report>& rs);

}  // namespace matchlab
