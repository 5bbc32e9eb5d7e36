#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cartan/development.hpp"
#include "cartan/ensnare.hpp"

namespace cartan {

// Configuration of one verification suite run. Defaults are stable; JSON
// configs with unknown fields are rejected.
struct SuiteConfig {
  std::string suite = "all";
  std::uint64_t seed = 20240817;
  int k_max = 200;
  int path_samples = 1000;
  double tol_scale = 1.0;
  std::string out_path;
  bool timing = true;

  // ensnare case parameters
  int m = 1;
  int p = 1, q = 1;
  double beta = 1.0;  // real covector magnitude (first slot)
  double s = 10.0;    // cr grade-2 parameter

  static SuiteConfig from_json_text(const std::string& text);
  static SuiteConfig from_json_file(const std::string& path);
};

struct CheckRecord {
  std::string name;
  std::string ref;  // stable id of the claim the check exercises
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  long runtime_ms = 0;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  std::map<std::string, DecaySeries> series;

  bool aggregate() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string to_json(const SuiteConfig& cfg) const;
};

Report run_suite(const SuiteConfig& cfg);

// CSV export with header "k,value" and shortest round-trip decimals.
void export_series(const DecaySeries& series, const std::string& path);

std::string format_double(double v);

std::vector<std::string> suite_names();

}  // namespace cartan
