#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace bubblepat {

enum class Suite { Operators, GoodBases, Witnesses, Gamma, Sb, Counts };

Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct SuiteCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // what was covered, or what failed
  std::string repro;   // CLI line reproducing a failure, empty when passed
};

struct SuiteReport {
  Suite suite = Suite::Operators;
  int horizon = 0;
  std::vector<SuiteCheck> checks;

  bool all_passed() const;
};

/// Runs one suite. `horizon` is the scan depth for exhaustive suites and
/// the maximum pattern length for good-bases/witnesses; <= 0 picks the
/// suite default. Output is deterministic for any worker count.
SuiteReport run_suite(Suite suite, int horizon = 0, int workers = 1);

/// Fixed text rendering of a report. Contains no timings or worker counts,
/// so equal reports render to equal bytes.
std::string render_text(const SuiteReport& report);

void to_json(nlohmann::json& j, const SuiteReport& r);

}  // namespace bubblepat
