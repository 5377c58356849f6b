#pragma once

#include <map>
#include <string>
#include <vector>

#include "diagsurf/error.hpp"

namespace diagsurf {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  bool diagnostic_only = false;  // report surfaced without a verdict on it
  std::vector<std::string> details;
};

struct AcceptanceRun {
  std::vector<CriterionResult> criteria;
  std::map<std::string, std::string> exports;  // file name -> contents

  bool pass() const;
  // One "[PASS]/[FAIL] Cn title" line per criterion followed by its details.
  std::string log() const;
};

// Criteria 1-9 once, then criterion 10 re-runs them and compares the log
// and every export byte for byte.
AcceptanceRun run_acceptance(const Limits& limits = {});

// Writes exports into dir (created if missing).
void write_exports(const AcceptanceRun& run, const std::string& dir);

}  // namespace diagsurf
