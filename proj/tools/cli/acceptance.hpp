#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qhall::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs acceptance criteria 1-13. Reports contain no timings; wall-clock
/// figures (and the time limits they are checked against) go to `timing_log`
/// when given.
std::vector<CriterionResult> run_acceptance(std::ostream* timing_log = nullptr);

/// One line per criterion: "criterion  1  PASS  name  detail".
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace qhall::cli
