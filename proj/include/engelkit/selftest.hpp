#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace engelkit {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, empty when passed
  double seconds = 0.0;
};

// Runs the full verification suite; prints one pass/fail line per criterion
// to `log` when given.  Exact checks only, no tolerances.
std::vector<CriterionResult> run_acceptance_criteria(std::ostream* log = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace engelkit
