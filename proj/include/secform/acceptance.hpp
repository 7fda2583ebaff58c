#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secform::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the full verification suite in order, streaming one line per
/// criterion: "criterion <id> <name>: PASS|FAIL (<detail>)".
/// A criterion that throws is reported as FAIL with the exception message.
std::vector<CriterionResult> run_all(std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace secform::acceptance
