#pragma once

#include <string>
#include <vector>

namespace liecot {

struct CriterionResult {
  int id;
  std::string label;
  bool pass;
  std::string detail;
};

// Runs the full example suite: sixteen deterministic checks of the library
// against its frozen expected values, exact where the arithmetic is exact
// and with the stated tolerance where it is floating point.
std::vector<CriterionResult> run_all_criteria();

}  // namespace liecot
