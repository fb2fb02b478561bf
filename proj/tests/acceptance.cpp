// Acceptance suite: runs every criterion and prints one pass/fail line each.
// Exit status is nonzero when any criterion fails.

#include <cstdio>

#include "liecot/repro.hpp"

int main() {
  auto results = liecot::run_all_criteria();
  bool all = true;
  for (const auto& c : results) {
    all = all && c.pass;
    std::printf("%-4s [%2d] %s%s%s\n", c.pass ? "PASS" : "FAIL", c.id, c.label.c_str(),
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
  }
  return all ? 0 : 1;
}
