// Acceptance suite: runs every criterion at its stated tolerance and
// runtime budget, printing one PASS/FAIL line per criterion.

#include <cstdio>

#include "corelab/verify.hpp"

int main() {
  const auto results = corelab::run_acceptance_suite();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("%s  %-28s  (%8.1f ms)%s%s\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.ms, r.pass ? "" : "  ",
                r.pass ? "" : r.detail.c_str());
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed"
                          : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
