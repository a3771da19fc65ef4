#pragma once

#include <string>
#include <vector>

#include "corelab/core.hpp"

namespace corelab {

struct CheckResult {
  std::string name;
  bool pass = false;
  double ms = 0.0;
  std::string detail;
};

// Built-in example bundles runnable from the CLI: ids "5.2", "5.3",
// "mpowers".  Throws on an unknown id.
std::vector<CheckResult> verify_example(const std::string& id);

// The full acceptance suite (superset of the bundles, plus the kernel
// property suite and the (n, J)-independence grid).  Each entry also
// enforces its runtime budget.
std::vector<CheckResult> run_acceptance_suite();

// Corpus builders shared with the tests.
RingPtr corpus_xy_ring(const FieldPtr& field);
Ideal corpus_ideal_52(const RingPtr& R);  // (x^6, x^5y^3, x^4y^4, x^2y^8, y^9)
Ideal corpus_h_52(const RingPtr& R);      // (x^6, y^9)
Ideal corpus_k_53(const RingPtr& R);      // (x^9, x^5y^4, x^3y^6, x^2y^7)
Ideal corpus_ideal_53(const RingPtr& R);  // (K, y^8)
Ideal corpus_h_53(const RingPtr& R);      // (x^9, y^8)

}  // namespace corelab
