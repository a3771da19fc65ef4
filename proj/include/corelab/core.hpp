#pragma once

#include "corelab/blowup.hpp"
#include "corelab/reductions.hpp"

namespace corelab {

// Result of the closed-formula core computation with stability evidence.
struct CoreReport {
  Ideal formula_value;
  int n_used = 0;
  Ideal j_used;
  int g = 0;
  int ell = 0;
  int r = 0;  // max reduction number among the sampled reductions
  // (n, reduction seed) cells of the evaluation grid confirmed equal.
  std::vector<std::pair<int, uint64_t>> stability;
  std::vector<std::string> hypothesis_notes;
};

// Result of the Monte-Carlo intersection-of-reductions oracle.  The value
// always contains the true core (a finite intersection over-approximates
// the full one); stall-based termination makes exactness evidence, not
// proof.
struct McCoreReport {
  Ideal value;
  int trials = 0;
  int stabilized_after = 0;  // consecutive non-shrinking trials at stop
  std::vector<uint64_t> seeds;
  bool homogeneous = false;
};

struct DecompositionReport {
  bool holds = false;
  int n_lo = 0;
  int n_max = 0;
  int first_failure_n = -1;
  std::vector<Polynomial> elements;  // the sampled general elements
  uint64_t seed = 0;
  int generic_r = 0;
};

struct HypothesisReport {
  int g = 0;
  int ell = 0;
  int r = 0;
  int n_threshold = 0;
  uint64_t characteristic = 0;
  bool char_ok = false;
  bool equimultiple = false;
  bool m_primary = false;
  // (candidate description, certified, generic embedding dimension)
  struct PrimeNote {
    std::string candidate;
    bool certified = false;
    int edim = -1;
  };
  std::vector<PrimeNote> primes;
  std::vector<std::string> notes;
};

// J^{n+1} : I^n for a verified reduction J of I.  Rejects n below the
// threshold max{r - ell + g, 0}.
Ideal core_formula(const Ideal& I, const Ideal& J, int n);

// Samples two minimal reductions, evaluates the formula on the grid
// n in {n0, n0+1, n0+2} for each, and asserts all values agree; attaches
// hypothesis notes (characteristic condition, equimultiple flag, automatic
// G_ell/depth for zero-dimensional ideals).  A grid disagreement throws
// MathFindingError naming the differing cell.
CoreReport core_auto(const Ideal& I, uint64_t seed);

// Intersects sampled minimal reductions until at least min_trials ran and
// `stall` consecutive trials did not shrink the intersection.
McCoreReport core_monte_carlo(const Ideal& I, int min_trials, int stall,
                              uint64_t seed, bool homogeneous = false);

// Tests I^n == (f_1..f_{ell-1}) I^{n-1} + (f_ell..f_{ell+s})^n on the window
// n in [generic reduction number + 1, n_max] for sampled general elements.
DecompositionReport decomposition_check(const Ideal& I, int s, int n_max,
                                        uint64_t seed);

// Gathers g, ell, r, the n-threshold, the characteristic condition, and
// (optionally) generic embedding dimensions at user-supplied candidate
// primes of the special fiber.
HypothesisReport hypothesis_report(const Ideal& I, const Ideal& J,
                                   const std::vector<PrimeCandidate>& primes = {},
                                   uint64_t seed = 1);

}  // namespace corelab
