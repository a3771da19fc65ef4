#pragma once

#include "corelab/ideal.hpp"
#include "corelab/rng.hpp"

namespace corelab {

inline constexpr int kDefaultReductionBound = 20;
// Fields smaller than this are poor sample spaces for general elements.
inline constexpr uint64_t kSmallFieldThreshold = uint64_t{1} << 16;

// Outcome of a reduction test.  verified means power(I, r+1) == J*power(I, r)
// with r minimal in [0, bound]; !verified only means "not a reduction at
// this bound".
struct ReductionReport {
  Ideal J;
  bool verified = false;
  int r = -1;
  int bound_used = kDefaultReductionBound;
  uint64_t seed = 0;   // meaningful when sampled
  bool seeded = false;
};

// A random k-linear combination of the stored generators.  In homogeneous
// mode, when the generators split into distinct degree classes, each draw
// combines only generators of one (randomly chosen) degree.  Redraws on a
// zero result, at most 8 times.
Polynomial random_element(const Ideal& I, Rng& rng, bool homogeneous = false);

// Bounded search for the reduction number of I with respect to J <= I.
ReductionReport is_reduction(const Ideal& J, const Ideal& I,
                             int bound = kDefaultReductionBound);

// The verified reduction number; throws when the bounded search fails.
int reduction_number(const Ideal& J, const Ideal& I,
                     int bound = kDefaultReductionBound);

// Samples analytic-spread-many general elements and verifies they generate
// a reduction; retries with fresh randomness up to 4 times.  spread_hint
// skips the fiber computation when the caller already knows ell.
ReductionReport minimal_reduction(const Ideal& I, uint64_t seed,
                                  int spread_hint = -1,
                                  bool homogeneous = false);

}  // namespace corelab
