#pragma once

#include "corelab/ideal.hpp"

namespace corelab {

// Combinatorial operations on monomial ideals, independent of the Groebner
// path: colon and intersection by exponentwise rules, powers by products of
// exponent vectors.  Property tests pit these against the general kernel.
// Non-monomial input is rejected.

Ideal oracle_intersect(const Ideal& I, const Ideal& J);
Ideal oracle_colon(const Ideal& I, const Ideal& J);
Ideal oracle_power(const Ideal& I, unsigned n);
bool oracle_membership(const Polynomial& m, const Ideal& I);

}  // namespace corelab
