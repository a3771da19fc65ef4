#pragma once

#include "corelab/ideal.hpp"

namespace corelab {

// A quotient-ring description: ambient polynomial ring (the presentation
// variables T1..Tm, optionally alongside the original variables) together
// with a defining ideal.  generator_map[i] is the element of the source
// ring presented by the i-th T-variable.
struct Presentation {
  RingPtr ambient;
  Ideal defining;
  std::vector<Polynomial> generator_map;
  RingPtr source_ring;
  unsigned t_offset = 0;  // index of T1 inside the ambient ring
};

// Candidate prime of a presentation's quotient, generated by a subset of
// the T-variables (hence automatically prime: the quotient by the
// variables alone is a polynomial ring).
struct PrimeCandidate {
  std::vector<unsigned> vars;  // ambient variable indices

  static PrimeCandidate of(std::initializer_list<unsigned> v) {
    return PrimeCandidate{std::vector<unsigned>(v)};
  }
};

// Presentation of the Rees algebra R[It]: the kernel of
// k[x, T] -> R[t], T_i -> t*f_i, computed by eliminating t from
// (T_i - t*f_i).  The ambient ring carries the original variables followed
// by the T-block.
Presentation rees_presentation(const Ideal& I);

// Presentation of the special fiber ring: eliminate the original variables
// from the Rees ideal plus (x_1..x_d).  The ambient ring has only the
// T-block; the quotient's dimension is the analytic spread.
Presentation fiber_presentation(const Ideal& I);

// dim of the special fiber ring.
int analytic_spread(const Ideal& I);

// Embedding dimension of the localization of ambient/defining at the
// variable-generated prime q, computed by random specialization of the
// variables outside q over three derived seeds (exact agreement required).
// An empty candidate denotes the generic point and yields 0.
int generic_embedding_dimension(const Presentation& P, const PrimeCandidate& q,
                                uint64_t seed);

// True iff q certifiably generates the unique minimal prime: the defining
// ideal sits inside (q) and every q-variable lies in its radical.
bool minimal_prime_certify(const Presentation& P, const PrimeCandidate& q);

// Serre's R1 via the Jacobian criterion: the ideal of c x c minors of the
// Jacobian of the Groebner generators (c = height of the defining ideal),
// added to the defining ideal, must cut out a locus of codimension >= 2 in
// the quotient.  The caller asserts equidimensionality.
bool serre_r1_check(const Presentation& P);

}  // namespace corelab
