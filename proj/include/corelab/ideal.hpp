#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "corelab/polynomial.hpp"

namespace corelab {

// An ideal given by generators, with cached reduced Groebner bases keyed by
// monomial order.  Ideals are immutable values; copies share the cache.
// The cache behaves as a single-writer-per-key, many-reader table.
//
// An empty generator list represents the zero ideal (it arises naturally
// from eliminations even though user-facing constructors require
// generators).
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return *gens_; }
  bool is_zero() const { return gens_->empty(); }
  bool is_unit() const;
  bool is_monomial_generated() const;

  // Reduced Groebner basis: monic, pairwise fully reduced, sorted by
  // ascending leading monomial; canonical for (ideal, order).
  const std::vector<Polynomial>& groebner() const;
  std::vector<Polynomial> groebner(const MonomialOrder& order) const;

  // Cached n-th power of this ideal (see power() below).
  Ideal cached_power(unsigned n) const;

 private:
  RingPtr ring_;
  std::shared_ptr<const std::vector<Polynomial>> gens_;
  struct Cache {
    std::mutex mu;
    std::map<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>> bases;
    std::map<unsigned, Ideal> powers;
  };
  std::shared_ptr<Cache> cache_;
};

// --- Groebner machinery -----------------------------------------------

// Reduced Groebner basis of the given generators under the ring's default
// order.  Canonical: independent of the generator order.
std::vector<Polynomial> reduced_groebner(const RingPtr& ring,
                                         std::vector<Polynomial> gens);

// Remainder of multivariate division by a Groebner basis (or any list of
// nonzero polynomials, in which case the result depends on the list).  No
// term of the result is divisible by a leading monomial of the basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);
Polynomial normal_form(const Polynomial& f, const Ideal& I);

// S-polynomial under the ring's order (used by property tests).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Exact quotient f / g; throws if the division leaves a remainder.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

// --- Ideal operations --------------------------------------------------

bool contains(const Ideal& I, const Ideal& J);   // J subseteq I
bool ideal_equal(const Ideal& I, const Ideal& J);
bool ideal_member(const Polynomial& f, const Ideal& I);

Ideal sum(const Ideal& I, const Ideal& J);
Ideal product(const Ideal& I, const Ideal& J);
// n-fold products of the stored generators; power(I,0) is the unit ideal.
// Results are cached on I, so repeated queries reuse Groebner work.
Ideal power(const Ideal& I, unsigned n);

// Intersection via an auxiliary variable: (t*I + (1-t)*J) cap k[x].
Ideal intersect(const Ideal& I, const Ideal& J);
// Ideal quotient I : J, as the intersection of the single colons I : g.
Ideal colon(const Ideal& I, const Ideal& J);
// Stable value of I : J^infinity; throws if 64 colon steps do not stabilize.
Ideal saturate(const Ideal& I, const Ideal& J);

// Generators of I cap k[vars outside block]; result lives in the same ring.
Ideal eliminate(const Ideal& I, const std::vector<unsigned>& block);

// Krull dimension of ring/I via independent sets modulo the leading-term
// ideal.  The unit ideal reports the sentinel -1.
int dimension(const Ideal& I);
// arity - dimension; rejects the unit ideal.
int height(const Ideal& I);

// f in rad(I), by the Rabinowitsch trick in a ring with one extra variable.
bool radical_membership(const Polynomial& f, const Ideal& I);

// --- localization at the origin ------------------------------------------
//
// Sampled general elements are inhomogeneous, so the ideals they generate
// pick up components away from the origin (stray intersection points).  The
// reduction-theoretic objects live in the localization at the homogeneous
// maximal ideal; these helpers bridge the two.

// The primary component at the origin of a zero-dimensional ideal: the
// stable value of I + m^M (one equal step certifies stabilization).  Unit
// in, unit out; rejects ideals of positive dimension.
Ideal origin_primary_part(const Ideal& I);

// Whether A and P agree after localizing at the origin, for A subseteq P.
// Falls back to the annihilator criterion (A : P) not subseteq m when the
// ideals are not zero-dimensional.
bool locally_equal_at_origin(const Ideal& P, const Ideal& A);

}  // namespace corelab
