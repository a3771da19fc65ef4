#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "corelab/ring.hpp"

namespace corelab {

struct Term {
  Monomial mono;
  uint64_t coeff = 0;  // canonical value in the ring's field

  bool operator==(const Term&) const = default;
};

// Sparse multivariate polynomial.  Terms are kept sorted strictly
// descending under the ring's default order, with no zero coefficients and
// no duplicate monomials; the zero polynomial has an empty term list.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, uint64_t value);
  static Polynomial variable(RingPtr ring, unsigned index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, uint64_t coeff);
  // Normalizes: combines duplicates, drops zeros, sorts by the ring order.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_monomial() const { return terms_.size() == 1; }
  // Max total degree over all terms.
  unsigned degree() const;
  // No term is a nonzero constant, i.e. the polynomial lies in the
  // irrelevant maximal ideal.
  bool constant_term_free() const;
  bool uses_var(unsigned index) const;

  // Order-maximal term; throws on zero.  Defaults to the ring's order.
  const Term& leading_term() const;
  Term leading_term(const MonomialOrder& order) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(uint64_t c) const;
  // (c * m) * this, the inner-loop primitive of division.
  Polynomial times_term(const Monomial& m, uint64_t c) const;
  Polynomial monic() const;  // leading coefficient 1 (ring order)

  Polynomial derivative(unsigned var) const;
  // Substitute field values for the listed variables (value vector indexed
  // by variable; entries with keep[i]==true are left symbolic).
  Polynomial substitute(const std::vector<bool>& keep,
                        const std::vector<uint64_t>& values) const;

  // Total degree in a single variable block (for elimination filtering).
  unsigned degree_in_var(unsigned index) const;

  bool operator==(const Polynomial& o) const {
    return ring_->same(*o.ring_) && terms_ == o.terms_;
  }

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Map a polynomial into another ring over the same field. var_map[i] gives
// the target index of source variable i, or -1 if the variable is dropped
// (its exponent must then be zero wherever the polynomial is supported).
Polynomial transport(const Polynomial& f, const RingPtr& target,
                     const std::vector<int>& var_map);

}  // namespace corelab
