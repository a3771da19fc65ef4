#include "corelab/polynomial.hpp"

#include <algorithm>

namespace corelab {

namespace {

void sort_and_combine(const PolyRing& ring, std::vector<Term>& terms) {
  const MonomialOrder& ord = ring.order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  const Field& F = *ring.field();
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(t);
    }
  }
  terms = std::move(out);
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, uint64_t value) {
  if (value == 0) return zero(std::move(ring));
  Monomial one = Monomial::one(ring->arity());
  return Polynomial(std::move(ring), {Term{one, value}});
}

Polynomial Polynomial::variable(RingPtr ring, unsigned index) {
  if (index >= ring->arity()) throw Error("variable index out of range");
  Monomial m = Monomial::one(ring->arity());
  m.e[index] = 1;
  return Polynomial(std::move(ring), {Term{m, 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, uint64_t coeff) {
  if (coeff == 0) return zero(std::move(ring));
  if (m.arity != ring->arity()) throw Error("monomial arity mismatch");
  return Polynomial(std::move(ring), {Term{m, coeff}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.mono.arity != ring->arity()) throw Error("term arity mismatch");
    if (!ring->field()->is_canonical(t.coeff))
      throw Error("coefficient not in canonical range");
  }
  sort_and_combine(*ring, terms);
  return Polynomial(std::move(ring), std::move(terms));
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::constant_term_free() const {
  for (const Term& t : terms_)
    if (t.mono.is_one()) return false;
  return true;
}

bool Polynomial::uses_var(unsigned index) const {
  for (const Term& t : terms_)
    if (t.mono.e[index] != 0) return true;
  return false;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero");
  return terms_.front();
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error("leading term of zero");
  if (order == ring_->order()) return terms_.front();
  const Term* best = &terms_.front();
  for (const Term& t : terms_)
    if (order.greater(t.mono, best->mono)) best = &t;
  return *best;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!ring_->same(*o.ring_)) throw Error("polynomial rings differ");
  const MonomialOrder& ord = ring_->order();
  const Field& F = *ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      uint64_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) out.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  const Field& F = *ring_->field();
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = F.neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!ring_->same(*o.ring_)) throw Error("polynomial rings differ");
  const Field& F = *ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_)
      out.push_back(Term{a.mono * b.mono, F.mul(a.coeff, b.coeff)});
  sort_and_combine(*ring_, out);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(uint64_t c) const {
  if (c == 0) return zero(ring_);
  const Field& F = *ring_->field();
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = F.mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, uint64_t c) const {
  if (c == 0) return zero(ring_);
  const Field& F = *ring_->field();
  std::vector<Term> out = terms_;
  for (Term& t : out) {
    t.mono = t.mono * m;
    t.coeff = F.mul(t.coeff, c);
  }
  return Polynomial(ring_, std::move(out));  // multiplying by a monomial keeps the sort
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  const Field& F = *ring_->field();
  if (terms_.front().coeff == 1) return *this;
  return scaled(F.inv(terms_.front().coeff));
}

Polynomial Polynomial::derivative(unsigned var) const {
  if (var >= ring_->arity()) throw Error("variable index out of range");
  const Field& F = *ring_->field();
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.mono.e[var] == 0) continue;
    uint64_t c = F.mul_int(t.coeff, t.mono.e[var]);
    if (c == 0) continue;
    Term d = t;
    d.coeff = c;
    d.mono.e[var] = static_cast<uint16_t>(d.mono.e[var] - 1);
    out.push_back(d);
  }
  sort_and_combine(*ring_, out);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<bool>& keep,
                                  const std::vector<uint64_t>& values) const {
  const Field& F = *ring_->field();
  const unsigned n = ring_->arity();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    uint64_t c = t.coeff;
    Monomial m = t.mono;
    for (unsigned i = 0; i < n; ++i) {
      if (keep[i] || m.e[i] == 0) continue;
      c = F.mul(c, F.pow(values[i], m.e[i]));
      m.e[i] = 0;
      if (c == 0) break;
    }
    if (c != 0) out.push_back(Term{m, c});
  }
  sort_and_combine(*ring_, out);
  return Polynomial(ring_, std::move(out));
}

unsigned Polynomial::degree_in_var(unsigned index) const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max<unsigned>(d, t.mono.e[index]);
  return d;
}

Polynomial transport(const Polynomial& f, const RingPtr& target,
                     const std::vector<int>& var_map) {
  const RingPtr& src = f.ring();
  if (src->field().get() != target->field().get())
    throw Error("transport requires the same coefficient field");
  if (var_map.size() != src->arity()) throw Error("transport var_map arity mismatch");
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    Monomial m = Monomial::one(target->arity());
    for (unsigned i = 0; i < src->arity(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (var_map[i] < 0)
        throw Error("transport drops a variable the polynomial uses");
      m.e[var_map[i]] = t.mono.e[i];
    }
    out.push_back(Term{m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

}  // namespace corelab
