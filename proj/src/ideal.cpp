#include "corelab/ideal.hpp"

#include <algorithm>
#include <numeric>

namespace corelab {

namespace {

// Minimal generating set of a monomial list: drop duplicates and multiples.
std::vector<Polynomial> minimalize_monomials(const RingPtr& ring,
                                             std::vector<Polynomial> gens) {
  for (Polynomial& g : gens) g = g.monic();
  std::sort(gens.begin(), gens.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return a.leading_term().mono.degree() < b.leading_term().mono.degree();
            });
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens) {
    bool redundant = false;
    for (const Polynomial& h : out)
      if (h.leading_term().mono.divides(g.leading_term().mono)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  (void)ring;
  return out;
}

std::vector<Polynomial> dedupe(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (Polynomial& g : gens) {
    Polynomial m = g.monic();
    bool seen = false;
    for (const Polynomial& h : out)
      if (h == m) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(m));
  }
  return out;
}

bool all_monomial(const std::vector<Polynomial>& gens) {
  for (const Polynomial& g : gens)
    if (!g.is_monomial()) return false;
  return true;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  std::vector<Polynomial> kept;
  kept.reserve(gens.size());
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring()->same(*ring_)) throw Error("generator from a different ring");
    kept.push_back(std::move(g));
  }
  gens_ = std::make_shared<const std::vector<Polynomial>>(std::move(kept));
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_monomial_generated() const { return all_monomial(*gens_); }

const std::vector<Polynomial>& Ideal::groebner() const {
  const MonomialOrder ord = ring_->order();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(ord);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto gb = std::make_shared<const std::vector<Polynomial>>(
      reduced_groebner(ring_, *gens_));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->bases.emplace(ord, std::move(gb));
  return *it->second;
}

std::vector<Polynomial> Ideal::groebner(const MonomialOrder& order) const {
  if (order == ring_->order()) return groebner();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return *it->second;
  }
  RingPtr rebased = ring_->with_order(order);
  std::vector<int> id(ring_->arity());
  std::iota(id.begin(), id.end(), 0);
  std::vector<Polynomial> moved;
  moved.reserve(gens_->size());
  for (const Polynomial& g : *gens_) moved.push_back(transport(g, rebased, id));
  std::vector<Polynomial> gb = reduced_groebner(rebased, std::move(moved));
  std::vector<Polynomial> back;
  back.reserve(gb.size());
  for (const Polynomial& g : gb) back.push_back(transport(g, ring_, id));
  auto shared = std::make_shared<const std::vector<Polynomial>>(back);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->bases.emplace(order, std::move(shared));
  return back;
}

Ideal Ideal::cached_power(unsigned n) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->powers.find(n);
    if (it != cache_->powers.end()) return it->second;
  }
  Ideal result;
  if (n <= 1) {
    result = power(*this, n);
  } else {
    result = product(cached_power(n - 1), *this);
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->powers.emplace(n, std::move(result));
  return it->second;
}

// --- membership and comparison -----------------------------------------

bool ideal_member(const Polynomial& f, const Ideal& I) {
  return normal_form(f, I.groebner()).is_zero();
}

bool contains(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same(*J.ring())) throw Error("ideals from different rings");
  const auto& gb = I.groebner();
  for (const Polynomial& g : J.generators())
    if (!normal_form(g, gb).is_zero()) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same(*J.ring())) throw Error("ideals from different rings");
  return I.groebner() == J.groebner();
}

// --- arithmetic ----------------------------------------------------------

Ideal sum(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same(*J.ring())) throw Error("ideals from different rings");
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal product(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same(*J.ring())) throw Error("ideals from different rings");
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const Polynomial& f : I.generators())
    for (const Polynomial& g : J.generators()) gens.push_back(f * g);
  if (all_monomial(gens)) return Ideal(I.ring(), minimalize_monomials(I.ring(), gens));
  return Ideal(I.ring(), dedupe(std::move(gens)));
}

Ideal power(const Ideal& I, unsigned n) {
  if (n == 0) return Ideal::unit(I.ring());
  if (I.is_zero()) return Ideal::zero(I.ring());
  const auto& gens = I.generators();
  if (I.is_monomial_generated()) {
    // Incremental products with divisibility pruning keep monomial powers
    // at their minimal generator sets.
    Ideal cur = I;
    for (unsigned i = 1; i < n; ++i) cur = product(cur, I);
    return cur;
  }
  // All n-fold products of generators, one per multiset.
  std::vector<Polynomial> out;
  std::vector<unsigned> idx(n, 0);
  const unsigned m = static_cast<unsigned>(gens.size());
  while (true) {
    Polynomial p = gens[idx[0]];
    for (unsigned i = 1; i < n; ++i) p = p * gens[idx[i]];
    out.push_back(std::move(p));
    // next non-decreasing index tuple
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0 && idx[pos] == m - 1) --pos;
    if (pos < 0) break;
    unsigned v = idx[pos] + 1;
    for (unsigned i = static_cast<unsigned>(pos); i < n; ++i) idx[i] = v;
  }
  return Ideal(I.ring(), dedupe(std::move(out)));
}

// --- intersection, colon, saturation -------------------------------------

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same(*J.ring())) throw Error("ideals from different rings");
  const RingPtr& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(R);

  std::vector<std::string> names;
  names.reserve(R->arity() + 1);
  names.push_back(R->fresh_name("t"));
  for (const auto& v : R->var_names()) names.push_back(v);
  RingPtr E = PolyRing::make(names, R->field(), MonomialOrder::block_elim(1));

  std::vector<int> up(R->arity());
  std::iota(up.begin(), up.end(), 1);
  Polynomial t = Polynomial::variable(E, 0);
  Polynomial one_minus_t = Polynomial::constant(E, 1) - t;

  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.groebner()) gens.push_back(t * transport(f, E, up));
  for (const Polynomial& g : J.groebner())
    gens.push_back(one_minus_t * transport(g, E, up));

  std::vector<Polynomial> gb = reduced_groebner(E, std::move(gens));
  std::vector<int> down(E->arity());
  down[0] = -1;
  for (unsigned i = 0; i < R->arity(); ++i) down[i + 1] = static_cast<int>(i);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb)
    if (g.degree_in_var(0) == 0) kept.push_back(transport(g, R, down));
  return Ideal(R, std::move(kept));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same(*J.ring())) throw Error("ideals from different rings");
  if (J.is_zero()) throw Error("colon by the zero ideal");
  if (I.is_zero()) return Ideal::zero(I.ring());
  bool first = true;
  Ideal result;
  // Colon against the (smaller, canonical) Groebner generators of J.
  for (const Polynomial& g : J.groebner()) {
    if (g.is_constant()) {
      Ideal single = I;  // I : (unit) = I
      result = first ? single : intersect(result, single);
      first = false;
      continue;
    }
    Ideal gI(I.ring(), {g});
    Ideal meet = intersect(I, gI);
    std::vector<Polynomial> quots;
    quots.reserve(meet.generators().size());
    for (const Polynomial& h : meet.generators())
      quots.push_back(divide_exact(h, g));
    Ideal single(I.ring(), std::move(quots));
    result = first ? single : intersect(result, single);
    first = false;
  }
  return result;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same(*J.ring())) throw Error("ideals from different rings");
  Ideal cur = I;
  for (int step = 0; step < 64; ++step) {
    Ideal next = colon(cur, J);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
  throw Error("saturation chain did not stabilize within 64 colon steps");
}

// --- elimination ----------------------------------------------------------

Ideal eliminate(const Ideal& I, const std::vector<unsigned>& block) {
  const RingPtr& R = I.ring();
  if (block.empty()) return I;
  std::vector<bool> in_block(R->arity(), false);
  for (unsigned v : block) {
    if (v >= R->arity()) throw Error("eliminate: variable index out of range");
    in_block[v] = true;
  }
  // Permute the block to the front and use a block elimination order.
  std::vector<unsigned> perm;
  for (unsigned i = 0; i < R->arity(); ++i)
    if (in_block[i]) perm.push_back(i);
  const unsigned bsize = static_cast<unsigned>(perm.size());
  for (unsigned i = 0; i < R->arity(); ++i)
    if (!in_block[i]) perm.push_back(i);

  std::vector<std::string> names;
  for (unsigned p : perm) names.push_back(R->var_name(p));
  RingPtr E = PolyRing::make(names, R->field(), MonomialOrder::block_elim(bsize));

  std::vector<int> up(R->arity());
  for (unsigned pos = 0; pos < perm.size(); ++pos) up[perm[pos]] = static_cast<int>(pos);

  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const Polynomial& g : I.generators()) gens.push_back(transport(g, E, up));
  std::vector<Polynomial> gb = reduced_groebner(E, std::move(gens));

  std::vector<int> down(E->arity(), -1);
  for (unsigned pos = 0; pos < perm.size(); ++pos) down[pos] = static_cast<int>(perm[pos]);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb) {
    bool free_of_block = true;
    for (unsigned pos = 0; pos < bsize && free_of_block; ++pos)
      if (g.degree_in_var(pos) != 0) free_of_block = false;
    if (free_of_block) kept.push_back(transport(g, R, down));
  }
  return Ideal(R, std::move(kept));
}

// --- dimension and height --------------------------------------------------

int dimension(const Ideal& I) {
  const RingPtr& R = I.ring();
  const unsigned n = R->arity();
  const auto& gb = I.groebner();
  if (gb.empty()) return static_cast<int>(n);
  if (I.is_unit()) return -1;

  std::vector<uint32_t> supports;
  supports.reserve(gb.size());
  for (const Polynomial& g : gb) {
    uint32_t mask = 0;
    const Monomial& m = g.leading_term().mono;
    for (unsigned i = 0; i < n; ++i)
      if (m.e[i] != 0) mask |= uint32_t{1} << i;
    supports.push_back(mask);
  }
  int best = 0;
  for (uint32_t s = 0; s < (uint32_t{1} << n); ++s) {
    bool ok = true;
    for (uint32_t sup : supports)
      if ((sup & ~s) == 0) {  // support inside S
        ok = false;
        break;
      }
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

int height(const Ideal& I) {
  if (I.is_unit()) throw Error("height of the unit ideal is undefined");
  return static_cast<int>(I.ring()->arity()) - dimension(I);
}

// --- localization at the origin ----------------------------------------------

namespace {

// All monomials of total degree deg, as an ideal.
Ideal maximal_ideal_power(const RingPtr& R, unsigned deg) {
  const unsigned n = R->arity();
  std::vector<Polynomial> gens;
  Monomial m = Monomial::one(n);
  auto emit = [&](auto&& self, unsigned remaining, unsigned pos) -> void {
    if (pos == n - 1) {
      m.e[pos] = static_cast<uint16_t>(remaining);
      gens.push_back(Polynomial::monomial(R, m, 1));
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      m.e[pos] = static_cast<uint16_t>(v);
      self(self, remaining - v, pos + 1);
    }
    m.e[pos] = 0;
  };
  emit(emit, deg, 0);
  return Ideal(R, std::move(gens));
}

}  // namespace

Ideal origin_primary_part(const Ideal& I) {
  if (I.is_unit()) return I;
  if (I.is_zero()) throw Error("origin-primary part of the zero ideal");
  if (dimension(I) != 0)
    throw Error("origin-primary part needs a zero-dimensional ideal");
  const RingPtr& R = I.ring();
  unsigned deg = 1;
  for (const Polynomial& g : I.groebner())
    deg = std::max(deg, g.degree() + 1);
  for (int step = 0; step < 8; ++step) {
    Ideal walled = sum(I, maximal_ideal_power(R, deg));
    Ideal next = sum(I, maximal_ideal_power(R, deg + 1));
    if (ideal_equal(walled, next)) return walled;
    deg *= 2;
  }
  throw Error("origin-primary part did not stabilize");
}

bool locally_equal_at_origin(const Ideal& P, const Ideal& A) {
  if (!P.ring()->same(*A.ring())) throw Error("ideals from different rings");
  if (ideal_equal(P, A)) return true;
  // Monomial ideals localize injectively at the origin.
  if (P.is_monomial_generated() && A.is_monomial_generated()) return false;
  if (!P.is_zero() && !A.is_zero() && dimension(P) == 0 && dimension(A) == 0)
    return ideal_equal(origin_primary_part(P), origin_primary_part(A));
  // Annihilator criterion for the module P/A: the localization vanishes
  // iff (A : P) escapes the maximal ideal.
  if (P.is_zero()) return A.is_zero();
  if (A.is_zero()) return false;
  Ideal C = colon(A, P);
  for (const Polynomial& g : C.groebner())
    if (!g.constant_term_free()) return true;
  return false;
}

// --- radical membership -----------------------------------------------------

bool radical_membership(const Polynomial& f, const Ideal& I) {
  if (!f.ring()->same(*I.ring())) throw Error("polynomial from a different ring");
  if (f.is_zero()) return true;
  const RingPtr& R = I.ring();
  std::vector<std::string> names = R->var_names();
  names.push_back(R->fresh_name("t"));
  RingPtr E = PolyRing::make(names, R->field(), MonomialOrder::grevlex());
  std::vector<int> up(R->arity());
  std::iota(up.begin(), up.end(), 0);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(transport(g, E, up));
  Polynomial t = Polynomial::variable(E, E->arity() - 1);
  gens.push_back(Polynomial::constant(E, 1) - t * transport(f, E, up));
  std::vector<Polynomial> gb = reduced_groebner(E, std::move(gens));
  return gb.size() == 1 && gb.front().is_constant();
}

}  // namespace corelab
