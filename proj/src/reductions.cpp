#include "corelab/reductions.hpp"

#include <algorithm>
#include <map>

#include "corelab/blowup.hpp"

namespace corelab {

Polynomial random_element(const Ideal& I, Rng& rng, bool homogeneous) {
  const auto& gens = I.generators();
  if (gens.empty()) throw Error("random element of the zero ideal");
  const Field& F = *I.ring()->field();

  std::vector<const Polynomial*> pool;
  if (homogeneous) {
    std::map<unsigned, std::vector<const Polynomial*>> classes;
    for (const Polynomial& g : gens) classes[g.degree()].push_back(&g);
    if (classes.size() > 1) {
      unsigned pick = static_cast<unsigned>(rng.below(classes.size()));
      auto it = classes.begin();
      std::advance(it, pick);
      pool = it->second;
    }
  }
  if (pool.empty())
    for (const Polynomial& g : gens) pool.push_back(&g);

  for (int attempt = 0; attempt < 8; ++attempt) {
    Polynomial f = Polynomial::zero(I.ring());
    for (const Polynomial* g : pool) f = f + g->scaled(rng.below(F.size()));
    if (!f.is_zero()) return f;
  }
  throw MathFindingError("random element: 8 consecutive zero draws");
}

ReductionReport is_reduction(const Ideal& J, const Ideal& I, int bound) {
  if (!I.ring()->same(*J.ring())) throw Error("ideals from different rings");
  if (bound < 0) throw Error("reduction search bound must be >= 0");
  if (!contains(I, J)) throw Error("J is not contained in I");

  ReductionReport rep;
  rep.J = J;
  rep.bound_used = bound;
  Ideal cur = Ideal::unit(I.ring());  // I^0
  for (int r = 0; r <= bound; ++r) {
    Ideal next = I.cached_power(static_cast<unsigned>(r + 1));
    Ideal rhs = product(J, cur);
    // Reductions are a local notion: sampled elements carry stray
    // components away from the origin which must not spoil the test.
    if (locally_equal_at_origin(next, rhs)) {
      rep.verified = true;
      rep.r = r;
      return rep;
    }
    cur = next;
  }
  return rep;
}

int reduction_number(const Ideal& J, const Ideal& I, int bound) {
  ReductionReport rep = is_reduction(J, I, bound);
  if (!rep.verified)
    throw MathFindingError("not a reduction at bound " + std::to_string(bound));
  return rep.r;
}

ReductionReport minimal_reduction(const Ideal& I, uint64_t seed, int spread_hint,
                                  bool homogeneous) {
  if (I.is_zero() || I.is_unit())
    throw Error("minimal reduction needs a nonzero proper ideal");
  const int ell = spread_hint >= 0 ? spread_hint : analytic_spread(I);
  Rng rng(seed);
  // Initial try plus up to 4 retries with fresh randomness.
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Polynomial> elems;
    elems.reserve(ell);
    for (int i = 0; i < ell; ++i) elems.push_back(random_element(I, rng, homogeneous));
    Ideal J(I.ring(), std::move(elems));
    if (static_cast<int>(J.generators().size()) != ell) continue;  // collision
    ReductionReport rep = is_reduction(J, I);
    if (rep.verified) {
      rep.seed = seed;
      rep.seeded = true;
      return rep;
    }
  }
  throw MathFindingError("genericity failure (enlarge field or reseed)");
}

}  // namespace corelab
