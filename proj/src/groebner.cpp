#include <algorithm>
#include <queue>
#include <set>

#include "corelab/ideal.hpp"

namespace corelab {

namespace {

using Terms = std::vector<Term>;

// a -= (c * m) * g, merging two descending term lists.
Terms submul(const Terms& a, const Terms& g, const Monomial& m, uint64_t c,
             const MonomialOrder& ord, const Field& F) {
  Terms out;
  out.reserve(a.size() + g.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    int cmp = ord.compare(a[i].mono, gm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{gm, F.neg(F.mul(g[j].coeff, c))});
      ++j;
    } else {
      uint64_t v = F.sub(a[i].coeff, F.mul(g[j].coeff, c));
      if (v != 0) out.push_back(Term{a[i].mono, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < g.size(); ++j) {
    out.push_back(Term{g[j].mono * m, F.neg(F.mul(g[j].coeff, c))});
  }
  return out;
}

int find_reducer(const std::vector<Polynomial>& basis, const Monomial& m) {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].leading_term().mono.divides(m)) return static_cast<int>(i);
  return -1;
}

struct Pair {
  Monomial lcm;
  unsigned deg;
  uint32_t i, j;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (f.is_zero() || basis.empty()) return f;
  const RingPtr& ring = f.ring();
  const MonomialOrder& ord = ring->order();
  const Field& F = *ring->field();
  Terms p = f.terms();
  Terms out;
  size_t head = 0;  // p[0..head) already irreducible
  while (head < p.size()) {
    const Term& lt = p[head];
    int k = find_reducer(basis, lt.mono);
    if (k < 0) {
      out.push_back(lt);
      ++head;
      continue;
    }
    const Polynomial& g = basis[k];
    uint64_t c = F.div(lt.coeff, g.leading_term().coeff);
    Monomial m = lt.mono / g.leading_term().mono;
    Terms tail(p.begin() + head, p.end());
    Terms reduced = submul(tail, g.terms(), m, c, ord, F);
    p = std::move(reduced);
    head = 0;
  }
  return Polynomial::from_terms(ring, std::move(out));
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  return normal_form(f, I.groebner());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Field& F = *f.ring()->field();
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  Monomial l = lf.mono.lcm(lg.mono);
  Polynomial a = f.times_term(l / lf.mono, F.inv(lf.coeff));
  Polynomial b = g.times_term(l / lg.mono, F.inv(lg.coeff));
  return a - b;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error("division by the zero polynomial");
  const RingPtr& ring = f.ring();
  const MonomialOrder& ord = ring->order();
  const Field& F = *ring->field();
  const Term lg = g.leading_term();
  Terms p = f.terms();
  Terms quot;
  while (!p.empty()) {
    const Term& lt = p.front();
    if (!lg.mono.divides(lt.mono)) throw Error("exact division has a remainder");
    Monomial m = lt.mono / lg.mono;
    uint64_t c = F.div(lt.coeff, lg.coeff);
    quot.push_back(Term{m, c});
    p = submul(p, g.terms(), m, c, ord, F);
  }
  return Polynomial::from_terms(ring, std::move(quot));
}

std::vector<Polynomial> reduced_groebner(const RingPtr& ring,
                                         std::vector<Polynomial> gens) {
  const MonomialOrder ord = ring->order();

  // Deterministic input normalization: monic, sorted, nonzero.
  std::vector<Polynomial> input;
  for (Polynomial& g : gens) {
    if (!g.ring()->same(*ring)) throw Error("generator from a different ring");
    if (!g.is_zero()) input.push_back(g.monic());
  }
  std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (int c = ord.compare(a.leading_term().mono, b.leading_term().mono))
      return c < 0;
    return a.terms().size() < b.terms().size();
  });

  std::vector<Polynomial> basis;
  auto pair_cmp = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg > b.deg;  // min-heap on lcm degree
    if (int c = ord.compare(a.lcm, b.lcm)) return c > 0;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(pair_cmp)> pairs(pair_cmp);
  std::set<std::pair<uint32_t, uint32_t>> pending;

  auto push_with_pairs = [&](Polynomial p) {
    basis.push_back(std::move(p));
    const uint32_t m = static_cast<uint32_t>(basis.size() - 1);
    const Monomial& lm = basis[m].leading_term().mono;
    for (uint32_t i = 0; i < m; ++i) {
      Monomial l = basis[i].leading_term().mono.lcm(lm);
      pairs.push(Pair{l, l.degree(), i, m});
      pending.insert({i, m});
    }
  };

  // Autoreduced insertion of the inputs.
  for (const Polynomial& g : input) {
    Polynomial r = normal_form(g, basis);
    if (r.is_zero()) continue;
    push_with_pairs(r.monic());
    if (basis.back().is_constant()) return {Polynomial::constant(ring, 1)};
  }

  while (!pairs.empty()) {
    Pair pr = pairs.top();
    pairs.pop();
    pending.erase({pr.i, pr.j});
    const Polynomial& fi = basis[pr.i];
    const Polynomial& fj = basis[pr.j];
    // Buchberger's first criterion: coprime leading monomials.
    if (fi.leading_term().mono.coprime(fj.leading_term().mono)) continue;
    // Chain criterion: some k with lt(k) | lcm(i,j) and both pairs (i,k),
    // (j,k) already treated.
    bool skip = false;
    for (uint32_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_term().mono.divides(pr.lcm)) continue;
      auto key = [](uint32_t a, uint32_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (pending.count(key(pr.i, k)) == 0 && pending.count(key(pr.j, k)) == 0)
        skip = true;
    }
    if (skip) continue;
    Polynomial r = normal_form(s_polynomial(fi, fj), basis);
    if (r.is_zero()) continue;
    push_with_pairs(r.monic());
    if (basis.back().is_constant()) return {Polynomial::constant(ring, 1)};
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_term().mono, b.leading_term().mono);
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : basis) {
    bool redundant = false;
    for (const Polynomial& h : minimal)
      if (h.leading_term().mono.divides(g.leading_term().mono)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }

  // Tail-reduce each element against the others.
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(minimal[i], others).monic();
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ord.less(a.leading_term().mono, b.leading_term().mono);
            });
  return minimal;
}

}  // namespace corelab
