#include "corelab/monomial_ideal.hpp"

#include <algorithm>

namespace corelab {

namespace {

std::vector<Monomial> require_monomials(const Ideal& I) {
  std::vector<Monomial> out;
  out.reserve(I.generators().size());
  for (const Polynomial& g : I.generators()) {
    if (!g.is_monomial()) throw Error("monomial oracle: non-monomial generator");
    out.push_back(g.leading_term().mono);
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

Ideal build(const RingPtr& ring, std::vector<Monomial> gens) {
  std::vector<Polynomial> polys;
  polys.reserve(gens.size());
  for (const Monomial& m : minimalize(std::move(gens)))
    polys.push_back(Polynomial::monomial(ring, m, 1));
  return Ideal(ring, std::move(polys));
}

}  // namespace

Ideal oracle_intersect(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same(*J.ring())) throw Error("ideals from different rings");
  auto a = require_monomials(I);
  auto b = require_monomials(J);
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const Monomial& m : a)
    for (const Monomial& n : b) out.push_back(m.lcm(n));
  return build(I.ring(), std::move(out));
}

Ideal oracle_colon(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same(*J.ring())) throw Error("ideals from different rings");
  auto a = require_monomials(I);
  auto b = require_monomials(J);
  if (b.empty()) throw Error("colon by the zero ideal");
  bool first = true;
  std::vector<Monomial> acc;
  for (const Monomial& n : b) {
    std::vector<Monomial> single;
    single.reserve(a.size());
    for (const Monomial& m : a) single.push_back(m.colon(n));
    single = minimalize(std::move(single));
    if (first) {
      acc = std::move(single);
      first = false;
    } else {
      std::vector<Monomial> meet;
      meet.reserve(acc.size() * single.size());
      for (const Monomial& m : acc)
        for (const Monomial& n2 : single) meet.push_back(m.lcm(n2));
      acc = minimalize(std::move(meet));
    }
  }
  return build(I.ring(), std::move(acc));
}

Ideal oracle_power(const Ideal& I, unsigned n) {
  if (n == 0) return Ideal::unit(I.ring());
  auto a = require_monomials(I);
  if (a.empty()) return Ideal::zero(I.ring());
  std::vector<Monomial> cur = a;
  for (unsigned step = 1; step < n; ++step) {
    std::vector<Monomial> next;
    next.reserve(cur.size() * a.size());
    for (const Monomial& m : cur)
      for (const Monomial& g : a) next.push_back(m * g);
    cur = minimalize(std::move(next));
  }
  return build(I.ring(), std::move(cur));
}

bool oracle_membership(const Polynomial& m, const Ideal& I) {
  if (!m.is_monomial()) throw Error("monomial oracle: non-monomial element");
  auto a = require_monomials(I);
  const Monomial& q = m.leading_term().mono;
  for (const Monomial& g : a)
    if (g.divides(q)) return true;
  return false;
}

}  // namespace corelab
