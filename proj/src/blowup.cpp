#include "corelab/blowup.hpp"

#include <algorithm>
#include <numeric>

#include "corelab/rng.hpp"

namespace corelab {

namespace {

std::vector<std::string> t_block_names(const PolyRing& avoid, unsigned count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (unsigned i = 1; i <= count; ++i) {
    std::string c = "T" + std::to_string(i);
    while (avoid.var_index(c).has_value()) c += "_";
    names.push_back(c);
  }
  return names;
}

// Determinant of a small polynomial matrix by Laplace expansion.
Polynomial poly_det(const RingPtr& ring,
                    const std::vector<std::vector<Polynomial>>& m) {
  const size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  Polynomial acc = Polynomial::zero(ring);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    sub.reserve(n - 1);
    for (size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * poly_det(ring, sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

Presentation rees_presentation(const Ideal& I) {
  const RingPtr& R = I.ring();
  const auto& gens = I.generators();
  if (gens.empty()) throw Error("Rees presentation needs a nonzero ideal");
  const unsigned d = R->arity();
  const unsigned m = static_cast<unsigned>(gens.size());

  std::vector<std::string> tnames = t_block_names(*R, m);
  std::string aux = R->fresh_name("t");

  // Big ring [aux, x-block, T-block]; eliminate aux from (T_i - aux*f_i).
  std::vector<std::string> big_names;
  big_names.reserve(1 + d + m);
  big_names.push_back(aux);
  for (const auto& v : R->var_names()) big_names.push_back(v);
  for (const auto& v : tnames) big_names.push_back(v);
  RingPtr big = PolyRing::make(big_names, R->field());

  std::vector<int> up(d);
  std::iota(up.begin(), up.end(), 1);
  Polynomial t = Polynomial::variable(big, 0);
  std::vector<Polynomial> rel;
  rel.reserve(m);
  for (unsigned i = 0; i < m; ++i) {
    Polynomial Ti = Polynomial::variable(big, 1 + d + i);
    rel.push_back(Ti - t * transport(gens[i], big, up));
  }
  Ideal elim = eliminate(Ideal(big, std::move(rel)), {0});

  // Down to [x-block, T-block].
  std::vector<std::string> amb_names(big_names.begin() + 1, big_names.end());
  RingPtr ambient = PolyRing::make(amb_names, R->field());
  std::vector<int> down(big->arity());
  down[0] = -1;
  for (unsigned i = 0; i < d + m; ++i) down[1 + i] = static_cast<int>(i);
  std::vector<Polynomial> moved;
  for (const Polynomial& g : elim.generators())
    moved.push_back(transport(g, ambient, down));

  Presentation P;
  P.ambient = ambient;
  P.defining = Ideal(ambient, std::move(moved));
  P.generator_map = gens;
  P.source_ring = R;
  P.t_offset = d;
  return P;
}

Presentation fiber_presentation(const Ideal& I) {
  const RingPtr& R = I.ring();
  if (I.generators().empty())
    throw Error("fiber presentation needs a nonzero ideal");
  for (const Polynomial& g : I.generators())
    if (!g.constant_term_free())
      throw Error("fiber presentation needs an ideal inside the maximal ideal");

  Presentation rees = rees_presentation(I);
  const unsigned d = R->arity();
  const unsigned m = static_cast<unsigned>(I.generators().size());

  // Add the original variables and eliminate them.
  std::vector<Polynomial> gens = rees.defining.generators();
  std::vector<unsigned> xblock(d);
  std::iota(xblock.begin(), xblock.end(), 0);
  for (unsigned i = 0; i < d; ++i)
    gens.push_back(Polynomial::variable(rees.ambient, i));
  Ideal elim = eliminate(Ideal(rees.ambient, std::move(gens)), xblock);

  std::vector<std::string> tnames(rees.ambient->var_names().begin() + d,
                                  rees.ambient->var_names().end());
  RingPtr ambient = PolyRing::make(tnames, R->field());
  std::vector<int> down(rees.ambient->arity(), -1);
  for (unsigned i = 0; i < m; ++i) down[d + i] = static_cast<int>(i);
  std::vector<Polynomial> moved;
  for (const Polynomial& g : elim.generators())
    moved.push_back(transport(g, ambient, down));

  Presentation P;
  P.ambient = ambient;
  P.defining = Ideal(ambient, std::move(moved));
  P.generator_map = I.generators();
  P.source_ring = R;
  P.t_offset = 0;
  return P;
}

int analytic_spread(const Ideal& I) {
  if (I.is_zero()) throw Error("analytic spread of the zero ideal");
  if (I.is_unit()) throw Error("analytic spread of the unit ideal");
  return dimension(fiber_presentation(I).defining);
}

int generic_embedding_dimension(const Presentation& P, const PrimeCandidate& q,
                                uint64_t seed) {
  const RingPtr& A = P.ambient;
  const Field& F = *A->field();
  const unsigned n = A->arity();

  // The empty candidate is the generic point; a localization of a domain at
  // its zero ideal is a field.
  if (q.vars.empty()) return 0;

  std::vector<bool> in_q(n, false);
  for (unsigned v : q.vars) {
    if (v >= n) throw Error("prime candidate: variable index out of range");
    in_q[v] = true;
  }

  const auto& gb = P.defining.groebner();
  for (const Polynomial& g : gb)
    for (const Term& t : g.terms()) {
      bool touches_q = false;
      for (unsigned v : q.vars)
        if (t.mono.e[v] != 0) touches_q = true;
      if (!touches_q) throw Error("candidate does not contain defining ideal");
    }

  Rng master(seed);
  int result = -1;
  for (int trial = 0; trial < 3; ++trial) {
    Rng rng = master.fork(static_cast<uint64_t>(trial));
    std::vector<uint64_t> values(n, 0);
    for (unsigned i = 0; i < n; ++i)
      if (!in_q[i]) values[i] = rng.below(F.size());

    // Linear parts of the specialized generators, as rows over the field.
    std::vector<std::vector<uint64_t>> rows;
    for (const Polynomial& g : gb) {
      Polynomial s = g.substitute(in_q, values);
      std::vector<uint64_t> row(q.vars.size(), 0);
      bool nonzero = false;
      for (const Term& t : s.terms()) {
        if (t.mono.degree() != 1) continue;  // q-quadratic and higher die in q^2
        for (size_t j = 0; j < q.vars.size(); ++j)
          if (t.mono.e[q.vars[j]] == 1) {
            row[j] = F.add(row[j], t.coeff);
            nonzero = true;
          }
      }
      if (nonzero) rows.push_back(std::move(row));
    }

    // Row rank by Gaussian elimination.
    unsigned rank = 0;
    const size_t w = q.vars.size();
    for (size_t col = 0; col < w && rank < rows.size(); ++col) {
      size_t pivot = rows.size();
      for (size_t r = rank; r < rows.size(); ++r)
        if (rows[r][col] != 0) {
          pivot = r;
          break;
        }
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      uint64_t inv = F.inv(rows[rank][col]);
      for (size_t c = col; c < w; ++c) rows[rank][c] = F.mul(rows[rank][c], inv);
      for (size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        uint64_t f = rows[r][col];
        for (size_t c = col; c < w; ++c)
          rows[r][c] = F.sub(rows[r][c], F.mul(f, rows[rank][c]));
      }
      ++rank;
    }

    int edim = static_cast<int>(q.vars.size()) - static_cast<int>(rank);
    if (trial == 0) {
      result = edim;
    } else if (edim != result) {
      throw MathFindingError("specialization unstable: embedding dimension " +
                             std::to_string(result) + " vs " + std::to_string(edim) +
                             " across seeds");
    }
  }
  return result;
}

bool minimal_prime_certify(const Presentation& P, const PrimeCandidate& q) {
  const RingPtr& A = P.ambient;
  const unsigned n = A->arity();
  std::vector<bool> in_q(n, false);
  for (unsigned v : q.vars) {
    if (v >= n) throw Error("prime candidate: variable index out of range");
    in_q[v] = true;
  }
  // Containment: every term of every generator must involve a q-variable.
  for (const Polynomial& g : P.defining.generators())
    for (const Term& t : g.terms()) {
      bool touches = false;
      for (unsigned v = 0; v < n && !touches; ++v)
        if (in_q[v] && t.mono.e[v] != 0) touches = true;
      if (!touches) return false;
    }
  // Radical membership of every q-variable.
  for (unsigned v : q.vars)
    if (!radical_membership(Polynomial::variable(A, v), P.defining)) return false;
  return true;
}

bool serre_r1_check(const Presentation& P) {
  const RingPtr& A = P.ambient;
  const Ideal& D = P.defining;
  if (D.is_zero()) return true;  // polynomial ring, regular
  const int dim = dimension(D);
  if (dim < 0) throw Error("R1 check on the unit ideal");
  const int c = static_cast<int>(A->arity()) - dim;

  const auto& gb = D.groebner();
  const int rows = static_cast<int>(gb.size());
  const int cols = static_cast<int>(A->arity());
  if (c > rows) return false;  // no c x c minors: singular everywhere

  std::vector<std::vector<Polynomial>> jac(rows);
  for (int i = 0; i < rows; ++i) {
    jac[i].reserve(cols);
    for (int j = 0; j < cols; ++j) jac[i].push_back(gb[i].derivative(j));
  }

  std::vector<Polynomial> sing = D.generators();
  std::vector<int> rsel(c), csel(c);
  std::iota(rsel.begin(), rsel.end(), 0);
  auto next_combo = [](std::vector<int>& sel, int limit) {
    int k = static_cast<int>(sel.size());
    int i = k - 1;
    while (i >= 0 && sel[i] == limit - k + i) --i;
    if (i < 0) return false;
    ++sel[i];
    for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    return true;
  };
  do {
    std::iota(csel.begin(), csel.end(), 0);
    do {
      std::vector<std::vector<Polynomial>> sub(c);
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) sub[i].push_back(jac[rsel[i]][csel[j]]);
      Polynomial det = poly_det(A, sub);
      if (!det.is_zero()) sing.push_back(std::move(det));
    } while (next_combo(csel, cols));
  } while (next_combo(rsel, rows));

  int sing_dim = dimension(Ideal(A, std::move(sing)));
  return sing_dim <= dim - 2;
}

}  // namespace corelab
