#include "corelab/core.hpp"

#include <algorithm>

#include "corelab/io.hpp"

namespace corelab {

namespace {

// Drop components away from the origin (present when the input was built
// from sampled inhomogeneous elements); positive-dimensional values pass
// through unchanged.
Ideal localized(const Ideal& I) {
  if (!I.is_zero() && !I.is_unit() && dimension(I) == 0)
    return origin_primary_part(I);
  return I;
}

Ideal formula_value(const Ideal& I, const Ideal& J, int n) {
  Ideal jp = J.cached_power(static_cast<unsigned>(n + 1));
  Ideal ip = I.cached_power(static_cast<unsigned>(n));
  return localized(colon(jp, ip));
}

std::string char_condition_note(const Field& F, int r, int ell, int g) {
  const long long gap = static_cast<long long>(r) - ell + g;
  const bool ok = static_cast<long long>(F.characteristic()) > gap;
  std::string s = "characteristic condition (char k > r - l + g): ";
  if (ok) {
    s += "PASS (" + std::to_string(F.characteristic()) + " > " + std::to_string(gap) + ")";
  } else {
    s += "FAIL (char " + std::to_string(F.characteristic()) + " <= r - l + g = " +
         std::to_string(gap) + "); the formula value may differ from the true core";
  }
  return s;
}

}  // namespace

Ideal core_formula(const Ideal& I, const Ideal& J, int n) {
  ReductionReport rep = is_reduction(J, I);
  if (!rep.verified)
    throw Error("core formula requires a verified reduction (bound " +
                std::to_string(rep.bound_used) + ")");
  const int ell = analytic_spread(I);
  const int g = height(I);
  const int n0 = std::max(rep.r - ell + g, 0);
  if (n < n0)
    throw Error("n = " + std::to_string(n) +
                " is below the threshold max{r - l + g, 0} = " + std::to_string(n0));
  return formula_value(I, J, n);
}

CoreReport core_auto(const Ideal& I, uint64_t seed) {
  if (I.is_zero() || I.is_unit()) throw Error("core needs a nonzero proper ideal");
  const int ell = analytic_spread(I);
  const int g = height(I);

  Rng rng(seed);
  const uint64_t seed1 = rng.next();
  const uint64_t seed2 = rng.next();
  ReductionReport rep1 = minimal_reduction(I, seed1, ell);
  ReductionReport rep2 = minimal_reduction(I, seed2, ell);

  CoreReport out;
  out.g = g;
  out.ell = ell;
  out.r = std::max(rep1.r, rep2.r);
  out.j_used = rep1.J;
  out.n_used = std::max(rep1.r - ell + g, 0);

  bool have_value = false;
  Ideal value;
  std::pair<int, uint64_t> first_cell;
  for (const ReductionReport* rep : {&rep1, &rep2}) {
    const int n0 = std::max(rep->r - ell + g, 0);
    for (int dn = 0; dn <= 2; ++dn) {
      const int n = n0 + dn;
      Ideal v = formula_value(I, rep->J, n);
      if (!have_value) {
        value = v;
        have_value = true;
        first_cell = {n, rep->seed};
      } else if (!ideal_equal(v, value)) {
        throw MathFindingError(
            "stability failure: J^{n+1}:I^n differs between (n=" +
            std::to_string(first_cell.first) + ", seed=" +
            std::to_string(first_cell.second) + ") and (n=" + std::to_string(n) +
            ", seed=" + std::to_string(rep->seed) + "): " + to_string(value) +
            " vs " + to_string(v));
      }
      out.stability.emplace_back(n, rep->seed);
    }
  }
  out.formula_value = value;

  out.hypothesis_notes.push_back(
      char_condition_note(*I.ring()->field(), out.r, ell, g));
  out.hypothesis_notes.push_back(g == ell ? "equimultiple (ht I = l(I))"
                                          : "not equimultiple (ht I < l(I))");
  out.hypothesis_notes.push_back(
      dimension(I) == 0
          ? "G_l and depth conditions automatic (zero-dimensional ideal)"
          : "G_l and depth conditions unchecked");
  return out;
}

McCoreReport core_monte_carlo(const Ideal& I, int min_trials, int stall,
                              uint64_t seed, bool homogeneous) {
  if (min_trials < 1) throw Error("mc-core needs min_trials >= 1");
  if (stall < 8) throw Error("mc-core needs stall >= 8");
  if (I.is_zero() || I.is_unit()) throw Error("core needs a nonzero proper ideal");
  const int ell = analytic_spread(I);

  McCoreReport out;
  out.homogeneous = homogeneous;
  Rng rng(seed);
  Ideal current;
  bool have = false;
  int since_shrink = 0;
  while (true) {
    const uint64_t trial_seed = rng.next();
    out.seeds.push_back(trial_seed);
    ReductionReport rep = minimal_reduction(I, trial_seed, ell, homogeneous);
    ++out.trials;
    Ideal trial_value = localized(rep.J);
    if (!have) {
      current = trial_value;
      have = true;
      since_shrink = 0;
    } else {
      Ideal next = intersect(current, trial_value);
      if (ideal_equal(next, current)) {
        ++since_shrink;
      } else {
        current = next;
        since_shrink = 0;
      }
    }
    if (out.trials >= min_trials && since_shrink >= stall) break;
  }
  out.value = current;
  out.stabilized_after = since_shrink;
  return out;
}

DecompositionReport decomposition_check(const Ideal& I, int s, int n_max,
                                        uint64_t seed) {
  if (s < 1) throw Error("decomposition check needs s >= 1");
  if (I.is_zero() || I.is_unit()) throw Error("decomposition needs a nonzero proper ideal");
  const int ell = analytic_spread(I);
  Rng rng(seed);

  // Sample ell+s general elements such that the first ell generate a
  // reduction (defines the generic reduction number).
  std::vector<Polynomial> elems;
  ReductionReport lead_rep;
  bool ok = false;
  for (int attempt = 0; attempt < 5 && !ok; ++attempt) {
    elems.clear();
    for (int i = 0; i < ell + s; ++i) elems.push_back(random_element(I, rng));
    std::vector<Polynomial> lead(elems.begin(), elems.begin() + ell);
    lead_rep = is_reduction(Ideal(I.ring(), std::move(lead)), I);
    ok = lead_rep.verified;
  }
  if (!ok)
    throw MathFindingError("genericity failure (enlarge field or reseed)");

  DecompositionReport out;
  out.seed = seed;
  out.elements = elems;
  out.generic_r = lead_rep.r;
  out.n_lo = lead_rep.r + 1;
  out.n_max = n_max;
  if (n_max < out.n_lo)
    throw Error("n_max = " + std::to_string(n_max) +
                " is below the window start " + std::to_string(out.n_lo));

  // f_1..f_{ell-1} and f_ell..f_{ell+s}
  std::vector<Polynomial> front(elems.begin(), elems.begin() + (ell - 1));
  Ideal a(I.ring(), std::move(front));  // may be the zero ideal when ell = 1
  std::vector<Polynomial> back(elems.begin() + (ell - 1), elems.end());
  Ideal ks(I.ring(), std::move(back));

  out.holds = true;
  for (int n = out.n_lo; n <= n_max; ++n) {
    Ideal lhs = I.cached_power(static_cast<unsigned>(n));
    Ideal rhs = a.is_zero()
                    ? power(ks, static_cast<unsigned>(n))
                    : sum(product(a, I.cached_power(static_cast<unsigned>(n - 1))),
                          power(ks, static_cast<unsigned>(n)));
    if (!locally_equal_at_origin(lhs, rhs)) {
      out.holds = false;
      out.first_failure_n = n;
      break;
    }
  }
  return out;
}

HypothesisReport hypothesis_report(const Ideal& I, const Ideal& J,
                                   const std::vector<PrimeCandidate>& primes,
                                   uint64_t seed) {
  ReductionReport rep = is_reduction(J, I);
  if (!rep.verified)
    throw Error("hypothesis report requires a verified reduction (bound " +
                std::to_string(rep.bound_used) + ")");
  HypothesisReport out;
  out.ell = analytic_spread(I);
  out.g = height(I);
  out.r = rep.r;
  out.n_threshold = std::max(rep.r - out.ell + out.g, 0);
  const Field& F = *I.ring()->field();
  out.characteristic = F.characteristic();
  out.char_ok = static_cast<long long>(F.characteristic()) >
                static_cast<long long>(rep.r) - out.ell + out.g;
  out.equimultiple = (out.g == out.ell);
  out.m_primary = (dimension(I) == 0);

  out.notes.push_back(char_condition_note(F, rep.r, out.ell, out.g));
  out.notes.push_back(out.equimultiple ? "equimultiple (ht I = l(I))"
                                       : "not equimultiple (ht I < l(I))");
  out.notes.push_back(out.m_primary
                          ? "G_l and depth conditions automatic (zero-dimensional ideal)"
                          : "G_l and depth conditions unchecked");

  if (!primes.empty()) {
    Presentation P = fiber_presentation(I);
    Rng rng(seed);
    for (const PrimeCandidate& q : primes) {
      HypothesisReport::PrimeNote note;
      std::string desc = "(";
      for (size_t i = 0; i < q.vars.size(); ++i) {
        if (i) desc += ",";
        desc += P.ambient->var_name(q.vars[i]);
      }
      desc += ")";
      note.candidate = desc;
      note.certified = minimal_prime_certify(P, q);
      note.edim = generic_embedding_dimension(P, q, rng.next());
      out.primes.push_back(note);
      out.notes.push_back("embedding dimension at " + desc + ": " +
                          std::to_string(note.edim) +
                          (note.certified ? " (certified unique minimal prime)"
                                          : " (candidate not certified)"));
    }
  }
  return out;
}

}  // namespace corelab
