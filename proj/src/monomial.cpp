#include "corelab/monomial.hpp"

namespace corelab {

namespace {

// grevlex on the variable range [lo, hi): higher total degree wins; on ties
// the monomial whose last nonzero exponent difference is negative wins.
int grevlex_range(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
  int da = 0, db = 0;
  for (unsigned i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (unsigned i = hi; i-- > lo;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const unsigned n = a.arity;
  switch (kind) {
    case OrderKind::kGrevlex:
      return grevlex_range(a, b, 0, n);
    case OrderKind::kLex:
      for (unsigned i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    case OrderKind::kBlock: {
      const unsigned cut = std::min<unsigned>(block, n);
      if (int c = grevlex_range(a, b, 0, cut)) return c;
      return grevlex_range(a, b, cut, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::kGrevlex:
      return "grevlex";
    case OrderKind::kLex:
      return "lex";
    case OrderKind::kBlock:
      return "block(" + std::to_string(block) + ")";
  }
  return "?";
}

}  // namespace corelab
