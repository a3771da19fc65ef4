#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "corelab/field.hpp"

namespace corelab {

// Hard cap on ring arity.  The blow-up constructions need the original
// variables plus one presentation variable per generator plus an auxiliary
// elimination variable, which stays well under this at desk scale.
inline constexpr unsigned kMaxVars = 12;

// Exponent vector of fixed arity.  Unused slots stay zero, so comparisons
// and products may run over the full array.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint8_t arity = 0;

  static Monomial one(unsigned arity) {
    Monomial m;
    m.arity = static_cast<uint8_t>(arity);
    return m;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (unsigned i = 0; i < arity; ++i) d += e[i];
    return d;
  }
  bool is_one() const {
    for (unsigned i = 0; i < arity; ++i)
      if (e[i] != 0) return false;
    return true;
  }
  bool divides(const Monomial& m) const {
    for (unsigned i = 0; i < arity; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& m) const {
    Monomial r = *this;
    for (unsigned i = 0; i < arity; ++i) {
      uint32_t s = uint32_t{r.e[i]} + m.e[i];
      if (s > 0xffff) throw Error("monomial exponent overflow");
      r.e[i] = static_cast<uint16_t>(s);
    }
    return r;
  }
  // Exact quotient; requires m | *this.
  Monomial operator/(const Monomial& m) const {
    Monomial r = *this;
    for (unsigned i = 0; i < arity; ++i) {
      if (m.e[i] > r.e[i]) throw Error("monomial quotient is not exact");
      r.e[i] = static_cast<uint16_t>(r.e[i] - m.e[i]);
    }
    return r;
  }
  Monomial lcm(const Monomial& m) const {
    Monomial r = *this;
    for (unsigned i = 0; i < arity; ++i)
      r.e[i] = std::max(r.e[i], m.e[i]);
    return r;
  }
  // Exponentwise max(a-b, 0); the monomial colon rule.
  Monomial colon(const Monomial& m) const {
    Monomial r = *this;
    for (unsigned i = 0; i < arity; ++i)
      r.e[i] = static_cast<uint16_t>(r.e[i] > m.e[i] ? r.e[i] - m.e[i] : 0);
    return r;
  }
  bool coprime(const Monomial& m) const {
    for (unsigned i = 0; i < arity; ++i)
      if (e[i] != 0 && m.e[i] != 0) return false;
    return true;
  }

  bool operator==(const Monomial& m) const = default;
};

enum class OrderKind : uint8_t { kGrevlex, kLex, kBlock };

// A monomial order: graded reverse lexicographic, lexicographic, or a
// block elimination order that compares the first `block` variables by
// grevlex and breaks ties by grevlex on the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::kGrevlex;
  uint8_t block = 0;

  static MonomialOrder grevlex() { return {OrderKind::kGrevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::kLex, 0}; }
  static MonomialOrder block_elim(unsigned first_block) {
    return {OrderKind::kBlock, static_cast<uint8_t>(first_block)};
  }

  // Returns +1 if a > b, 0 if equal, -1 if a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  std::string name() const;

  bool operator==(const MonomialOrder&) const = default;
  bool operator<(const MonomialOrder& o) const {
    return kind != o.kind ? kind < o.kind : block < o.block;
  }
};

}  // namespace corelab
