#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace corelab {

// Library-wide error type. Subtypes distinguish mathematical findings
// (stability failures, genericity failures) from ordinary misuse.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A computation completed but the mathematics said "no": a stability
// assertion failed, sampling never produced a general enough element, or a
// random specialization was unstable.  The CLI maps these to exit code 2.
class MathFindingError : public Error {
 public:
  explicit MathFindingError(const std::string& what) : Error(what) {}
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Exact arithmetic in a finite coefficient field: either the prime field
// F_p or a binary extension GF(2^k) with 1 <= k <= 32.  Element values are
// canonical representatives, packed into a uint64_t: integers in [0,p) for
// prime fields, k-bit vectors for GF(2^k).
//
// Descriptors are interned, so pointer equality means "same field".
class Field {
 public:
  enum class Kind { kPrime, kGf2Ext };

  static FieldPtr prime(uint64_t p);
  static FieldPtr gf2_ext(unsigned k);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::kPrime; }
  uint64_t characteristic() const { return char_; }
  uint64_t size() const { return size_; }
  unsigned extension_degree() const { return k_; }
  // Reduction polynomial for GF(2^k), bit i = coefficient of x^i.
  uint64_t reduction_poly() const { return redpoly_; }

  uint64_t zero() const { return 0; }
  uint64_t one() const { return 1; }
  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;
  uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }
  uint64_t pow(uint64_t a, uint64_t e) const;
  // Canonical ring map Z -> field (mod p, respectively mod 2).
  uint64_t from_int(long long n) const;
  uint64_t frobenius(uint64_t a) const;
  // Multiply by an integer scalar, e.g. an exponent from differentiation.
  uint64_t mul_int(uint64_t a, uint64_t n) const;
  bool is_canonical(uint64_t a) const { return a < size_; }

  std::string to_string(uint64_t a) const;
  std::string describe() const;  // e.g. "F_32003" or "GF(2^16)"

  ~Field() = default;
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  void init_prime(uint64_t p);
  void init_gf2(unsigned k);

  Kind kind_ = Kind::kPrime;
  uint64_t char_ = 0;
  uint64_t size_ = 0;
  unsigned k_ = 1;
  uint64_t redpoly_ = 0;
  // Discrete log tables for GF(2^k) with k <= 16.
  std::vector<uint32_t> exp_;
  std::vector<uint32_t> log_;
};

// An element bundled with its field, for API boundaries and tests.  The
// polynomial layer stores raw values and goes through the ring's field.
struct FieldElement {
  FieldPtr field;
  uint64_t value = 0;

  FieldElement operator+(const FieldElement& o) const {
    return {field, field->add(value, o.value)};
  }
  FieldElement operator-(const FieldElement& o) const {
    return {field, field->sub(value, o.value)};
  }
  FieldElement operator*(const FieldElement& o) const {
    return {field, field->mul(value, o.value)};
  }
  FieldElement inverse() const { return {field, field->inv(value)}; }
  bool operator==(const FieldElement& o) const {
    return field.get() == o.field.get() && value == o.value;
  }
};

// GF(2)[x] helpers shared with tests: carry-less product reduced mod f.
uint64_t gf2_poly_mul_mod(uint64_t a, uint64_t b, uint64_t f, unsigned k);
// Rabin irreducibility test for f of degree k over F_2.
bool gf2_poly_irreducible(uint64_t f, unsigned k);

}  // namespace corelab
