#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corelab/field.hpp"

using namespace corelab;

TEST_CASE("prime field basics") {
  auto F = Field::prime(32003);
  CHECK(F->characteristic() == 32003);
  CHECK(F->size() == 32003);
  CHECK(F->add(32000, 5) == 2);
  CHECK(F->sub(3, 5) == 32001);
  CHECK(F->mul(32002, 32002) == 1);  // (-1)^2
  CHECK(F->from_int(-1) == 32002);
  CHECK(F->from_int(32003) == 0);
  for (uint64_t a : {1ull, 2ull, 17ull, 32002ull})
    CHECK(F->mul(a, F->inv(a)) == 1);
  CHECK_THROWS_AS(F->inv(0), Error);
}

TEST_CASE("prime modulus validation") {
  CHECK_THROWS_AS(Field::prime(32004), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK(Field::prime(2)->characteristic() == 2);
}

TEST_CASE("field descriptors are interned") {
  CHECK(Field::prime(32003).get() == Field::prime(32003).get());
  CHECK(Field::gf2_ext(16).get() == Field::gf2_ext(16).get());
  CHECK(Field::prime(2).get() != Field::gf2_ext(1).get());
}

TEST_CASE("reduction polynomial table is irreducible for every k") {
  for (unsigned k = 1; k <= 32; ++k) {
    auto F = Field::gf2_ext(k);
    CHECK(gf2_poly_irreducible(F->reduction_poly(), k));
    CHECK(F->size() == (uint64_t{1} << k));
    CHECK(F->characteristic() == 2);
  }
}

TEST_CASE("GF(2^8) multiplicative group, exhaustive") {
  auto F = Field::gf2_ext(8);
  // every nonzero element is invertible
  for (uint64_t a = 1; a < 256; ++a) CHECK(F->mul(a, F->inv(a)) == 1);
  // associativity spot checks against the carry-less reference
  for (uint64_t a = 1; a < 256; a += 7)
    for (uint64_t b = 1; b < 256; b += 11)
      CHECK(F->mul(a, b) == gf2_poly_mul_mod(a, b, F->reduction_poly(), 8));
}

TEST_CASE("Frobenius is a bijection on GF(2^8)") {
  auto F = Field::gf2_ext(8);
  std::set<uint64_t> image;
  for (uint64_t a = 0; a < 256; ++a) image.insert(F->frobenius(a));
  CHECK(image.size() == 256);
}

TEST_CASE("GF(2^16) log tables agree with carry-less multiplication") {
  auto F = Field::gf2_ext(16);
  uint64_t a = 0x1234, b = 0xbeef;
  CHECK(F->mul(a, b) == gf2_poly_mul_mod(a, b, F->reduction_poly(), 16));
  CHECK(F->mul(a, F->inv(a)) == 1);
}

TEST_CASE("large extension without tables") {
  auto F = Field::gf2_ext(20);
  uint64_t a = 0x7231f;
  CHECK(F->mul(a, F->inv(a)) == 1);
  CHECK(F->mul(0, a) == 0);
}

TEST_CASE("integers reduce into GF(2^k) through the prime subfield") {
  auto F = Field::gf2_ext(16);
  CHECK(F->from_int(2) == 0);
  CHECK(F->from_int(5) == 1);
  CHECK(F->from_int(-3) == 1);
}

TEST_CASE("FieldElement wrapper") {
  auto F = Field::prime(7);
  FieldElement a{F, 3}, b{F, 5};
  CHECK((a * b).value == 1);
  CHECK((a + b).value == 1);
  CHECK((a - b).value == 5);
  CHECK(a.inverse().value == 5);
}
