#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corelab/io.hpp"
#include "corelab/monomial_ideal.hpp"
#include "corelab/rng.hpp"

using namespace corelab;

namespace {
RingPtr ring2() { return PolyRing::make({"x", "y"}, Field::prime(32003)); }
Ideal I(const RingPtr& R, std::initializer_list<std::string> gens) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(parse_polynomial(R, s));
  return Ideal(R, std::move(ps));
}
}  // namespace

TEST_CASE("containment") {
  auto R = ring2();
  CHECK(contains(I(R, {"x", "y"}), I(R, {"x^2", "x*y"})));
  CHECK_FALSE(contains(I(R, {"x^2"}), I(R, {"x"})));
  // x^5*y^3 lies outside (x^6, y^9)
  Ideal big = I(R, {"x^6", "x^5*y^3", "x^4*y^4", "x^2*y^8", "y^9"});
  CHECK_FALSE(contains(I(R, {"x^6", "y^9"}), big));
  CHECK(contains(big, I(R, {"x^6", "y^9"})));
}

TEST_CASE("intersection") {
  auto R = ring2();
  CHECK(ideal_equal(intersect(I(R, {"x"}), I(R, {"y"})), I(R, {"x*y"})));
  CHECK(ideal_equal(intersect(I(R, {"x^2", "x*y"}), I(R, {"y^2", "x*y"})),
                    I(R, {"x*y"})));
  Ideal J = I(R, {"x^2 - y", "y^3"});
  CHECK(ideal_equal(intersect(J, J), J));
}

TEST_CASE("colon") {
  auto R = ring2();
  CHECK(ideal_equal(colon(I(R, {"x^2", "y"}), I(R, {"x"})), I(R, {"x", "y"})));
  Ideal J = I(R, {"x^3 - y", "x*y"});
  CHECK(ideal_equal(colon(J, Ideal::unit(R)), J));
  CHECK_THROWS_AS(colon(J, Ideal::zero(R)), Error);
}

TEST_CASE("saturation") {
  auto R = ring2();
  CHECK(ideal_equal(saturate(I(R, {"x^2*y"}), I(R, {"y"})), I(R, {"x^2"})));
  CHECK(saturate(I(R, {"x^2", "x*y"}), I(R, {"x"})).is_unit());
  Ideal J = I(R, {"x^2", "y^3"});
  CHECK(ideal_equal(saturate(J, Ideal::unit(R)), J));
}

TEST_CASE("powers") {
  auto R = ring2();
  Ideal m = I(R, {"x", "y"});
  CHECK(ideal_equal(power(m, 2), I(R, {"x^2", "x*y", "y^2"})));
  CHECK(power(m, 0).is_unit());
  CHECK(ideal_equal(power(I(R, {"x^6", "y^9"}), 3),
                    I(R, {"x^18", "x^12*y^9", "x^6*y^18", "y^27"})));
}

TEST_CASE("power additivity for a small non-monomial ideal") {
  auto R = ring2();
  Ideal J = I(R, {"x^2 - y", "y^2"});
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; a + b <= 4; ++b)
      CHECK(ideal_equal(product(power(J, a), power(J, b)), power(J, a + b)));
}

TEST_CASE("elimination") {
  auto Rt = PolyRing::make({"t", "x"}, Field::prime(32003));
  Ideal hyper = I(Rt, {"t*x - 1"});
  CHECK(eliminate(hyper, {0}).is_zero());

  auto R5 = PolyRing::make({"x", "y", "T1", "T2", "T3"}, Field::prime(32003));
  Ideal ver = I(R5, {"T1 - x^2", "T2 - x*y", "T3 - y^2"});
  Ideal out = eliminate(ver, {0, 1});
  REQUIRE(out.generators().size() == 1);
  CHECK(to_string(out.generators()[0]) == "T2^2 - T1*T3");

  Ideal J = I(R5, {"x^2", "T1"});
  CHECK(ideal_equal(eliminate(J, {}), J));
}

TEST_CASE("dimension and height") {
  auto R = ring2();
  CHECK(dimension(I(R, {"x"})) == 1);
  CHECK(height(I(R, {"x"})) == 1);
  CHECK(dimension(I(R, {"x^2", "y^3"})) == 0);
  CHECK(height(I(R, {"x^2", "y^3"})) == 2);
  CHECK(dimension(Ideal::zero(R)) == 2);
  CHECK(dimension(Ideal::unit(R)) == -1);
  CHECK_THROWS_AS(height(Ideal::unit(R)), Error);

  auto R5 = PolyRing::make({"a", "b", "c", "d", "e"}, Field::gf2_ext(16));
  Ideal P = I(R5, {"b^2", "b*d", "c*d", "d^2", "c^2 - a*d"});
  CHECK(dimension(P) == 2);
}

TEST_CASE("dimension is monotone under containment") {
  auto R = ring2();
  Rng rng(4242);
  for (int inst = 0; inst < 40; ++inst) {
    std::vector<Polynomial> gens;
    const int count = 1 + static_cast<int>(rng.below(3));
    for (int g = 0; g < count; ++g) {
      Monomial m = Monomial::one(2);
      m.e[0] = static_cast<uint16_t>(rng.below(5));
      m.e[1] = static_cast<uint16_t>(rng.below(5));
      if (m.is_one()) m.e[0] = 1;
      gens.push_back(Polynomial::monomial(R, m, 1));
    }
    Ideal small(R, gens);
    gens.push_back(Polynomial::monomial(
        R, [&] {
          Monomial m = Monomial::one(2);
          m.e[1] = static_cast<uint16_t>(1 + rng.below(4));
          return m;
        }(), 1));
    Ideal large(R, gens);
    CHECK(dimension(small) >= dimension(large));
  }
}

TEST_CASE("radical membership") {
  auto R5 = PolyRing::make({"a", "b", "c", "d", "e"}, Field::gf2_ext(16));
  Ideal P = I(R5, {"b^2", "b*d", "c*d", "d^2", "c^2 - a*d"});
  CHECK(radical_membership(parse_polynomial(R5, "b"), P));
  CHECK(radical_membership(parse_polynomial(R5, "c"), P));
  CHECK_FALSE(radical_membership(parse_polynomial(R5, "a"), P));

  auto R = ring2();
  CHECK(radical_membership(parse_polynomial(R, "x"), I(R, {"x"})));
}

TEST_CASE("monomial oracle basics") {
  auto R = ring2();
  CHECK(ideal_equal(oracle_intersect(I(R, {"x"}), I(R, {"y"})), I(R, {"x*y"})));
  CHECK(ideal_equal(oracle_colon(I(R, {"x^2", "y"}), I(R, {"x"})), I(R, {"x", "y"})));
  CHECK(ideal_equal(oracle_power(I(R, {"x^6", "y^9"}), 3),
                    power(I(R, {"x^6", "y^9"}), 3)));
  CHECK(oracle_membership(parse_polynomial(R, "x^3*y"), I(R, {"x^2"})));
  CHECK_FALSE(oracle_membership(parse_polynomial(R, "y^5"), I(R, {"x^2"})));
  CHECK_THROWS_AS(oracle_power(I(R, {"x + y"}), 2), Error);
}

TEST_CASE("oracle cross-check on the colon golden value") {
  auto R = ring2();
  Ideal H = I(R, {"x^6", "y^9"});
  Ideal big = I(R, {"x^6", "x^5*y^3", "x^4*y^4", "x^2*y^8", "y^9"});
  Ideal lhs = colon(power(H, 3), power(big, 2));
  Ideal rhs = oracle_colon(oracle_power(H, 3), oracle_power(big, 2));
  CHECK(ideal_equal(lhs, rhs));
}

TEST_CASE("zero and unit conventions") {
  auto R = ring2();
  CHECK(Ideal::zero(R).is_zero());
  CHECK(Ideal::unit(R).is_unit());
  CHECK(power(Ideal::zero(R), 2).is_zero());
  CHECK(intersect(Ideal::zero(R), I(R, {"x"})).is_zero());
  CHECK(contains(I(R, {"x"}), Ideal::zero(R)));
}
