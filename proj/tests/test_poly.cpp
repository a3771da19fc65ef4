#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corelab/io.hpp"
#include "corelab/polynomial.hpp"

using namespace corelab;

namespace {
RingPtr ring2(FieldPtr F = Field::prime(32003)) {
  return PolyRing::make({"x", "y"}, std::move(F));
}
Polynomial P(const RingPtr& R, const std::string& s) {
  return parse_polynomial(R, s);
}
}  // namespace

TEST_CASE("grevlex breaks degree ties toward the earlier variable") {
  auto R = ring2();
  // x^2*y and y^3 both have degree 3; grevlex(x > y) puts x^2*y first.
  Polynomial f = P(R, "x^2*y + y^3");
  auto lt = f.leading_term();
  CHECK(lt.mono.e[0] == 2);
  CHECK(lt.mono.e[1] == 1);
  CHECK(lt.coeff == 1);
}

TEST_CASE("leading term under lex") {
  auto R = ring2();
  Polynomial f = P(R, "x + y^5");
  auto lt = f.leading_term(MonomialOrder::lex());
  CHECK(lt.mono.e[0] == 1);
  CHECK(lt.mono.e[1] == 0);
}

TEST_CASE("leading term with a scalar") {
  auto R = PolyRing::make({"x"}, Field::prime(7));
  Polynomial f = P(R, "5*x^3 + x");
  auto lt = f.leading_term();
  CHECK(lt.coeff == 5);
  CHECK(lt.mono.e[0] == 3);
}

TEST_CASE("leading term of zero throws") {
  auto R = ring2();
  CHECK_THROWS_WITH_AS(Polynomial::zero(R).leading_term(), "leading term of zero",
                       Error);
}

TEST_CASE("arithmetic and normalization") {
  auto R = ring2();
  Polynomial f = P(R, "x + y");
  Polynomial g = P(R, "x - y");
  CHECK(to_string(f * g) == "x^2 - y^2");
  CHECK((f - f).is_zero());
  CHECK(to_string(f + f) == "2*x + 2*y");
  Polynomial h = P(R, "x*y + 1");
  CHECK(h.degree() == 2);
  CHECK_FALSE(h.constant_term_free());
  CHECK(f.constant_term_free());
}

TEST_CASE("cancellation in products over characteristic 2") {
  auto R = ring2(Field::gf2_ext(16));
  Polynomial f = P(R, "x + y");
  CHECK(to_string(f * f) == "x^2 + y^2");
}

TEST_CASE("monic scales the leading coefficient to one") {
  auto R = ring2();
  Polynomial f = P(R, "3*x^2 + 6*y");
  Polynomial m = f.monic();
  CHECK(m.leading_term().coeff == 1);
  CHECK(to_string(m) == "x^2 + 2*y");
}

TEST_CASE("derivative respects the characteristic") {
  auto R = ring2(Field::gf2_ext(16));
  Polynomial f = P(R, "x^2 + x*y");
  CHECK(to_string(f.derivative(0)) == "y");  // 2x dies in char 2
  auto Rp = ring2();
  Polynomial g = P(Rp, "x^3*y");
  CHECK(to_string(g.derivative(0)) == "3*x^2*y");
}

TEST_CASE("substitution of a subset of variables") {
  auto R = ring2();
  Polynomial f = P(R, "x^2*y + 3*y + 5");
  Polynomial s = f.substitute({false, true}, {2, 0});
  CHECK(to_string(s) == "7*y + 5");
}

TEST_CASE("transport between rings") {
  auto R = ring2();
  auto R3 = PolyRing::make({"t", "x", "y"}, R->field());
  Polynomial f = P(R, "x^2 - y");
  Polynomial g = transport(f, R3, {1, 2});
  CHECK(to_string(g) == "x^2 - y");
  CHECK(g.ring()->arity() == 3);
  Polynomial back = transport(g, R, {-1, 0, 1});  // t unused in g
  CHECK(back == f);
  // dropping a used variable is an error
  Polynomial uses_t = parse_polynomial(R3, "t*x - 1");
  CHECK_THROWS_AS(transport(uses_t, R, {-1, 0, 1}), Error);
}

TEST_CASE("ring construction validation") {
  CHECK_THROWS_AS(PolyRing::make({"x", "x"}, Field::prime(7)), Error);
  CHECK_THROWS_AS(PolyRing::make({}, Field::prime(7)), Error);
  auto R = ring2();
  CHECK(R->fresh_name("x") == "x_");
  CHECK(R->fresh_name("t") == "t");
}
