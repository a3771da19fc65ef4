#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corelab/blowup.hpp"
#include "corelab/io.hpp"
#include "corelab/verify.hpp"

using namespace corelab;

namespace {
RingPtr ring2(FieldPtr F = Field::prime(32003)) {
  return PolyRing::make({"x", "y"}, std::move(F));
}
Ideal I(const RingPtr& R, std::initializer_list<std::string> gens) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(parse_polynomial(R, s));
  return Ideal(R, std::move(ps));
}
}  // namespace

TEST_CASE("Rees presentation of the maximal ideal is the Koszul syzygy") {
  auto R = ring2();
  Presentation P = rees_presentation(I(R, {"x", "y"}));
  REQUIRE(P.defining.generators().size() == 1);
  CHECK(to_string(P.defining.generators()[0]) == "y*T1 - x*T2");
}

TEST_CASE("Rees presentation of a principal ideal is free") {
  auto R = ring2();
  CHECK(rees_presentation(I(R, {"x"})).defining.is_zero());
}

TEST_CASE("Rees generators vanish under the tautological substitution") {
  auto R = ring2();
  Ideal J = I(R, {"x^2", "x*y", "y^2"});
  Presentation P = rees_presentation(J);
  // map x,y identically and T_i -> t*f_i inside k[t,x,y]
  auto big = PolyRing::make({"t", "x", "y"}, R->field());
  std::vector<int> xmap = {1, 2};
  Polynomial t = Polynomial::variable(big, 0);
  for (const Polynomial& rel : P.defining.generators()) {
    // substitute term by term
    Polynomial image = Polynomial::zero(big);
    for (const Term& term : rel.terms()) {
      Polynomial factor = Polynomial::constant(big, term.coeff);
      for (unsigned v = 0; v < P.ambient->arity(); ++v) {
        for (int rep = 0; rep < term.mono.e[v]; ++rep) {
          if (v < 2) {
            factor = factor * Polynomial::variable(big, 1 + v);
          } else {
            factor = factor * (t * transport(J.generators()[v - 2], big, xmap));
          }
        }
      }
      image = image + factor;
    }
    CHECK(image.is_zero());
  }
}

TEST_CASE("fiber of the maximal ideal is a polynomial ring") {
  auto R = ring2();
  Presentation P = fiber_presentation(I(R, {"x", "y"}));
  CHECK(P.defining.is_zero());
  CHECK(P.ambient->arity() == 2);
}

TEST_CASE("fiber of the squared maximal ideal is the quadric cone") {
  auto R = ring2();
  Presentation P = fiber_presentation(I(R, {"x^2", "x*y", "y^2"}));
  REQUIRE(P.defining.generators().size() == 1);
  CHECK(to_string(P.defining.generators()[0]) == "T2^2 - T1*T3");
}

TEST_CASE("fiber rejects ideals outside the maximal ideal") {
  auto R = ring2();
  CHECK_THROWS_AS(fiber_presentation(I(R, {"x + 1"})), Error);
}

TEST_CASE("analytic spread") {
  auto R = ring2();
  CHECK(analytic_spread(I(R, {"x", "y"})) == 2);
  CHECK(analytic_spread(I(R, {"x^2"})) == 1);
  CHECK(analytic_spread(I(R, {"x^2", "x*y"})) == 2);
  CHECK(analytic_spread(I(R, {"x^2", "y^3"})) == 2);
  // spread is sandwiched between height and arity
  for (auto gens : {std::vector<std::string>{"x^2", "x*y"},
                    std::vector<std::string>{"x^3"},
                    std::vector<std::string>{"x", "y"}}) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(R, s));
    Ideal J(R, std::move(ps));
    int ell = analytic_spread(J);
    CHECK(height(J) <= ell);
    CHECK(ell <= 2);
  }
}

TEST_CASE("generic embedding dimension on polynomial rings and cones") {
  auto RT = PolyRing::make({"T1", "T2"}, Field::prime(32003));
  Presentation free;
  free.ambient = RT;
  free.defining = Ideal::zero(RT);
  CHECK(generic_embedding_dimension(free, PrimeCandidate::of({0, 1}), 3) == 2);
  CHECK(generic_embedding_dimension(free, PrimeCandidate::of({}), 3) == 0);

  auto R3 = PolyRing::make({"T1", "T2", "T3"}, Field::prime(32003));
  Presentation cone;
  cone.ambient = R3;
  cone.defining = Ideal(R3, {parse_polynomial(R3, "T1*T3 - T2^2")});
  // at the generic point of the (domain) cone
  CHECK(generic_embedding_dimension(cone, PrimeCandidate::of({}), 3) == 0);
  // the vertex is a genuine embedding-dimension-3 point
  CHECK(generic_embedding_dimension(cone, PrimeCandidate::of({0, 1, 2}), 3) == 3);
  // a candidate that misses the defining ideal is rejected
  CHECK_THROWS_WITH_AS(
      generic_embedding_dimension(cone, PrimeCandidate::of({0}), 3),
      "candidate does not contain defining ideal", Error);
}

TEST_CASE("five-generator char-2 fiber: certified prime and edim 2") {
  auto R = ring2(Field::gf2_ext(16));
  Presentation P = fiber_presentation(corpus_ideal_52(R));
  PrimeCandidate q = PrimeCandidate::of({1, 2, 3});
  CHECK(minimal_prime_certify(P, q));
  for (uint64_t seed : {1ull, 2ull, 3ull})
    CHECK(generic_embedding_dimension(P, q, seed) == 2);
  // the vertex (all five variables) is not certified: T1, T5 fail radical
  // membership
  CHECK_FALSE(minimal_prime_certify(P, PrimeCandidate::of({0, 1, 2, 3, 4})));
}

TEST_CASE("minimal prime certification edge cases") {
  auto R2 = PolyRing::make({"T1", "T2"}, Field::prime(32003));
  Presentation two_axes;
  two_axes.ambient = R2;
  two_axes.defining = Ideal(R2, {parse_polynomial(R2, "T1*T2")});
  // (T1) is one of two minimal primes, not the unique one
  CHECK_FALSE(minimal_prime_certify(two_axes, PrimeCandidate::of({0})));

  Presentation free;
  free.ambient = R2;
  free.defining = Ideal::zero(R2);
  CHECK(minimal_prime_certify(free, PrimeCandidate::of({})));

  auto R3 = PolyRing::make({"T1", "T2", "T3"}, Field::prime(32003));
  Presentation cone;
  cone.ambient = R3;
  cone.defining = Ideal(R3, {parse_polynomial(R3, "T1*T3 - T2^2")});
  // dimension mismatch: the vertex is not a minimal prime of the cone
  CHECK(dimension(cone.defining) == 2);
  CHECK(dimension(sum(cone.defining,
                      Ideal(R3, {Polynomial::variable(R3, 0),
                                 Polynomial::variable(R3, 1),
                                 Polynomial::variable(R3, 2)}))) == 0);
  CHECK_FALSE(minimal_prime_certify(cone, PrimeCandidate::of({0, 1, 2})));
}

TEST_CASE("Serre R1 check") {
  auto R3 = PolyRing::make({"T1", "T2", "T3"}, Field::prime(32003));
  Presentation free;
  free.ambient = R3;
  free.defining = Ideal::zero(R3);
  CHECK(serre_r1_check(free));

  Presentation cone;
  cone.ambient = R3;
  cone.defining = Ideal(R3, {parse_polynomial(R3, "T1*T3 - T2^2")});
  CHECK(serre_r1_check(cone));

  // same cone in characteristic 2
  auto R3g = PolyRing::make({"T1", "T2", "T3"}, Field::gf2_ext(16));
  Presentation cone2;
  cone2.ambient = R3g;
  cone2.defining = Ideal(R3g, {parse_polynomial(R3g, "T1*T3 - T2^2")});
  CHECK(serre_r1_check(cone2));

  auto Rg = ring2(Field::gf2_ext(16));
  CHECK_FALSE(serre_r1_check(fiber_presentation(corpus_k_53(Rg))));
}

TEST_CASE("fiber presentations live in as many variables as generators") {
  auto R = ring2();
  for (auto gens : {std::vector<std::string>{"x^2", "x*y"},
                    std::vector<std::string>{"x^2", "x*y", "y^2"},
                    std::vector<std::string>{"x^3", "y^4"}}) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(R, s));
    Ideal J(R, std::move(ps));
    Presentation P = fiber_presentation(J);
    CHECK(P.ambient->arity() == gens.size());
    CHECK(dimension(P.defining) <= static_cast<int>(gens.size()));
  }
}

TEST_CASE("equigenerated fiber relations vanish under direct substitution") {
  auto R = ring2();
  Ideal J = I(R, {"x^2", "x*y", "y^2"});
  Presentation P = fiber_presentation(J);
  for (const Polynomial& rel : P.defining.generators()) {
    Polynomial image = Polynomial::zero(R);
    for (const Term& term : rel.terms()) {
      Polynomial factor = Polynomial::constant(R, term.coeff);
      for (unsigned v = 0; v < P.ambient->arity(); ++v)
        for (int rep = 0; rep < term.mono.e[v]; ++rep)
          factor = factor * J.generators()[v];
      image = image + factor;
    }
    CHECK(image.is_zero());
  }
}
