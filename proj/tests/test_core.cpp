#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corelab/core.hpp"
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

TEST_CASE("core formula for the maximal ideal at n = 0") {
  auto R = ring2();
  Ideal m = I(R, {"x", "y"});
  CHECK(ideal_equal(core_formula(m, m, 0), m));
}

TEST_CASE("core formula rejects n below the threshold") {
  auto R = ring2();
  Ideal m2 = power(I(R, {"x", "y"}), 2);
  Ideal J = I(R, {"x^2", "y^2"});
  // r = 1, l = g = 2, so the threshold is 1
  CHECK_THROWS_WITH_AS(core_formula(m2, J, 0),
                       "n = 0 is below the threshold max{r - l + g, 0} = 1",
                       Error);
  CHECK(ideal_equal(core_formula(m2, J, 1), power(I(R, {"x", "y"}), 3)));
}

TEST_CASE("core formula requires a verified reduction") {
  auto R = ring2(Field::gf2_ext(16));
  Ideal I53 = corpus_ideal_53(R);
  CHECK_THROWS_AS(core_formula(I53, corpus_k_53(R), 2), Error);
}

TEST_CASE("core_auto on the squared maximal ideal") {
  auto R = ring2();
  Ideal m2 = power(I(R, {"x", "y"}), 2);
  CoreReport rep = core_auto(m2, 7);
  CHECK(ideal_equal(rep.formula_value, power(I(R, {"x", "y"}), 3)));
  CHECK(rep.g == 2);
  CHECK(rep.ell == 2);
  CHECK(rep.r == 1);
  CHECK(rep.n_used == 1);
  CHECK(rep.stability.size() == 6);
  bool char_pass = false, automatic = false;
  for (const auto& n : rep.hypothesis_notes) {
    if (n.find("PASS") != std::string::npos) char_pass = true;
    if (n.find("automatic") != std::string::npos) automatic = true;
  }
  CHECK(char_pass);
  CHECK(automatic);
}

TEST_CASE("core_auto flags the failing characteristic condition") {
  auto R = ring2(Field::gf2_ext(16));
  CoreReport rep = core_auto(corpus_ideal_52(R), 7);
  Ideal H = corpus_h_52(R);
  Ideal golden = colon(power(H, 3), power(corpus_ideal_52(R), 2));
  CHECK(ideal_equal(rep.formula_value, golden));
  bool char_fail = false;
  for (const auto& n : rep.hypothesis_notes)
    if (n.find("FAIL") != std::string::npos) char_fail = true;
  CHECK(char_fail);
}

TEST_CASE("core_auto on a principal ideal is trivial") {
  auto R = ring2();
  Ideal p = I(R, {"x^2"});
  CoreReport rep = core_auto(p, 3);
  CHECK(ideal_equal(rep.formula_value, p));
  CHECK(rep.r == 0);
}

TEST_CASE("monte-carlo core of the maximal ideal is itself") {
  auto R = ring2();
  Ideal m = I(R, {"x", "y"});
  McCoreReport mc = core_monte_carlo(m, 8, 8, 5);
  CHECK(ideal_equal(mc.value, m));
  CHECK(mc.trials >= 8);
  CHECK(mc.stabilized_after >= 8);
  CHECK(mc.seeds.size() == static_cast<size_t>(mc.trials));
}

TEST_CASE("monte-carlo parameters are validated") {
  auto R = ring2();
  Ideal m = I(R, {"x", "y"});
  CHECK_THROWS_AS(core_monte_carlo(m, 0, 16, 1), Error);
  CHECK_THROWS_AS(core_monte_carlo(m, 10, 4, 1), Error);
}

TEST_CASE("monte-carlo value contains the formula value when the theorem applies") {
  auto R = ring2();
  Ideal m2 = power(I(R, {"x", "y"}), 2);
  McCoreReport mc = core_monte_carlo(m2, 10, 8, 5);
  CoreReport rep = core_auto(m2, 7);
  CHECK(ideal_equal(mc.value, rep.formula_value));
}

TEST_CASE("formula value sits inside the sampled reduction, locally") {
  auto R = ring2();
  for (auto&& gens : {std::initializer_list<std::string>{"x", "y"},
                      std::initializer_list<std::string>{"x^2", "y^3"}}) {
    Ideal J = I(R, gens);
    ReductionReport rep = minimal_reduction(J, 31);
    Ideal v = core_formula(J, rep.J, 3);
    // the sampled reduction has stray components; compare its local part
    Ideal j_local = dimension(rep.J) == 0 ? origin_primary_part(rep.J) : rep.J;
    CHECK(contains(j_local, v));
  }
}

TEST_CASE("decomposition check: trivial and Veronese cases") {
  auto R = ring2();
  // exactly l generators: the fiber is a polynomial ring, edim 0 at (0)
  DecompositionReport param = decomposition_check(I(R, {"x^2", "y^3"}), 1, 4, 7);
  CHECK(param.holds);
  // Veronese fiber is a domain, edim 0 at its generic point
  DecompositionReport ver =
      decomposition_check(power(I(R, {"x", "y"}), 2), 1, 4, 7);
  CHECK(ver.holds);
}

TEST_CASE("decomposition check window validation") {
  auto R = ring2();
  CHECK_THROWS_AS(decomposition_check(I(R, {"x^2", "y^3"}), 1, 0, 7), Error);
  CHECK_THROWS_AS(decomposition_check(I(R, {"x^2", "y^3"}), 0, 4, 7), Error);
}

TEST_CASE("decomposition matches the fiber's local embedding dimension") {
  auto Rg = ring2(Field::gf2_ext(16));
  Ideal big = corpus_ideal_52(Rg);
  // edim 2 at the unique minimal prime: fails at s=1, holds at s=2
  DecompositionReport d1 = decomposition_check(big, 1, 5, 11);
  CHECK_FALSE(d1.holds);
  CHECK(d1.n_lo == 3);
  DecompositionReport d2 = decomposition_check(big, 2, 5, 11);
  CHECK(d2.holds);
}

TEST_CASE("hypothesis report for the five-generator char-2 ideal") {
  auto R = ring2(Field::gf2_ext(16));
  Ideal big = corpus_ideal_52(R);
  HypothesisReport rep =
      hypothesis_report(big, corpus_h_52(R), {PrimeCandidate::of({1, 2, 3})}, 5);
  CHECK(rep.g == 2);
  CHECK(rep.ell == 2);
  CHECK(rep.r == 2);
  CHECK(rep.n_threshold == 2);
  CHECK(rep.characteristic == 2);
  CHECK_FALSE(rep.char_ok);  // 2 <= r - l + g = 2
  CHECK(rep.equimultiple);
  CHECK(rep.m_primary);
  REQUIRE(rep.primes.size() == 1);
  CHECK(rep.primes[0].certified);
  CHECK(rep.primes[0].edim == 2);
}

TEST_CASE("hypothesis report passes in large characteristic") {
  auto R = ring2();
  Ideal big = corpus_ideal_52(R);
  HypothesisReport rep = hypothesis_report(big, corpus_h_52(R));
  CHECK(rep.char_ok);  // 32003 > 2
  Ideal m = I(R, {"x", "y"});
  HypothesisReport mm = hypothesis_report(m, m);
  CHECK(mm.g == 2);
  CHECK(mm.ell == 2);
  CHECK(mm.r == 0);
  CHECK(mm.char_ok);
}
