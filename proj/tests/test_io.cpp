#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corelab/io.hpp"

using namespace corelab;

TEST_CASE("polynomial parsing") {
  auto R = PolyRing::make({"x", "y"}, Field::prime(32003));
  CHECK(to_string(parse_polynomial(R, "x^5*y^3 - 2*x*y")) == "x^5*y^3 - 2*x*y");
  CHECK(to_string(parse_polynomial(R, "3")) == "3");
  CHECK(to_string(parse_polynomial(R, "-x + x")) == "0");
  CHECK(to_string(parse_polynomial(R, "2*3*x")) == "6*x");
  CHECK(to_string(parse_polynomial(R, "x*x")) == "x^2");
  CHECK(to_string(parse_polynomial(R, "32004*x")) == "x");
}

TEST_CASE("parse errors carry positions") {
  auto R = PolyRing::make({"x", "y"}, Field::prime(32003));
  CHECK_THROWS_AS(parse_polynomial(R, "z"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, ""), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x^-2"), ParseError);
  try {
    parse_polynomial(R, "x + z", 7);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 7);
    CHECK(std::string(e.what()).find("unknown variable 'z'") != std::string::npos);
  }
}

TEST_CASE("problem file parsing") {
  const std::string text =
      "# a two-generator problem\n"
      "field p=32003\n"
      "ring x y\n"
      "ideal I = x^2, x*y\n"
      "elem f = x + y\n";
  ProblemFile pf = parse_problem(text);
  CHECK(pf.field->characteristic() == 32003);
  CHECK(pf.ring->arity() == 2);
  REQUIRE(pf.ideals.count("I") == 1);
  CHECK(pf.ideals.at("I").generators().size() == 2);
  CHECK(to_string(pf.elems.at("f")) == "x + y");
}

TEST_CASE("gf2 field directive") {
  ProblemFile pf = parse_problem(
      "field gf2 k=16\nring x y\nideal I = x^6, x^5*y^3, x^4*y^4, x^2*y^8, y^9\n");
  CHECK(pf.field->characteristic() == 2);
  CHECK(pf.field->size() == 65536);
  CHECK(pf.ideals.at("I").generators().size() == 5);
}

TEST_CASE("problem file errors") {
  CHECK_THROWS_AS(parse_problem("ring x y\n"), ParseError);  // field first
  CHECK_THROWS_AS(parse_problem("field p=32003\nideal I = x\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("field p=32003\nring x y\nideal I = z\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_problem("field p=32003\nring x y\nideal I = x\nideal I = y\n"),
      ParseError);
  CHECK_THROWS_AS(parse_problem("field p=6\nring x\nideal I = x\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("field p=32003\n"), ParseError);
}

TEST_CASE("round trip: render then reparse gives an identical problem") {
  const std::string text =
      "field p=32003\n"
      "ring x y\n"
      "ideal I = x^2 - y, x*y\n"
      "ideal J = x^6, y^9\n"
      "elem g = x - 3*y\n";
  ProblemFile a = parse_problem(text);
  ProblemFile b = parse_problem(render_problem(a));
  CHECK(a.field.get() == b.field.get());
  CHECK(a.ring->var_names() == b.ring->var_names());
  REQUIRE(a.ideal_names == b.ideal_names);
  for (const auto& name : a.ideal_names) {
    CHECK(ideal_equal(a.ideals.at(name), b.ideals.at(name)));
    CHECK(a.ideals.at(name).generators().size() ==
          b.ideals.at(name).generators().size());
  }
  CHECK(a.elems.at("g") == b.elems.at("g"));
}

TEST_CASE("ideal rendering is the sorted reduced basis") {
  auto R = PolyRing::make({"x", "y"}, Field::prime(32003));
  Ideal I(R, {parse_polynomial(R, "y + x"), parse_polynomial(R, "x")});
  auto strs = ideal_strings(I);
  REQUIRE(strs.size() == 2);
  CHECK(strs[0] == "y");
  CHECK(strs[1] == "x");
  CHECK(to_string(I) == "(y, x)");
  CHECK(to_string(Ideal::zero(R)) == "(0)");
}
