#pragma once

#include <map>
#include <string>

#include "corelab/ideal.hpp"

namespace corelab {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Polynomial text syntax shared by the library and the CLI: terms joined by
// `+`/`-`, `*` for products, `^` for powers, integer coefficients reduced
// into the field, e.g. "x^5*y^3 - 2*x*y".
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text,
                            int line = 1);
std::string to_string(const Polynomial& f);

// Sorted generator strings of the reduced Groebner basis under the ring's
// order; the canonical rendering of an ideal.
std::vector<std::string> ideal_strings(const Ideal& I);
std::string to_string(const Ideal& I);

// A parsed problem file: one field directive, one ring directive, named
// ideals and optional named elements.
struct ProblemFile {
  FieldPtr field;
  RingPtr ring;
  std::vector<std::string> ideal_names;  // declaration order
  std::map<std::string, Ideal> ideals;
  std::vector<std::string> elem_names;
  std::map<std::string, Polynomial> elems;
};

// Line-oriented directives with `#` comments:
//   field p=<prime> | field gf2 k=<1..32>
//   ring <name>+
//   ideal <Name> = <poly> (, <poly>)*
//   elem <name> = <poly>
ProblemFile parse_problem(const std::string& text);
std::string render_problem(const ProblemFile& pf);

}  // namespace corelab
