#include "corelab/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace corelab {

namespace {

struct Scanner {
  const std::string& s;
  size_t pos = 0;
  int line;

  explicit Scanner(const std::string& text, int line) : s(text), line(line) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, static_cast<int>(pos) + 1);
  }

  long long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    if (pos - start > 18) fail("integer literal too long");
    return std::stoll(s.substr(start, pos - start));
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected an identifier");
    return s.substr(start, pos - start);
  }
};

// factor := INT | VAR ('^' INT)?
// term   := factor ('*' factor)*
// poly   := ('+'|'-')? term (('+'|'-') term)*
Polynomial parse_term(Scanner& sc, const RingPtr& ring) {
  const Field& F = *ring->field();
  uint64_t coeff = 1;
  Monomial mono = Monomial::one(ring->arity());
  bool any = false;
  while (true) {
    char c = sc.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = sc.integer();
      coeff = F.mul(coeff, F.from_int(v));
      any = true;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = sc.identifier();
      auto idx = ring->var_index(name);
      if (!idx) sc.fail("unknown variable '" + name + "'");
      long long e = 1;
      if (sc.peek() == '^') {
        sc.take();
        e = sc.integer();
        if (e < 0 || e > 0xffff) sc.fail("malformed exponent");
      }
      uint32_t s = mono.e[*idx] + static_cast<uint32_t>(e);
      if (s > 0xffff) sc.fail("exponent overflow");
      mono.e[*idx] = static_cast<uint16_t>(s);
      any = true;
    } else {
      sc.fail("expected a coefficient or variable");
    }
    if (sc.peek() == '*') {
      sc.take();
      continue;
    }
    break;
  }
  if (!any) sc.fail("empty term");
  return Polynomial::monomial(ring, mono, coeff);
}

Polynomial parse_poly(Scanner& sc, const RingPtr& ring) {
  Polynomial acc = Polynomial::zero(ring);
  bool negative = false;
  char c = sc.peek();
  if (c == '+' || c == '-') {
    sc.take();
    negative = (c == '-');
  }
  while (true) {
    Polynomial t = parse_term(sc, ring);
    acc = negative ? acc - t : acc + t;
    char n = sc.peek();
    if (n == '+' || n == '-') {
      sc.take();
      negative = (n == '-');
      continue;
    }
    break;
  }
  return acc;
}

std::string term_body(const PolyRing& ring, const Term& t, bool with_coeff) {
  std::ostringstream os;
  bool printed = false;
  if (with_coeff) {
    os << t.coeff;
    printed = true;
  }
  for (unsigned i = 0; i < ring.arity(); ++i) {
    if (t.mono.e[i] == 0) continue;
    if (printed) os << "*";
    os << ring.var_name(i);
    if (t.mono.e[i] > 1) os << "^" << t.mono.e[i];
    printed = true;
  }
  if (!printed) os << "1";
  return os.str();
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text, int line) {
  Scanner sc(text, line);
  if (sc.done()) sc.fail("empty polynomial");
  Polynomial p = parse_poly(sc, ring);
  if (!sc.done()) sc.fail("unexpected trailing input");
  return p;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const PolyRing& ring = *f.ring();
  const Field& F = *ring.field();
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms()) {
    uint64_t c = t.coeff;
    bool neg = false;
    // Prime fields print the symmetric representative for readability.
    if (F.is_prime_field() && c > F.characteristic() / 2) {
      neg = true;
      c = F.characteristic() - c;
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool show_coeff = (c != 1) || t.mono.is_one();
    Term shown = t;
    shown.coeff = c;
    os << term_body(ring, shown, show_coeff);
  }
  return os.str();
}

std::vector<std::string> ideal_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const Polynomial& g : I.groebner()) out.push_back(to_string(g));
  return out;
}

std::string to_string(const Ideal& I) {
  std::ostringstream os;
  os << "(";
  auto strs = ideal_strings(I);
  if (strs.empty()) os << "0";
  for (size_t i = 0; i < strs.size(); ++i) {
    if (i) os << ", ";
    os << strs[i];
  }
  os << ")";
  return os.str();
}

ProblemFile parse_problem(const std::string& text) {
  ProblemFile pf;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<std::pair<int, std::string>> pending_ideals;  // before ring known
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = raw;
    if (auto hash = s.find('#'); hash != std::string::npos) s = s.substr(0, hash);
    Scanner sc(s, lineno);
    if (sc.done()) continue;
    std::string head = sc.identifier();
    if (head == "field") {
      if (pf.field) sc.fail("duplicate field directive");
      std::string kind = sc.identifier();
      if (kind == "p") {
        if (sc.take() != '=') sc.fail("expected '=' after p");
        long long p = sc.integer();
        try {
          pf.field = Field::prime(static_cast<uint64_t>(p));
        } catch (const Error& e) {
          sc.fail(e.what());
        }
      } else if (kind == "gf2") {
        std::string kname = sc.identifier();
        if (kname != "k") sc.fail("expected k=<1..32> after gf2");
        if (sc.take() != '=') sc.fail("expected '=' after k");
        long long k = sc.integer();
        if (k < 1 || k > 32) sc.fail("gf2 extension degree must be in 1..32");
        pf.field = Field::gf2_ext(static_cast<unsigned>(k));
      } else {
        sc.fail("unknown field kind '" + kind + "'");
      }
      if (!sc.done()) sc.fail("unexpected trailing input");
    } else if (head == "ring") {
      if (pf.ring) sc.fail("duplicate ring directive");
      if (!pf.field) sc.fail("ring directive before field directive");
      std::vector<std::string> names;
      while (!sc.done()) names.push_back(sc.identifier());
      if (names.empty()) sc.fail("ring needs at least one variable");
      try {
        pf.ring = PolyRing::make(names, pf.field);
      } catch (const Error& e) {
        sc.fail(e.what());
      }
    } else if (head == "ideal" || head == "elem") {
      if (!pf.ring) sc.fail("definition before ring directive");
      std::string name = sc.identifier();
      if (pf.ideals.count(name) || pf.elems.count(name))
        sc.fail("duplicate name '" + name + "'");
      if (sc.take() != '=') sc.fail("expected '='");
      if (head == "ideal") {
        std::vector<Polynomial> gens;
        while (true) {
          gens.push_back(parse_poly(sc, pf.ring));
          if (gens.back().is_zero()) sc.fail("ideal generators must be nonzero");
          if (sc.peek() == ',') {
            sc.take();
            continue;
          }
          break;
        }
        if (!sc.done()) sc.fail("unexpected trailing input");
        pf.ideal_names.push_back(name);
        pf.ideals.emplace(name, Ideal(pf.ring, std::move(gens)));
      } else {
        Polynomial p = parse_poly(sc, pf.ring);
        if (!sc.done()) sc.fail("unexpected trailing input");
        pf.elem_names.push_back(name);
        pf.elems.emplace(name, std::move(p));
      }
    } else {
      sc.fail("unknown directive '" + head + "'");
    }
  }
  if (!pf.field) throw ParseError("missing field directive", lineno, 1);
  if (!pf.ring) throw ParseError("missing ring directive", lineno, 1);
  return pf;
}

std::string render_problem(const ProblemFile& pf) {
  std::ostringstream os;
  if (pf.field->is_prime_field()) {
    os << "field p=" << pf.field->characteristic() << "\n";
  } else {
    os << "field gf2 k=" << pf.field->extension_degree() << "\n";
  }
  os << "ring";
  for (const auto& v : pf.ring->var_names()) os << " " << v;
  os << "\n";
  for (const auto& name : pf.ideal_names) {
    os << "ideal " << name << " =";
    const auto& gens = pf.ideals.at(name).generators();
    for (size_t i = 0; i < gens.size(); ++i)
      os << (i ? ", " : " ") << to_string(gens[i]);
    os << "\n";
  }
  for (const auto& name : pf.elem_names) {
    os << "elem " << name << " = " << to_string(pf.elems.at(name)) << "\n";
  }
  return os.str();
}

}  // namespace corelab
