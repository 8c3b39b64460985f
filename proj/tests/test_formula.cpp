#include <doctest.h>

#include <random>
#include <set>

#include "kripke/formula.hpp"
#include "kripke/validity.hpp"

using namespace kripke;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }

Fragment fragment(std::set<Connective> cs, std::set<std::string> as) { return Fragment{std::move(cs), std::move(as)}; }

// Formulas of depth <= d: leaves, negations of depth <= d-1, and every
// ordered pair of depth <= d-1 formulas per binary connective.
std::size_t count_up_to(std::size_t leaves, std::size_t unary, std::size_t binary, std::size_t d) {
  std::size_t c = leaves;
  for (std::size_t i = 0; i < d; ++i) c = leaves + unary * c + binary * c * c;
  return c;
}

}  // namespace

TEST_CASE("parse follows precedence and associativity") {
  CHECK(parse("p -> q -> p") == Formula::imp(p(), Formula::imp(q(), p())));
  CHECK(parse("((p->q)->q) & ((q->p)->p)") ==
        Formula::conj(Formula::imp(Formula::imp(p(), q()), q()), Formula::imp(Formula::imp(q(), p()), p())));
  CHECK(parse("~p | ~~p") == Formula::disj(Formula::neg(p()), Formula::neg(Formula::neg(p()))));
  CHECK(parse("p & q | p") == Formula::disj(Formula::conj(p(), q()), p()));
  CHECK(parse("p | q | p") == Formula::disj(Formula::disj(p(), q()), p()));
  CHECK(parse("p & q & p") == Formula::conj(Formula::conj(p(), q()), p()));
  CHECK(parse("~p & q") == Formula::conj(Formula::neg(p()), q()));
  CHECK(parse("T") == Formula::top());
  CHECK(parse("¬p ∧ q → p ∨ ⊤") == parse("~p & q -> p | T"));
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse("p & ");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("P"), ParseError);
  CHECK_THROWS_AS(parse("p -"), ParseError);
}

TEST_CASE("render uses minimal parentheses") {
  CHECK(render(Formula::imp(p(), p())) == "p -> p");
  CHECK(render(Formula::conj(Formula::top(), q())) == "T & q");
  CHECK(render(Formula::disj(Formula::imp(p(), q()), Formula::imp(q(), p()))) == "(p -> q) | (q -> p)");
  CHECK(render(parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(render(parse("p -> (q -> r)")) == "p -> q -> r");
  CHECK(render(parse("p & (q & r)")) == "p & (q & r)");
  CHECK(render(parse("~(p | q)")) == "~(p | q)");
}

TEST_CASE("round trip on random formulas") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, {"p", "q", "r1"}, 6);
    CHECK(parse(render(f)) == f);
  }
}

TEST_CASE("atoms") {
  CHECK(atoms(Formula::top()).empty());
  CHECK(atoms(pigeonhole_formula(2)) == std::set<std::string>{"p0", "p1", "p2"});
  CHECK(atoms(Formula::conj(p(), p())) == std::set<std::string>{"p"});
}

TEST_CASE("fragment membership") {
  const Formula and_pq = Formula::conj(p(), q());
  CHECK_FALSE(in_fragment(and_pq, fragment({Connective::neg, Connective::disj, Connective::imp, Connective::top}, {"p", "q"})));
  CHECK(in_fragment(p(), fragment({}, {"p"})));
  CHECK(in_fragment(parse("((p->q)->q) & ((q->p)->p)"), fragment({Connective::conj, Connective::imp}, {"p", "q"})));
  CHECK_FALSE(in_fragment(parse("T & p"), fragment({Connective::conj}, {"p"})));
  CHECK_FALSE(in_fragment(parse("p & r"), fragment({Connective::conj}, {"p"})));
}

TEST_CASE("fragment monotonicity") {
  std::mt19937_64 rng(5);
  const Fragment small = fragment({Connective::neg, Connective::imp}, {"p"});
  const Fragment big = fragment({Connective::neg, Connective::imp, Connective::conj, Connective::top}, {"p", "q"});
  for (int i = 0; i < 1000; ++i) {
    const Formula f = random_formula(rng, {"p", "q"}, 4);
    if (in_fragment(f, small)) CHECK(in_fragment(f, big));
  }
}

TEST_CASE("enumeration examples") {
  auto rendered = [](const std::vector<Formula>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(render(f));
    return out;
  };
  CHECK(rendered(enumerate_formulas(fragment({Connective::top}, {"p"}), 0)) == std::vector<std::string>{"T", "p"});
  CHECK(rendered(enumerate_formulas(fragment({Connective::neg}, {"p"}), 1)) == std::vector<std::string>{"p", "~p"});
  CHECK(rendered(enumerate_formulas(fragment({Connective::neg, Connective::top}, {"p"}), 1)) ==
        std::vector<std::string>{"T", "p", "~T", "~p"});
}

TEST_CASE("enumeration counts match the recursive count") {
  CHECK(count_up_to(2, 1, 1, 2) == 74);
  const auto fs = enumerate_formulas(fragment({Connective::neg, Connective::conj}, {"p", "q"}), 2);
  CHECK(fs.size() == 74);
  std::set<std::string> distinct;
  for (const auto& f : fs) distinct.insert(render(f));
  CHECK(distinct.size() == fs.size());

  const auto more = enumerate_formulas(fragment({Connective::neg, Connective::imp, Connective::disj, Connective::top}, {"p"}), 2);
  CHECK(more.size() == count_up_to(2, 1, 2, 2));
}

TEST_CASE("enumeration order is by depth then rendering") {
  const auto fs = enumerate_formulas(fragment({Connective::neg, Connective::conj}, {"p", "q"}), 2);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    const bool ordered = fs[i - 1].depth() < fs[i].depth() ||
                         (fs[i - 1].depth() == fs[i].depth() && render(fs[i - 1]) < render(fs[i]));
    CHECK(ordered);
  }
  CHECK(enumerate_formulas(fragment({Connective::neg, Connective::conj}, {"p", "q"}), 2, 10).size() == 10);
}

TEST_CASE("enumeration completeness on random members") {
  const Fragment frag = fragment({Connective::neg, Connective::imp, Connective::top}, {"p", "q"});
  std::set<std::string> all;
  for (const auto& f : enumerate_formulas(frag, 3)) all.insert(render(f));
  std::mt19937_64 rng(3);
  int hits = 0;
  for (int i = 0; i < 5000 && hits < 300; ++i) {
    const Formula f = random_formula(rng, {"p", "q"}, 3);
    if (!in_fragment(f, frag)) continue;
    ++hits;
    CHECK(all.count(render(f)) == 1);
  }
  CHECK(hits > 50);
}
