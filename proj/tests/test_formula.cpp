// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "patgen/formula.hpp"
#include "support/oracle.hpp"

using patgen::Binding;
using patgen::Formula;
using patgen::ParseError;
using patgen::PropExpr;
using patgen::atoms_of;
using patgen::is_identifier;
using patgen::is_propositional;
using patgen::parse_formula;
using patgen::parse_prop_expr;
using patgen::print_formula;
using patgen::substitute;

TEST_CASE("identifier shapes") {
  CHECK(is_identifier("a"));
  CHECK(is_identifier("f1"));
  CHECK(is_identifier("_x9"));
  CHECK(is_identifier("CamelCase"));
  CHECK_FALSE(is_identifier(""));
  CHECK_FALSE(is_identifier("1a"));
  CHECK_FALSE(is_identifier("a-b"));
  CHECK_FALSE(is_identifier("a b"));
}

TEST_CASE("parses atoms and operator structure") {
  Formula f = parse_formula("a");
  CHECK(f.kind() == Formula::Kind::Atom);
  CHECK(f.atom_name() == "a");

  f = parse_formula("f1 => <>f2");
  REQUIRE(f.kind() == Formula::Kind::Implies);
  CHECK(f.lhs() == Formula::atom("f1"));
  CHECK(f.rhs() == Formula::eventually(Formula::atom("f2")));

  f = parse_formula("[]~(f1 & f2)");
  CHECK(f == Formula::always(Formula::negation(Formula::conjunction(
                 Formula::atom("f1"), Formula::atom("f2")))));

  f = parse_formula("(f2 & ~f3) | (~f2 & f3)");
  CHECK(f == Formula::disjunction(
                 Formula::conjunction(Formula::atom("f2"),
                                      Formula::negation(Formula::atom("f3"))),
                 Formula::conjunction(Formula::negation(Formula::atom("f2")),
                                      Formula::atom("f3"))));
}

TEST_CASE("prefix operators bind to the smallest following formula") {
  // ~f1 => ~<>f2 & ~<>f3 reads as (~f1) => ((~<>f2) & (~<>f3)).
  Formula f = parse_formula("~f1 => ~<>f2 & ~<>f3");
  REQUIRE(f.kind() == Formula::Kind::Implies);
  CHECK(f.lhs() == Formula::negation(Formula::atom("f1")));
  CHECK(f.rhs() ==
        Formula::conjunction(
            Formula::negation(Formula::eventually(Formula::atom("f2"))),
            Formula::negation(Formula::eventually(Formula::atom("f3")))));

  CHECK(parse_formula("<>a & b") ==
        Formula::conjunction(Formula::eventually(Formula::atom("a")),
                             Formula::atom("b")));
  CHECK(parse_formula("~a | b") ==
        Formula::disjunction(Formula::negation(Formula::atom("a")),
                             Formula::atom("b")));
  CHECK(parse_formula("~<>~a") == Formula::negation(Formula::eventually(
                                      Formula::negation(Formula::atom("a")))));
  // Spacing never matters.
  CHECK(parse_formula("~f1=>~<>f2") == parse_formula("~f1 => ~<>f2"));
}

TEST_CASE("precedence and associativity") {
  // => is right-associative and loosest.
  CHECK(parse_formula("a => b => c") ==
        Formula::implication(
            Formula::atom("a"),
            Formula::implication(Formula::atom("b"), Formula::atom("c"))));
  // | binds tighter than =>, & tighter than |.
  CHECK(parse_formula("a => b | c") ==
        Formula::implication(
            Formula::atom("a"),
            Formula::disjunction(Formula::atom("b"), Formula::atom("c"))));
  CHECK(parse_formula("a | b & c") ==
        Formula::disjunction(
            Formula::atom("a"),
            Formula::conjunction(Formula::atom("b"), Formula::atom("c"))));
  // & and | associate to the left.
  CHECK(parse_formula("a & b & c") ==
        Formula::conjunction(
            Formula::conjunction(Formula::atom("a"), Formula::atom("b")),
            Formula::atom("c")));
  CHECK(parse_formula("d | e | f") ==
        Formula::disjunction(
            Formula::disjunction(Formula::atom("d"), Formula::atom("e")),
            Formula::atom("f")));
}

TEST_CASE("printer output is canonical") {
  auto echo = [](const char* text) { return print_formula(parse_formula(text)); };

  CHECK(echo("f1 => <>f2") == "f1 => <>f2");
  CHECK(echo("~f1 => ~<>f2 & ~<>f3") == "~f1 => ~<>f2 & ~<>f3");
  CHECK(echo("[]~(f1 & (f2 | f3))") == "[]~(f1 & (f2 | f3))");
  CHECK(echo("[]~(a & (c | d))") == "[]~(a & (c | d))");
  CHECK(echo("(a & b) | (a & c)") == "(a & b) | (a & c)");
  CHECK(echo("(f2 & ~f3) | (~f2 & f3)") == "(f2 & ~f3) | (~f2 & f3)");
  CHECK(echo("a => b => c") == "a => b => c");
  CHECK(echo("(a => b) => c") == "(a => b) => c");
  CHECK(echo("<>(a | b)") == "<>(a | b)");
  CHECK(echo("~<>(f1 | f2)") == "~<>(f1 | f2)");

  // Binary operands of & and | are parenthesized even when precedence alone
  // would disambiguate; unary ones never are.
  CHECK(print_formula(Formula::disjunction(
            Formula::disjunction(Formula::atom("d"), Formula::atom("e")),
            Formula::atom("f"))) == "(d | e) | f");
  CHECK(print_formula(Formula::conjunction(
            Formula::atom("a"),
            Formula::implication(Formula::atom("b"), Formula::atom("c")))) ==
        "a & (b => c)");
  CHECK(echo("a & b | c & d") == "(a & b) | (c & d)");
  CHECK(echo("<>a & []b") == "<>a & []b");
}

TEST_CASE("parse errors carry one-based positions") {
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("   "), ParseError);
  CHECK_THROWS_AS(parse_formula("a &"), ParseError);
  CHECK_THROWS_AS(parse_formula("& a"), ParseError);
  CHECK_THROWS_AS(parse_formula("(a"), ParseError);
  CHECK_THROWS_AS(parse_formula("a)"), ParseError);
  CHECK_THROWS_AS(parse_formula("a b"), ParseError);
  CHECK_THROWS_AS(parse_formula("a $ b"), ParseError);
  CHECK_THROWS_AS(parse_formula("a = b"), ParseError);
  CHECK_THROWS_AS(parse_formula("a < b"), ParseError);
  CHECK_THROWS_AS(parse_formula("[a]"), ParseError);

  try {
    parse_formula("a &");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
  try {
    parse_formula("a\n& & b");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    parse_formula("a) ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("trailing") != std::string::npos);
    CHECK(e.column() == 2);
  }
}

TEST_CASE("structural equality ignores nothing") {
  CHECK(parse_formula("a & b") ==
        Formula::conjunction(Formula::atom("a"), Formula::atom("b")));
  CHECK(parse_formula("a & b") != parse_formula("b & a"));
  CHECK(parse_formula("a & a") != parse_formula("a"));
  CHECK(parse_formula("<>a") != parse_formula("[]a"));
  CHECK(parse_formula("(a)") == parse_formula("a"));

  CHECK(parse_formula("a & b").hash() == parse_formula("a & b").hash());
  std::unordered_set<Formula, patgen::FormulaHash> set;
  set.insert(parse_formula("a & b"));
  set.insert(parse_formula("a & b"));
  set.insert(parse_formula("b & a"));
  CHECK(set.size() == 2);
}

TEST_CASE("atom collection and propositional check") {
  auto atoms = atoms_of(parse_formula("f1 => <>f2 & ~f1"));
  CHECK(atoms == std::set<std::string>{"f1", "f2"});

  CHECK(is_propositional(parse_formula("a & ~b | (c => d)")));
  CHECK_FALSE(is_propositional(parse_formula("<>a")));
  CHECK_FALSE(is_propositional(parse_formula("a & []b")));
  CHECK_FALSE(is_propositional(parse_formula("~(a => <>b)")));
}

TEST_CASE("PropExpr admits only propositional formulas") {
  CHECK_NOTHROW(parse_prop_expr("(f2 & ~f3) | (~f2 & f3)"));
  CHECK_THROWS_AS(PropExpr(parse_formula("<>a")), std::invalid_argument);
  CHECK_THROWS_AS(parse_prop_expr("a => []b"), std::invalid_argument);
  CHECK(parse_prop_expr("a | b") == PropExpr(parse_formula("a | b")));
}

TEST_CASE("substitution replaces atoms simultaneously") {
  Binding ab{{"f1", parse_prop_expr("a")}, {"f2", parse_prop_expr("b")}};
  CHECK(substitute(parse_formula("f1 => <>f2"), ab) ==
        parse_formula("a => <>b"));
  CHECK(substitute(parse_formula("[]~(f1 & f2)"), ab) ==
        parse_formula("[]~(a & b)"));

  // Simultaneous: replacements are not re-visited.
  Binding swap{{"a", parse_prop_expr("b")}, {"b", parse_prop_expr("a")}};
  CHECK(substitute(parse_formula("a => b"), swap) == parse_formula("b => a"));

  // Whole expressions substitute in as operands, never distributing.
  Binding compound{{"f2", parse_prop_expr("c | d")}};
  CHECK(substitute(parse_formula("<>f2 & <>f3"), compound) ==
        parse_formula("<>(c | d) & <>f3"));
  CHECK(print_formula(substitute(parse_formula("<>f2 & <>f3"), compound)) ==
        "<>(c | d) & <>f3");

  // Atoms without a binding survive untouched; the empty binding is identity.
  CHECK(substitute(parse_formula("x => <>f2"), compound) ==
        parse_formula("x => <>(c | d)"));
  CHECK(substitute(parse_formula("a & b"), Binding{}) ==
        parse_formula("a & b"));

  // The PropExpr overload stays inside the propositional fragment.
  PropExpr e = substitute(parse_prop_expr("f1 & f2"), ab);
  CHECK(e.formula() == parse_formula("a & b"));
}

TEST_CASE("round-trip: parse of print is identity") {
  std::mt19937_64 rng(20240817u);
  const std::vector<std::string> atoms{"a", "b", "c", "d", "e1", "e2", "_f",
                                       "g9"};
  for (int i = 0; i < 1000; ++i) {
    Formula f = testsupport::random_formula(rng, 6, atoms);
    Formula reparsed = parse_formula(print_formula(f));
    REQUIRE(reparsed == f);
  }
}
