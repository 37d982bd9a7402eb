// SPDX-License-Identifier: Apache-2.0
//
// Temporal formulas over the minimal PLTL fragment used by the pattern
// compiler: atoms, ~, &, |, =>, and the reflexive temporal operators
// <> (eventually) and [] (always).  There is no until, next, or release.
//
// Concrete syntax, loosest to tightest binding:
//
//     f => g        implication, right-associative
//     f | g         disjunction
//     f & g         conjunction
//     ~f  <>f  []f  prefix operators; bind to the smallest following formula
//
// so `~f1 => ~<>f2 & ~<>f3` reads as (~f1) => ((~<>f2) & (~<>f3)).
// Whitespace is insignificant.  Atoms are identifiers matching
// [A-Za-z_][A-Za-z0-9_]*.
//
// Formulas are immutable trees with structural equality; equality is used
// for every deduplication decision downstream, and no normalization
// (commutativity, idempotence, ...) is ever applied.

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "patgen/diag.hpp"

namespace patgen {

class Formula {
 public:
  enum class Kind : unsigned char {
    Atom,
    Not,
    And,
    Or,
    Implies,
    Eventually,
    Always,
  };

  // Constructors.  atom() validates the identifier shape.
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula eventually(Formula operand);
  static Formula always(Formula operand);

  Kind kind() const noexcept;
  bool is_unary() const noexcept;   // Not, Eventually, Always
  bool is_binary() const noexcept;  // And, Or, Implies

  const std::string& atom_name() const;  // Atom only
  Formula operand() const;               // unary only
  Formula lhs() const;                   // binary only
  Formula rhs() const;                   // binary only

  // Structural equality; hash is precomputed at construction.
  bool operator==(const Formula& other) const noexcept;
  bool operator!=(const Formula& other) const noexcept {
    return !(*this == other);
  }
  std::size_t hash() const noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// True iff `text` is a valid atom / activity / pattern identifier.
bool is_identifier(std::string_view text);

// Parses the concrete syntax above.  Throws ParseError with a 1-based
// position on unbalanced parentheses, unknown tokens, dangling operators,
// and trailing input.
Formula parse_formula(std::string_view text);

// Canonical text form; parse_formula(print_formula(f)) == f.  Binary
// operands of & and | are always parenthesized, implication chains and
// prefix-operator chains are not: Or(And(a,b), And(c,d)) prints as
// `(a & b) | (c & d)`, Implies(a, And(b, c)) prints as `a => b & c`.
std::string print_formula(const Formula& f);

// Set of atom names occurring in f.
std::set<std::string> atoms_of(const Formula& f);

// True iff f contains no Eventually and no Always node.
bool is_propositional(const Formula& f);

// A formula guaranteed propositional at construction.
class PropExpr {
 public:
  explicit PropExpr(Formula f);  // throws std::invalid_argument if temporal
  const Formula& formula() const noexcept { return formula_; }

  bool operator==(const PropExpr& other) const noexcept {
    return formula_ == other.formula_;
  }
  bool operator!=(const PropExpr& other) const noexcept {
    return !(*this == other);
  }

 private:
  Formula formula_;
};

PropExpr parse_prop_expr(std::string_view text);

using Binding = std::map<std::string, PropExpr>;

// Simultaneous substitution of atoms: every atom whose name is a key is
// replaced by the bound expression; replacements are never re-visited, so
// substitute(parse("a => b"), {a: b, b: a}) swaps the two atoms.
Formula substitute(const Formula& f, const Binding& binding);
PropExpr substitute(const PropExpr& e, const Binding& binding);

}  // namespace patgen
