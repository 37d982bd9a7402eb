// SPDX-License-Identifier: Apache-2.0
//
// Workflow pattern definitions and the pattern-library file format.
//
// A pattern couples a set of basic temporal formulas over formal arguments
// with two propositional anchor expressions: `ini` (how the pattern starts)
// and `fin` (how it finishes).  ini and fin share no atoms, so every formal
// argument has a derived role: it appears in ini, in fin, or in neither.
//
// Library file format (one or more blocks):
//
//     # comment
//     Name(f1,...,fn):
//     ini= <prop expr> / fin= <prop expr>
//     <formula> [/ <formula>]...
//
// `/` separates entries on one line; the ini=/fin= pair may also be split
// over two lines.  Blank lines and lines starting with `#` are ignored.  A
// new `Name(...):` header ends the previous block.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "patgen/formula.hpp"

namespace patgen {

enum class ArgRole { Ini, Ordinary, Fin };

class PatternDefinition {
 public:
  // Throws std::invalid_argument on: empty/duplicate formals, an ini/fin
  // atom outside the formals, ini and fin sharing an atom, or a basic
  // formula mentioning a non-formal atom.
  PatternDefinition(std::string name, std::vector<std::string> formal_args,
                    PropExpr ini, PropExpr fin,
                    std::vector<Formula> basic_formulas);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& formal_args() const noexcept {
    return formal_args_;
  }
  std::size_t arity() const noexcept { return formal_args_.size(); }
  const PropExpr& ini() const noexcept { return ini_; }
  const PropExpr& fin() const noexcept { return fin_; }
  const std::vector<Formula>& basic_formulas() const noexcept {
    return basic_formulas_;
  }

  // Role derived from membership in atoms_of(ini) / atoms_of(fin).
  ArgRole role_of(const std::string& formal) const;
  const std::map<std::string, ArgRole>& arg_roles() const noexcept {
    return roles_;
  }

 private:
  std::string name_;
  std::vector<std::string> formal_args_;
  PropExpr ini_;
  PropExpr fin_;
  std::vector<Formula> basic_formulas_;
  std::map<std::string, ArgRole> roles_;
};

class PatternLibrary {
 public:
  // Throws std::invalid_argument if empty or names collide.
  explicit PatternLibrary(std::vector<PatternDefinition> definitions);

  const std::vector<PatternDefinition>& definitions() const noexcept {
    return definitions_;
  }
  bool contains(const std::string& name) const;
  const PatternDefinition* find(const std::string& name) const;  // or nullptr
  const PatternDefinition& at(const std::string& name) const;    // or throws
  std::size_t size() const noexcept { return definitions_.size(); }

 private:
  std::vector<PatternDefinition> definitions_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Parses the file format above.  Definitions keep file order and every
// expression is preserved verbatim (no rewriting).  Throws ParseError with
// the offending line.
PatternLibrary parse_pattern_library(std::string_view text);

// Convenience wrapper; reads the file and parses it.  Throws Error on I/O
// failure.
PatternLibrary load_pattern_library(const std::string& path);

struct PatternInstance {
  PropExpr ini;
  PropExpr fin;
  std::vector<Formula> formulas;  // basic formulas, definition order
};

// Positional simultaneous substitution of the actuals for the formals in
// ini, fin, and every basic formula.  Throws std::invalid_argument on arity
// mismatch.
PatternInstance instantiate(const PatternDefinition& def,
                            const std::vector<PropExpr>& actuals);

// The proof obligations for pattern-level consistency: the basic formulas
// plus <>ini, ini => <>fin, <>fin, []~(ini & fin), built over the formal
// arguments, deduplicated structurally with first occurrence kept.
std::vector<Formula> consistency_obligations(const PatternDefinition& def);
std::vector<Formula> consistency_obligations(
    const PropExpr& ini, const PropExpr& fin,
    const std::vector<Formula>& basic_formulas);

}  // namespace patgen
