// SPDX-License-Identifier: Apache-2.0
//
// Specification generation: compiles a workflow expression into the set of
// temporal formulas obtained by instantiating each pattern occurrence,
// innermost occurrences first.
//
// An occurrence whose arguments are all atomic contributes its instantiated
// basic formulas directly.  An occurrence with m >= 1 nested applications
// contributes 2^m instantiations: each nested argument is replaced by the
// consolidated ini-side or fin-side expression of its subtree, and the
// combinations are emitted in binary-counter order with ini before fin,
// leftmost argument varying slowest.  Consolidated expressions are
// substituted as a whole (parenthesized operands), never distributed over
// the formula.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "patgen/pattern.hpp"
#include "patgen/workflow.hpp"

namespace patgen {

enum class ExprSide { Ini, Fin };

struct Combination {
  // Keyed by the 0-based positions of the non-atomic arguments; empty for
  // an all-atomic occurrence.
  std::map<std::size_t, ExprSide> binding;

  bool operator==(const Combination& other) const {
    return binding == other.binding;
  }
};

struct Provenance {
  std::vector<std::size_t> path;  // argument indices from the root; {} = root
  std::string pattern;
  Combination combination;
};

// Ordered, structurally deduplicated formula set with per-formula
// provenance (the first producer wins).
class Specification {
 public:
  const std::vector<Formula>& formulas() const noexcept { return formulas_; }
  const std::vector<Provenance>& provenance() const noexcept {
    return provenance_;
  }
  std::size_t size() const noexcept { return formulas_.size(); }
  bool empty() const noexcept { return formulas_.empty(); }
  bool contains(const Formula& f) const { return seen_.count(f) > 0; }

  // False (and no change) if an equal formula is already present.
  bool insert(Formula f, Provenance origin);

 private:
  std::vector<Formula> formulas_;
  std::vector<Provenance> provenance_;
  std::unordered_set<Formula, FormulaHash> seen_;
};

// The propositional expression describing how the subtree rooted at w
// starts (Ini) or finishes (Fin): the pattern's own ini/fin with atomic
// arguments kept and nested arguments replaced by their consolidated
// expression for the same side.  w must be an application over lib.
PropExpr consolidated_expression(const WorkflowNode& w, ExprSide side,
                                 const PatternLibrary& lib);

// The ordered (combination, actuals) list described above; a single entry
// with an empty combination if every argument is atomic.
std::vector<std::pair<Combination, std::vector<PropExpr>>> expand_combinations(
    const WorkflowNode& node, const PatternLibrary& lib);

struct GenerateOptions {
  bool strict_atoms = true;
};

// Runs validate() first and throws ValidationError if it reports errors.
// Occurrences are processed deepest level first, left to right within a
// level; formulas are deduplicated on insertion.  Output is deterministic.
Specification generate(const WorkflowNode& w, const PatternLibrary& lib,
                       const GenerateOptions& options = {});

}  // namespace patgen
