// SPDX-License-Identifier: Apache-2.0
//
// Bounded satisfiability over ultimately periodic models.
//
// A lasso model is a finite prefix followed by a non-empty loop repeated
// forever; each state is the set of atoms true there.  A formula set is
// satisfied by a model when every formula holds at position 0, with the
// reflexive semantics: <>f is true at i iff f holds at some j >= i, []f
// dually.
//
// check_sat searches all lassos with |prefix| <= max_prefix and
// |loop| <= max_loop over states drawn from the set's atom universe, in a
// fixed order: total size ascending, then prefix length ascending, then
// lexicographic over the state sequence (states ordered by characteristic
// bitmask, atoms sorted by name, first atom = least significant bit).  The
// first satisfying lasso is the witness.  When nothing satisfies within
// bounds that meet the completeness threshold B* = (4^n, 2^n) for n atoms,
// the set is unsatisfiable outright; below B* the honest answer is Unknown.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "patgen/generator.hpp"
#include "patgen/pattern.hpp"

namespace patgen {

using State = std::set<std::string>;

class LassoModel {
 public:
  // Throws std::invalid_argument if the loop is empty.
  LassoModel(std::vector<State> prefix, std::vector<State> loop);

  const std::vector<State>& prefix() const noexcept { return prefix_; }
  const std::vector<State>& loop() const noexcept { return loop_; }
  // Number of distinct positions: |prefix| + |loop|.
  std::size_t size() const noexcept { return prefix_.size() + loop_.size(); }
  const State& state_at(std::size_t position) const;  // throws out_of_range

  // `prefix: {a} {b} | loop: {}` form; atoms inside a state are sorted and
  // comma-separated.
  std::string to_string() const;

  bool operator==(const LassoModel& other) const {
    return prefix_ == other.prefix_ && loop_ == other.loop_;
  }

 private:
  std::vector<State> prefix_;
  std::vector<State> loop_;
};

// Truth of f at the given position (0-based over prefix + one loop copy).
// Positions past the loop wrap around inside it.  Throws std::out_of_range
// if position >= m.size().
bool eval_at(const Formula& f, const LassoModel& m, std::size_t position);

struct SearchBounds {
  int max_prefix = 8;
  int max_loop = 4;
};

// B* for a set with the given number of atoms: a satisfiable set always has
// a witness within (4^n, 2^n), so covering these bounds makes a negative
// search exhaustive.  Saturates instead of overflowing.
SearchBounds completeness_threshold(int atom_count);

struct SearchLimits {
  // Ceiling on directly enumerated lasso candidates.
  std::uint64_t max_candidates = 2'000'000;
  // Ceiling on abstract prefix-extension steps.
  std::uint64_t max_abstract_steps = 4'000'000;
};

struct CheckResult {
  enum class Verdict { Satisfiable, Unsatisfiable, Unknown };

  Verdict verdict = Verdict::Unknown;
  std::optional<LassoModel> witness;  // set iff Satisfiable
  bool exhaustive = false;            // true for every Unsatisfiable result
  SearchBounds bounds;                // the bounds the verdict refers to

  bool is_satisfiable() const noexcept {
    return verdict == Verdict::Satisfiable;
  }
  bool is_unsatisfiable() const noexcept {
    return verdict == Verdict::Unsatisfiable;
  }
  bool is_unknown() const noexcept { return verdict == Verdict::Unknown; }

  std::string to_string() const;
};

// Searches for a model of the whole set (anchored at position 0).
// Throws std::invalid_argument on an empty set and BoundOverflowError when
// the requested bounds cannot be covered within the limits and no witness
// was found first.  A returned witness is re-verified with eval_at before
// being handed out.
CheckResult check_sat(const std::vector<Formula>& formulas,
                      SearchBounds bounds = {}, SearchLimits limits = {});

// check_sat over the pattern's consistency obligations (formal arguments
// play the role of atoms).
CheckResult check_pattern(const PatternDefinition& def,
                          SearchBounds bounds = {}, SearchLimits limits = {});

// check_sat over a generated specification; throws std::invalid_argument if
// the specification is empty.
CheckResult check_specification(const Specification& spec,
                                SearchBounds bounds = {},
                                SearchLimits limits = {});

}  // namespace patgen
