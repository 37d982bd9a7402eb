// SPDX-License-Identifier: Apache-2.0
//
// Workflow expressions: nested applications of named patterns to atomic
// activities, e.g. `Concur(Seq(a,b),c,d)`, plus the bracket-labeling pass
// that makes nesting depth explicit in the serialized text:
//
//     Seq(1]a,Seq(2]ParalSplit(3]b,c,d[3),Synchron(3]e,f,g[3)[2)[1)
//
// Every `(` becomes `(d]` and every `)` becomes `[d)` where d is the
// nesting depth of that parenthesis pair.  Stripping the digits restores
// the plain serialization character for character.

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "patgen/diag.hpp"
#include "patgen/pattern.hpp"

namespace patgen {

class WorkflowNode {
 public:
  static WorkflowNode atomic(std::string name, SourcePos pos = {});
  // Throws std::invalid_argument on an empty argument list.
  static WorkflowNode application(std::string pattern,
                                  std::vector<WorkflowNode> args,
                                  SourcePos pos = {});

  bool is_atomic() const noexcept;
  // Activity name for atomics, pattern name for applications.
  const std::string& name() const noexcept;
  const std::vector<WorkflowNode>& args() const noexcept;  // empty if atomic
  SourcePos pos() const noexcept;

  // Applications on the deepest path; an atomic activity has depth 0.
  int depth() const noexcept;

  // Structural equality; source positions are ignored.
  bool operator==(const WorkflowNode& other) const noexcept;
  bool operator!=(const WorkflowNode& other) const noexcept {
    return !(*this == other);
  }

 private:
  struct Node;
  explicit WorkflowNode(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Grammar: node := ident [ '(' node (',' node)* ')' ].  Whitespace is
// insignificant; the whole input must be consumed.  Throws ParseError.
WorkflowNode parse_workflow(std::string_view text);

// Plain serialization without spaces: `Seq(a,Seq(b,c))`.
std::string print_workflow(const WorkflowNode& w);

enum class LabelingMode {
  // Label each parenthesis pair with its nesting depth (the default).
  Depth,
  // Compatibility mode: the single-counter scan that increments on `(` and
  // decrements on a `)` only when the previous token was also `)`.  Kept
  // for study; it drifts from the depth labeling on siblings of nested
  // applications (see the unit tests for a worked case).
  ScanCounter,
};

struct LabeledToken {
  enum class Kind { Name, Open, Close, Comma };
  Kind kind;
  std::string text;  // Name only
  int label = 0;     // Open/Close only
};

class LabeledExpression {
 public:
  LabeledExpression(std::vector<LabeledToken> tokens, int max_label);

  const std::vector<LabeledToken>& tokens() const noexcept { return tokens_; }
  int max_label() const noexcept { return max_label_; }

  // `Seq(1]a,b[1)` form.
  std::string to_string() const;
  // Labels removed: `Seq(a,b)`.
  std::string stripped() const;

 private:
  std::vector<LabeledToken> tokens_;
  int max_label_;
};

LabeledExpression label_expression(const WorkflowNode& w,
                                   LabelingMode mode = LabelingMode::Depth);

// Largest label placed in the expression; 0 for a bare atomic activity.
int max_label(const LabeledExpression& labeled);

// Checks w against the library: every applied pattern exists, arities
// match, and no atomic activity name repeats anywhere in the tree
// (an error when strict_atoms, a warning otherwise).  Empty result iff
// well-formed.
std::vector<Diagnostic> validate(const WorkflowNode& w,
                                 const PatternLibrary& lib,
                                 bool strict_atoms = true);

}  // namespace patgen
