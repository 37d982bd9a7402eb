// SPDX-License-Identifier: Apache-2.0

#include "patgen/workflow.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace patgen {

// ── WorkflowNode ────────────────────────────────────────────────────────────

struct WorkflowNode::Node {
  bool atomic;
  std::string name;
  std::vector<WorkflowNode> args;
  SourcePos pos;
};

WorkflowNode::WorkflowNode(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

WorkflowNode WorkflowNode::atomic(std::string name, SourcePos pos) {
  if (!is_identifier(name)) {
    throw std::invalid_argument("invalid activity name: '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->atomic = true;
  node->name = std::move(name);
  node->pos = pos;
  return WorkflowNode(std::move(node));
}

WorkflowNode WorkflowNode::application(std::string pattern,
                                       std::vector<WorkflowNode> args,
                                       SourcePos pos) {
  if (!is_identifier(pattern)) {
    throw std::invalid_argument("invalid pattern name: '" + pattern + "'");
  }
  if (args.empty()) {
    throw std::invalid_argument("pattern application '" + pattern +
                                "' has an empty argument list");
  }
  auto node = std::make_shared<Node>();
  node->atomic = false;
  node->name = std::move(pattern);
  node->args = std::move(args);
  node->pos = pos;
  return WorkflowNode(std::move(node));
}

bool WorkflowNode::is_atomic() const noexcept { return node_->atomic; }
const std::string& WorkflowNode::name() const noexcept { return node_->name; }
const std::vector<WorkflowNode>& WorkflowNode::args() const noexcept {
  return node_->args;
}
SourcePos WorkflowNode::pos() const noexcept { return node_->pos; }

int WorkflowNode::depth() const noexcept {
  if (node_->atomic) return 0;
  int deepest = 0;
  for (const auto& arg : node_->args) deepest = std::max(deepest, arg.depth());
  return deepest + 1;
}

bool WorkflowNode::operator==(const WorkflowNode& other) const noexcept {
  if (node_ == other.node_) return true;
  if (node_->atomic != other.node_->atomic || node_->name != other.node_->name)
    return false;
  if (node_->args.size() != other.node_->args.size()) return false;
  for (std::size_t i = 0; i < node_->args.size(); ++i) {
    if (node_->args[i] != other.node_->args[i]) return false;
  }
  return true;
}

// ── Parser ──────────────────────────────────────────────────────────────────

namespace {

class WorkflowParser {
 public:
  explicit WorkflowParser(std::string_view text) : text_(text) {}

  WorkflowNode parse() {
    WorkflowNode node = parse_node();
    skip_ws();
    if (i_ < text_.size()) {
      throw ParseError(std::string("unexpected trailing input '") +
                           text_[i_] + "'",
                       here());
    }
    return node;
  }

 private:
  WorkflowNode parse_node() {
    skip_ws();
    SourcePos pos = here();
    std::string name = read_ident();
    skip_ws();
    if (i_ >= text_.size() || text_[i_] != '(') {
      return WorkflowNode::atomic(std::move(name), pos);
    }
    advance();  // '('
    skip_ws();
    if (i_ < text_.size() && text_[i_] == ')') {
      throw ParseError("pattern application '" + name +
                           "' has an empty argument list",
                       pos);
    }
    std::vector<WorkflowNode> args;
    for (;;) {
      args.push_back(parse_node());
      skip_ws();
      if (i_ < text_.size() && text_[i_] == ',') {
        advance();
        continue;
      }
      break;
    }
    if (i_ >= text_.size() || text_[i_] != ')') {
      throw ParseError("unbalanced parenthesis in application of '" + name +
                           "'",
                       here());
    }
    advance();  // ')'
    return WorkflowNode::application(std::move(name), std::move(args), pos);
  }

  std::string read_ident() {
    skip_ws();
    SourcePos pos = here();
    std::size_t start = i_;
    while (i_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
            text_[i_] == '_')) {
      advance();
    }
    std::string ident(text_.substr(start, i_ - start));
    if (!is_identifier(ident)) {
      if (i_ >= text_.size()) {
        throw ParseError("unexpected end of input: expected a name", pos);
      }
      throw ParseError(std::string("unexpected token '") + text_[i_] + "'",
                       pos);
    }
    return ident;
  }

  void skip_ws() {
    while (i_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[i_]))) {
      advance();
    }
  }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  SourcePos here() const { return {line_, col_}; }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

WorkflowNode parse_workflow(std::string_view text) {
  return WorkflowParser(text).parse();
}

namespace {

void print_rec(const WorkflowNode& w, std::string& out) {
  out += w.name();
  if (w.is_atomic()) return;
  out += '(';
  bool first = true;
  for (const auto& arg : w.args()) {
    if (!first) out += ',';
    first = false;
    print_rec(arg, out);
  }
  out += ')';
}

}  // namespace

std::string print_workflow(const WorkflowNode& w) {
  std::string out;
  print_rec(w, out);
  return out;
}

// ── Labeling ────────────────────────────────────────────────────────────────

LabeledExpression::LabeledExpression(std::vector<LabeledToken> tokens,
                                     int max)
    : tokens_(std::move(tokens)), max_label_(max) {}

std::string LabeledExpression::to_string() const {
  std::string out;
  for (const auto& t : tokens_) {
    switch (t.kind) {
      case LabeledToken::Kind::Name:
        out += t.text;
        break;
      case LabeledToken::Kind::Open:
        out += '(';
        out += std::to_string(t.label);
        out += ']';
        break;
      case LabeledToken::Kind::Close:
        out += '[';
        out += std::to_string(t.label);
        out += ')';
        break;
      case LabeledToken::Kind::Comma:
        out += ',';
        break;
    }
  }
  return out;
}

std::string LabeledExpression::stripped() const {
  std::string out;
  for (const auto& t : tokens_) {
    switch (t.kind) {
      case LabeledToken::Kind::Name:
        out += t.text;
        break;
      case LabeledToken::Kind::Open:
        out += '(';
        break;
      case LabeledToken::Kind::Close:
        out += ')';
        break;
      case LabeledToken::Kind::Comma:
        out += ',';
        break;
    }
  }
  return out;
}

namespace {

void tokenize(const WorkflowNode& w, std::vector<LabeledToken>& out) {
  out.push_back({LabeledToken::Kind::Name, w.name(), 0});
  if (w.is_atomic()) return;
  out.push_back({LabeledToken::Kind::Open, "", 0});
  bool first = true;
  for (const auto& arg : w.args()) {
    if (!first) out.push_back({LabeledToken::Kind::Comma, "", 0});
    first = false;
    tokenize(arg, out);
  }
  out.push_back({LabeledToken::Kind::Close, "", 0});
}

// Pair each parenthesis with its nesting depth.
int label_by_depth(std::vector<LabeledToken>& tokens) {
  int depth = 0;
  int max = 0;
  for (auto& t : tokens) {
    if (t.kind == LabeledToken::Kind::Open) {
      t.label = ++depth;
      max = std::max(max, depth);
    } else if (t.kind == LabeledToken::Kind::Close) {
      t.label = depth--;
    }
  }
  return max;
}

// The literal scan: a single counter incremented on '(' and decremented on
// a ')' whose predecessor token is also ')'.  Siblings that follow a nested
// application pick up a fresh counter value instead of their depth.
int label_by_scan(std::vector<LabeledToken>& tokens) {
  int counter = 0;
  int max = 0;
  bool prev_was_close = false;
  for (auto& t : tokens) {
    if (t.kind == LabeledToken::Kind::Open) {
      t.label = ++counter;
      max = std::max(max, counter);
    } else if (t.kind == LabeledToken::Kind::Close) {
      if (prev_was_close) --counter;
      t.label = counter;
      max = std::max(max, counter);
    }
    prev_was_close = t.kind == LabeledToken::Kind::Close;
  }
  return max;
}

}  // namespace

LabeledExpression label_expression(const WorkflowNode& w, LabelingMode mode) {
  std::vector<LabeledToken> tokens;
  tokenize(w, tokens);
  int max = mode == LabelingMode::Depth ? label_by_depth(tokens)
                                        : label_by_scan(tokens);
  return LabeledExpression(std::move(tokens), max);
}

int max_label(const LabeledExpression& labeled) { return labeled.max_label(); }

// ── Validation ──────────────────────────────────────────────────────────────

namespace {

void validate_rec(const WorkflowNode& w, const PatternLibrary& lib,
                  bool strict_atoms,
                  std::map<std::string, SourcePos>& seen_atoms,
                  std::vector<Diagnostic>& out) {
  if (w.is_atomic()) {
    auto [it, inserted] = seen_atoms.emplace(w.name(), w.pos());
    if (!inserted) {
      out.push_back(
          {strict_atoms ? Severity::Error : Severity::Warning,
           "duplicate atomic activity '" + w.name() + "'", w.pos()});
    }
    return;
  }
  const PatternDefinition* def = lib.find(w.name());
  if (!def) {
    out.push_back(
        {Severity::Error, "unknown pattern '" + w.name() + "'", w.pos()});
  } else if (def->arity() != w.args().size()) {
    std::ostringstream msg;
    msg << "pattern '" << w.name() << "' expects " << def->arity()
        << " arguments, got " << w.args().size();
    out.push_back({Severity::Error, msg.str(), w.pos()});
  }
  for (const auto& arg : w.args()) {
    validate_rec(arg, lib, strict_atoms, seen_atoms, out);
  }
}

}  // namespace

std::vector<Diagnostic> validate(const WorkflowNode& w,
                                 const PatternLibrary& lib,
                                 bool strict_atoms) {
  std::vector<Diagnostic> out;
  std::map<std::string, SourcePos> seen_atoms;
  validate_rec(w, lib, strict_atoms, seen_atoms, out);
  return out;
}

}  // namespace patgen
