// SPDX-License-Identifier: Apache-2.0

#include "patgen/formula.hpp"

#include <cctype>
#include <utility>

namespace patgen {

// ── AST nodes ───────────────────────────────────────────────────────────────

struct Formula::Node {
  Kind kind;
  std::string name;                    // Atom only
  std::shared_ptr<const Node> left;    // unary operand / binary lhs
  std::shared_ptr<const Node> right;   // binary rhs
  std::size_t hash = 0;
};

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_')) {
    return false;
  }
  for (char c : text) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
      return false;
    }
  }
  return true;
}

Formula Formula::atom(std::string name) {
  if (!is_identifier(name)) {
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->hash = hash_combine(static_cast<std::size_t>(Kind::Atom),
                            std::hash<std::string>{}(name));
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->left = operand.node_;
  node->hash =
      hash_combine(static_cast<std::size_t>(Kind::Not) + 0x51,
                   node->left->hash);
  return Formula(std::move(node));
}

Formula Formula::eventually(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Eventually;
  node->left = operand.node_;
  node->hash = hash_combine(
      static_cast<std::size_t>(Kind::Eventually) + 0x51, node->left->hash);
  return Formula(std::move(node));
}

Formula Formula::always(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Always;
  node->left = operand.node_;
  node->hash = hash_combine(static_cast<std::size_t>(Kind::Always) + 0x51,
                            node->left->hash);
  return Formula(std::move(node));
}

namespace {

// hash_combine is not associative-safe across kinds by itself; salting the
// kind keeps And/Or/Implies trees over equal children distinct.
constexpr std::size_t kBinarySalt = 0xb1;

}  // namespace

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->left = lhs.node_;
  node->right = rhs.node_;
  node->hash = hash_combine(
      hash_combine(static_cast<std::size_t>(Kind::And) + kBinarySalt,
                   node->left->hash),
      node->right->hash);
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->left = lhs.node_;
  node->right = rhs.node_;
  node->hash = hash_combine(
      hash_combine(static_cast<std::size_t>(Kind::Or) + kBinarySalt,
                   node->left->hash),
      node->right->hash);
  return Formula(std::move(node));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Implies;
  node->left = lhs.node_;
  node->right = rhs.node_;
  node->hash = hash_combine(
      hash_combine(static_cast<std::size_t>(Kind::Implies) + kBinarySalt,
                   node->left->hash),
      node->right->hash);
  return Formula(std::move(node));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_unary() const noexcept {
  Kind k = node_->kind;
  return k == Kind::Not || k == Kind::Eventually || k == Kind::Always;
}

bool Formula::is_binary() const noexcept {
  Kind k = node_->kind;
  return k == Kind::And || k == Kind::Or || k == Kind::Implies;
}

const std::string& Formula::atom_name() const {
  if (node_->kind != Kind::Atom) {
    throw std::logic_error("atom_name() on a non-atom formula");
  }
  return node_->name;
}

Formula Formula::operand() const {
  if (!is_unary()) throw std::logic_error("operand() on a non-unary formula");
  return Formula(node_->left);
}

Formula Formula::lhs() const {
  if (!is_binary()) throw std::logic_error("lhs() on a non-binary formula");
  return Formula(node_->left);
}

Formula Formula::rhs() const {
  if (!is_binary()) throw std::logic_error("rhs() on a non-binary formula");
  return Formula(node_->right);
}

std::size_t Formula::hash() const noexcept { return node_->hash; }

bool Formula::operator==(const Formula& other) const noexcept {
  // Local struct so the recursion can reach the private Node type.
  struct Cmp {
    static bool eq(const Node* a, const Node* b) {
      if (a == b) return true;
      if (a->hash != b->hash || a->kind != b->kind) return false;
      switch (a->kind) {
        case Kind::Atom:
          return a->name == b->name;
        case Kind::Not:
        case Kind::Eventually:
        case Kind::Always:
          return eq(a->left.get(), b->left.get());
        default:
          return eq(a->left.get(), b->left.get()) &&
                 eq(a->right.get(), b->right.get());
      }
    }
  };
  return Cmp::eq(node_.get(), other.node_.get());
}

// ── Lexer ───────────────────────────────────────────────────────────────────

namespace {

enum class Tok {
  Ident,
  Not,
  And,
  Or,
  Implies,
  Eventually,
  Always,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    SourcePos pos{line_, col_};
    if (i_ >= text_.size()) return {Tok::End, "", pos};
    char c = text_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
              text_[i_] == '_')) {
        advance();
      }
      return {Tok::Ident, std::string(text_.substr(start, i_ - start)), pos};
    }
    switch (c) {
      case '~':
        advance();
        return {Tok::Not, "~", pos};
      case '&':
        advance();
        return {Tok::And, "&", pos};
      case '|':
        advance();
        return {Tok::Or, "|", pos};
      case '(':
        advance();
        return {Tok::LParen, "(", pos};
      case ')':
        advance();
        return {Tok::RParen, ")", pos};
      case '=':
        advance();
        if (i_ < text_.size() && text_[i_] == '>') {
          advance();
          return {Tok::Implies, "=>", pos};
        }
        throw ParseError("unknown token '=' (did you mean '=>'?)", pos);
      case '<':
        advance();
        if (i_ < text_.size() && text_[i_] == '>') {
          advance();
          return {Tok::Eventually, "<>", pos};
        }
        throw ParseError("unknown token '<' (did you mean '<>'?)", pos);
      case '[':
        advance();
        if (i_ < text_.size() && text_[i_] == ']') {
          advance();
          return {Tok::Always, "[]", pos};
        }
        throw ParseError("unknown token '[' (did you mean '[]'?)", pos);
      default:
        throw ParseError(std::string("unknown token '") + c + "'", pos);
    }
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_ws() {
    while (i_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[i_]))) {
      advance();
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ── Parser ──────────────────────────────────────────────────────────────────
//
// implies := or ('=>' implies)?
// or      := and ('|' and)*
// and     := unary ('&' unary)*
// unary   := ('~' | '<>' | '[]') unary | primary
// primary := ident | '(' implies ')'

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : lexer_(text) { bump(); }

  Formula parse() {
    if (cur_.kind == Tok::End) {
      throw ParseError("empty formula", cur_.pos);
    }
    Formula f = implies();
    if (cur_.kind != Tok::End) {
      throw ParseError("unexpected trailing input '" + cur_.text + "'",
                       cur_.pos);
    }
    return f;
  }

 private:
  void bump() { cur_ = lexer_.next(); }

  Formula implies() {
    Formula lhs = disj();
    if (cur_.kind == Tok::Implies) {
      bump();
      return Formula::implication(std::move(lhs), implies());
    }
    return lhs;
  }

  Formula disj() {
    Formula f = conj();
    while (cur_.kind == Tok::Or) {
      bump();
      f = Formula::disjunction(std::move(f), conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (cur_.kind == Tok::And) {
      bump();
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    switch (cur_.kind) {
      case Tok::Not:
        bump();
        return Formula::negation(unary());
      case Tok::Eventually:
        bump();
        return Formula::eventually(unary());
      case Tok::Always:
        bump();
        return Formula::always(unary());
      default:
        return primary();
    }
  }

  Formula primary() {
    switch (cur_.kind) {
      case Tok::Ident: {
        Formula f = Formula::atom(cur_.text);
        bump();
        return f;
      }
      case Tok::LParen: {
        Token open = cur_;
        bump();
        Formula f = implies();
        if (cur_.kind != Tok::RParen) {
          throw ParseError("unbalanced parenthesis (opened here)", open.pos);
        }
        bump();
        return f;
      }
      case Tok::End:
        throw ParseError("dangling operator: formula ends unexpectedly",
                         cur_.pos);
      case Tok::RParen:
        throw ParseError("unbalanced parenthesis: unexpected ')'", cur_.pos);
      default:
        throw ParseError("unexpected token '" + cur_.text + "'", cur_.pos);
    }
  }

  Lexer lexer_;
  Token cur_{Tok::End, "", {1, 1}};
};

}  // namespace

Formula parse_formula(std::string_view text) {
  return FormulaParser(text).parse();
}

// ── Printer ─────────────────────────────────────────────────────────────────

namespace {

void print_rec(const Formula& f, std::string& out);

// Binary operands of binary operators are parenthesized; everything else is
// printed bare.  Implication keeps its right-associative spine bare and only
// parenthesizes an implication on its left.
void print_operand(const Formula& operand, bool parenthesize,
                   std::string& out) {
  if (parenthesize) {
    out += '(';
    print_rec(operand, out);
    out += ')';
  } else {
    print_rec(operand, out);
  }
}

void print_rec(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom_name();
      return;
    case Formula::Kind::Not:
    case Formula::Kind::Eventually:
    case Formula::Kind::Always: {
      out += f.kind() == Formula::Kind::Not          ? "~"
             : f.kind() == Formula::Kind::Eventually ? "<>"
                                                     : "[]";
      Formula inner = f.operand();
      print_operand(inner, inner.is_binary(), out);
      return;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const char* op = f.kind() == Formula::Kind::And ? " & " : " | ";
      Formula l = f.lhs(), r = f.rhs();
      print_operand(l, l.is_binary(), out);
      out += op;
      print_operand(r, r.is_binary(), out);
      return;
    }
    case Formula::Kind::Implies: {
      Formula l = f.lhs(), r = f.rhs();
      print_operand(l, l.kind() == Formula::Kind::Implies, out);
      out += " => ";
      print_rec(r, out);
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

// ── Queries ─────────────────────────────────────────────────────────────────

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.insert(f.atom_name());
      return;
    case Formula::Kind::Not:
    case Formula::Kind::Eventually:
    case Formula::Kind::Always:
      collect_atoms(f.operand(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
  }
}

}  // namespace

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

bool is_propositional(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return true;
    case Formula::Kind::Eventually:
    case Formula::Kind::Always:
      return false;
    case Formula::Kind::Not:
      return is_propositional(f.operand());
    default:
      return is_propositional(f.lhs()) && is_propositional(f.rhs());
  }
}

// ── PropExpr and substitution ───────────────────────────────────────────────

PropExpr::PropExpr(Formula f) : formula_(std::move(f)) {
  if (!is_propositional(formula_)) {
    throw std::invalid_argument("temporal operator inside '" +
                                print_formula(formula_) +
                                "'; expected a propositional expression");
  }
}

PropExpr parse_prop_expr(std::string_view text) {
  return PropExpr(parse_formula(text));
}

Formula substitute(const Formula& f, const Binding& binding) {
  if (binding.empty()) return f;
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = binding.find(f.atom_name());
      return it != binding.end() ? it->second.formula() : f;
    }
    case Formula::Kind::Not:
      return Formula::negation(substitute(f.operand(), binding));
    case Formula::Kind::Eventually:
      return Formula::eventually(substitute(f.operand(), binding));
    case Formula::Kind::Always:
      return Formula::always(substitute(f.operand(), binding));
    case Formula::Kind::And:
      return Formula::conjunction(substitute(f.lhs(), binding),
                                  substitute(f.rhs(), binding));
    case Formula::Kind::Or:
      return Formula::disjunction(substitute(f.lhs(), binding),
                                  substitute(f.rhs(), binding));
    case Formula::Kind::Implies:
      return Formula::implication(substitute(f.lhs(), binding),
                                  substitute(f.rhs(), binding));
  }
  throw std::logic_error("unreachable formula kind");
}

PropExpr substitute(const PropExpr& e, const Binding& binding) {
  // Propositional closure: substituting propositional expressions into a
  // propositional expression cannot introduce temporal operators.
  return PropExpr(substitute(e.formula(), binding));
}

}  // namespace patgen
