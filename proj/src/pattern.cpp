// SPDX-License-Identifier: Apache-2.0

#include "patgen/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace patgen {

// ── PatternDefinition ───────────────────────────────────────────────────────

PatternDefinition::PatternDefinition(std::string name,
                                     std::vector<std::string> formal_args,
                                     PropExpr ini, PropExpr fin,
                                     std::vector<Formula> basic_formulas)
    : name_(std::move(name)),
      formal_args_(std::move(formal_args)),
      ini_(std::move(ini)),
      fin_(std::move(fin)),
      basic_formulas_(std::move(basic_formulas)) {
  if (!is_identifier(name_)) {
    throw std::invalid_argument("invalid pattern name: '" + name_ + "'");
  }
  if (formal_args_.empty()) {
    throw std::invalid_argument("pattern '" + name_ +
                                "' has no formal arguments");
  }
  std::unordered_set<std::string> formals;
  for (const auto& arg : formal_args_) {
    if (!is_identifier(arg)) {
      throw std::invalid_argument("invalid formal argument name: '" + arg +
                                  "'");
    }
    if (!formals.insert(arg).second) {
      throw std::invalid_argument("duplicate formal argument '" + arg +
                                  "' in pattern '" + name_ + "'");
    }
  }

  auto ini_atoms = atoms_of(ini_.formula());
  auto fin_atoms = atoms_of(fin_.formula());
  for (const auto& a : ini_atoms) {
    if (!formals.count(a)) {
      throw std::invalid_argument("ini of pattern '" + name_ +
                                  "' mentions unknown formal argument '" + a +
                                  "'");
    }
    if (fin_atoms.count(a)) {
      throw std::invalid_argument("ini and fin of pattern '" + name_ +
                                  "' share the atom '" + a + "'");
    }
  }
  for (const auto& a : fin_atoms) {
    if (!formals.count(a)) {
      throw std::invalid_argument("fin of pattern '" + name_ +
                                  "' mentions unknown formal argument '" + a +
                                  "'");
    }
  }
  for (const auto& f : basic_formulas_) {
    for (const auto& a : atoms_of(f)) {
      if (!formals.count(a)) {
        throw std::invalid_argument("formula '" + print_formula(f) +
                                    "' of pattern '" + name_ +
                                    "' mentions unknown formal argument '" +
                                    a + "'");
      }
    }
  }

  for (const auto& arg : formal_args_) {
    ArgRole role = ini_atoms.count(arg)   ? ArgRole::Ini
                   : fin_atoms.count(arg) ? ArgRole::Fin
                                          : ArgRole::Ordinary;
    roles_.emplace(arg, role);
  }
}

ArgRole PatternDefinition::role_of(const std::string& formal) const {
  auto it = roles_.find(formal);
  if (it == roles_.end()) {
    throw std::invalid_argument("'" + formal +
                                "' is not a formal argument of pattern '" +
                                name_ + "'");
  }
  return it->second;
}

// ── PatternLibrary ──────────────────────────────────────────────────────────

PatternLibrary::PatternLibrary(std::vector<PatternDefinition> definitions)
    : definitions_(std::move(definitions)) {
  if (definitions_.empty()) {
    throw std::invalid_argument("pattern library is empty");
  }
  for (std::size_t i = 0; i < definitions_.size(); ++i) {
    if (!index_.emplace(definitions_[i].name(), i).second) {
      throw std::invalid_argument("duplicate pattern name '" +
                                  definitions_[i].name() + "'");
    }
  }
}

bool PatternLibrary::contains(const std::string& name) const {
  return index_.count(name) > 0;
}

const PatternDefinition* PatternLibrary::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &definitions_[it->second];
}

const PatternDefinition& PatternLibrary::at(const std::string& name) const {
  const PatternDefinition* def = find(name);
  if (!def) {
    throw std::invalid_argument("unknown pattern '" + name + "'");
  }
  return *def;
}

// ── Library file parser ─────────────────────────────────────────────────────

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

struct PendingExpr {
  Formula formula;
  int line;
};

// One block under construction while scanning the file.
struct Block {
  std::string name;
  std::vector<std::string> formal_args;
  int header_line = 0;
  std::optional<PendingExpr> ini;
  std::optional<PendingExpr> fin;
  std::vector<PendingExpr> formulas;
};

// `Name(f1,...,fn)` with the trailing ':' already removed.
Block parse_header(std::string_view text, int line) {
  Block block;
  block.header_line = line;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  auto read_ident = [&]() -> std::string {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) ||
            text[i] == '_')) {
      ++i;
    }
    std::string ident(text.substr(start, i - start));
    if (!is_identifier(ident)) {
      throw ParseError("malformed pattern header",
                       {line, static_cast<int>(start) + 1});
    }
    return ident;
  };

  block.name = read_ident();
  skip_ws();
  if (i >= text.size() || text[i] != '(') {
    throw ParseError("malformed pattern header: expected '('",
                     {line, static_cast<int>(i) + 1});
  }
  ++i;
  for (;;) {
    block.formal_args.push_back(read_ident());
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  skip_ws();
  if (i >= text.size() || text[i] != ')') {
    throw ParseError("malformed pattern header: expected ')'",
                     {line, static_cast<int>(i) + 1});
  }
  ++i;
  skip_ws();
  if (i != text.size()) {
    throw ParseError("malformed pattern header: trailing input",
                     {line, static_cast<int>(i) + 1});
  }
  return block;
}

// Parses one formula segment, translating positions to file coordinates.
Formula parse_segment(std::string_view segment, int line, int column_base) {
  try {
    return parse_formula(segment);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), {line, column_base + e.column() - 1});
  }
}

// Matches `ini` or `fin` at the start of a segment followed by a plain '='
// (not the '=>' operator).  Returns the expression text offset, or npos.
std::size_t match_anchor_prefix(std::string_view segment,
                                std::string_view keyword) {
  std::size_t i = 0;
  while (i < segment.size() &&
         std::isspace(static_cast<unsigned char>(segment[i]))) {
    ++i;
  }
  if (segment.substr(i, keyword.size()) != keyword) return std::string::npos;
  i += keyword.size();
  // Token boundary: `inix=...` is a formula, not an anchor definition.
  if (i < segment.size() &&
      (std::isalnum(static_cast<unsigned char>(segment[i])) ||
       segment[i] == '_')) {
    return std::string::npos;
  }
  while (i < segment.size() &&
         std::isspace(static_cast<unsigned char>(segment[i]))) {
    ++i;
  }
  if (i >= segment.size() || segment[i] != '=') return std::string::npos;
  if (i + 1 < segment.size() && segment[i + 1] == '>') return std::string::npos;
  return i + 1;
}

class LibraryParser {
 public:
  explicit LibraryParser(std::string_view text) : text_(text) {}

  PatternLibrary parse() {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t eol = text_.find('\n', pos);
      std::string_view line = text_.substr(
          pos, eol == std::string::npos ? text_.size() - pos : eol - pos);
      ++line_no;
      handle_line(line, line_no);
      if (eol == std::string::npos) break;
      pos = eol + 1;
    }
    finalize_block();
    if (definitions_.empty()) {
      throw ParseError("pattern library file defines no patterns", {1, 1});
    }
    return PatternLibrary(std::move(definitions_));
  }

 private:
  void handle_line(std::string_view raw, int line_no) {
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') return;

    if (line.back() == ':') {
      finalize_block();
      std::string_view head = raw.substr(0, raw.rfind(':'));
      block_ = parse_header(head, line_no);
      if (names_.count(block_->name)) {
        throw ParseError("duplicate pattern name '" + block_->name + "'",
                         {line_no, 1});
      }
      return;
    }

    if (!block_) {
      throw ParseError("formula outside any pattern block", {line_no, 1});
    }

    // Split on '/' (not a formula token) and classify each segment.
    std::size_t start = 0;
    for (;;) {
      std::size_t slash = raw.find('/', start);
      std::size_t end = slash == std::string::npos ? raw.size() : slash;
      handle_segment(raw.substr(start, end - start), line_no,
                     static_cast<int>(start) + 1);
      if (slash == std::string::npos) break;
      start = slash + 1;
    }
  }

  void handle_segment(std::string_view segment, int line_no, int column_base) {
    if (trim(segment).empty()) {
      throw ParseError("empty formula segment", {line_no, column_base});
    }
    for (std::string_view keyword : {"ini", "fin"}) {
      std::size_t offset = match_anchor_prefix(segment, keyword);
      if (offset == std::string::npos) continue;
      Formula expr = parse_segment(segment.substr(offset), line_no,
                                   column_base + static_cast<int>(offset));
      if (!is_propositional(expr)) {
        throw ParseError(std::string("temporal operator inside ") +
                             std::string(keyword) + " expression",
                         {line_no, column_base});
      }
      auto& slot = keyword == "ini" ? block_->ini : block_->fin;
      if (slot) {
        throw ParseError(std::string("duplicate ") + std::string(keyword) +
                             "= definition in pattern '" + block_->name + "'",
                         {line_no, column_base});
      }
      slot = PendingExpr{expr, line_no};
      return;
    }
    block_->formulas.push_back(
        PendingExpr{parse_segment(segment, line_no, column_base), line_no});
  }

  void finalize_block() {
    if (!block_) return;
    Block block = std::move(*block_);
    block_.reset();

    if (!block.ini) {
      throw ParseError("missing ini= in pattern '" + block.name + "'",
                       {block.header_line, 1});
    }
    if (!block.fin) {
      throw ParseError("missing fin= in pattern '" + block.name + "'",
                       {block.header_line, 1});
    }
    if (block.formulas.empty()) {
      throw ParseError("pattern '" + block.name + "' has no formulas",
                       {block.header_line, 1});
    }

    // Re-run the definition invariants here so findings carry the line of
    // the offending expression rather than the header.
    std::unordered_set<std::string> formals(block.formal_args.begin(),
                                            block.formal_args.end());
    auto ini_atoms = atoms_of(block.ini->formula);
    auto fin_atoms = atoms_of(block.fin->formula);
    for (const auto& a : ini_atoms) {
      if (!formals.count(a)) {
        throw ParseError("ini mentions unknown formal argument '" + a + "'",
                         {block.ini->line, 1});
      }
    }
    for (const auto& a : fin_atoms) {
      if (!formals.count(a)) {
        throw ParseError("fin mentions unknown formal argument '" + a + "'",
                         {block.fin->line, 1});
      }
      if (ini_atoms.count(a)) {
        throw ParseError("ini and fin share the atom '" + a + "'",
                         {block.fin->line, 1});
      }
    }
    for (const auto& p : block.formulas) {
      for (const auto& a : atoms_of(p.formula)) {
        if (!formals.count(a)) {
          throw ParseError("formula mentions unknown formal argument '" + a +
                               "'",
                           {p.line, 1});
        }
      }
    }

    std::vector<Formula> basics;
    basics.reserve(block.formulas.size());
    for (auto& p : block.formulas) basics.push_back(p.formula);
    try {
      definitions_.emplace_back(block.name, block.formal_args,
                                PropExpr(block.ini->formula),
                                PropExpr(block.fin->formula),
                                std::move(basics));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), {block.header_line, 1});
    }
    names_.insert(block.name);
  }

  std::string_view text_;
  std::optional<Block> block_;
  std::vector<PatternDefinition> definitions_;
  std::unordered_set<std::string> names_;
};

}  // namespace

PatternLibrary parse_pattern_library(std::string_view text) {
  return LibraryParser(text).parse();
}

PatternLibrary load_pattern_library(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open pattern library file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pattern_library(buffer.str());
}

// ── Instantiation and obligations ───────────────────────────────────────────

PatternInstance instantiate(const PatternDefinition& def,
                            const std::vector<PropExpr>& actuals) {
  if (actuals.size() != def.arity()) {
    std::ostringstream msg;
    msg << "pattern '" << def.name() << "' expects " << def.arity()
        << " arguments, got " << actuals.size();
    throw std::invalid_argument(msg.str());
  }
  Binding binding;
  for (std::size_t i = 0; i < actuals.size(); ++i) {
    binding.emplace(def.formal_args()[i], actuals[i]);
  }
  PatternInstance out{substitute(def.ini(), binding),
                      substitute(def.fin(), binding),
                      {}};
  out.formulas.reserve(def.basic_formulas().size());
  for (const auto& f : def.basic_formulas()) {
    out.formulas.push_back(substitute(f, binding));
  }
  return out;
}

std::vector<Formula> consistency_obligations(
    const PropExpr& ini, const PropExpr& fin,
    const std::vector<Formula>& basic_formulas) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  auto add = [&](const Formula& f) {
    if (seen.insert(f).second) out.push_back(f);
  };
  for (const auto& f : basic_formulas) add(f);
  // The pattern must be startable, must finish once started, must be
  // finishable, and must never start and finish at the same instant.
  add(Formula::eventually(ini.formula()));
  add(Formula::implication(ini.formula(),
                           Formula::eventually(fin.formula())));
  add(Formula::eventually(fin.formula()));
  add(Formula::always(Formula::negation(
      Formula::conjunction(ini.formula(), fin.formula()))));
  return out;
}

std::vector<Formula> consistency_obligations(const PatternDefinition& def) {
  return consistency_obligations(def.ini(), def.fin(), def.basic_formulas());
}

}  // namespace patgen
