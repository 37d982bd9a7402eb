// SPDX-License-Identifier: Apache-2.0

#include "patgen/generator.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace patgen {

// ── Specification ───────────────────────────────────────────────────────────

bool Specification::insert(Formula f, Provenance origin) {
  if (!seen_.insert(f).second) return false;
  formulas_.push_back(std::move(f));
  provenance_.push_back(std::move(origin));
  return true;
}

// ── Consolidated expressions ────────────────────────────────────────────────

PropExpr consolidated_expression(const WorkflowNode& w, ExprSide side,
                                 const PatternLibrary& lib) {
  if (w.is_atomic()) {
    throw std::invalid_argument(
        "consolidated expression requested for the atomic activity '" +
        w.name() + "'");
  }
  const PatternDefinition* def = lib.find(w.name());
  if (!def) {
    throw std::invalid_argument("unknown pattern '" + w.name() + "'");
  }
  if (def->arity() != w.args().size()) {
    throw std::invalid_argument("pattern '" + w.name() + "' expects " +
                                std::to_string(def->arity()) +
                                " arguments, got " +
                                std::to_string(w.args().size()));
  }
  Binding binding;
  for (std::size_t i = 0; i < w.args().size(); ++i) {
    const WorkflowNode& arg = w.args()[i];
    PropExpr actual =
        arg.is_atomic()
            ? PropExpr(Formula::atom(arg.name()))
            : consolidated_expression(arg, side, lib);
    binding.emplace(def->formal_args()[i], std::move(actual));
  }
  const PropExpr& base = side == ExprSide::Ini ? def->ini() : def->fin();
  return substitute(base, binding);
}

// ── Combination expansion ───────────────────────────────────────────────────

std::vector<std::pair<Combination, std::vector<PropExpr>>> expand_combinations(
    const WorkflowNode& node, const PatternLibrary& lib) {
  if (node.is_atomic()) {
    throw std::invalid_argument(
        "combinations requested for the atomic activity '" + node.name() +
        "'");
  }
  const std::vector<WorkflowNode>& args = node.args();
  std::vector<std::size_t> nested;  // positions of non-atomic arguments
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!args[i].is_atomic()) nested.push_back(i);
  }
  const std::size_t m = nested.size();

  std::vector<std::pair<Combination, std::vector<PropExpr>>> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << m);
       ++counter) {
    Combination combo;
    std::vector<PropExpr> actuals;
    actuals.reserve(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i].is_atomic()) {
        actuals.emplace_back(Formula::atom(args[i].name()));
      } else {
        // Leftmost nested argument is the most significant bit; 0 = ini.
        std::size_t j =
            static_cast<std::size_t>(std::lower_bound(nested.begin(),
                                                      nested.end(), i) -
                                     nested.begin());
        bool fin = ((counter >> (m - 1 - j)) & 1u) != 0;
        ExprSide side = fin ? ExprSide::Fin : ExprSide::Ini;
        combo.binding.emplace(i, side);
        actuals.push_back(consolidated_expression(args[i], side, lib));
      }
    }
    out.emplace_back(std::move(combo), std::move(actuals));
  }
  return out;
}

// ── Generation ──────────────────────────────────────────────────────────────

namespace {

struct Occurrence {
  const WorkflowNode* node;
  std::vector<std::size_t> path;
  int level;  // root application = 1
};

void collect_occurrences(const WorkflowNode& w, std::vector<std::size_t>& path,
                         int level, std::vector<Occurrence>& out) {
  if (w.is_atomic()) return;
  out.push_back({&w, path, level});
  for (std::size_t i = 0; i < w.args().size(); ++i) {
    path.push_back(i);
    collect_occurrences(w.args()[i], path, level + 1, out);
    path.pop_back();
  }
}

}  // namespace

Specification generate(const WorkflowNode& w, const PatternLibrary& lib,
                       const GenerateOptions& options) {
  std::vector<Diagnostic> findings = validate(w, lib, options.strict_atoms);
  if (has_errors(findings)) throw ValidationError(std::move(findings));

  std::vector<Occurrence> occurrences;
  std::vector<std::size_t> path;
  collect_occurrences(w, path, 1, occurrences);

  // Deepest level first; the preorder walk already ordered each level left
  // to right, and the stable sort preserves that.
  std::stable_sort(occurrences.begin(), occurrences.end(),
                   [](const Occurrence& a, const Occurrence& b) {
                     return a.level > b.level;
                   });

  Specification spec;
  for (const Occurrence& occ : occurrences) {
    const PatternDefinition& def = lib.at(occ.node->name());
    for (auto& [combo, actuals] : expand_combinations(*occ.node, lib)) {
      PatternInstance instance = instantiate(def, actuals);
      for (const Formula& f : instance.formulas) {
        spec.insert(f, Provenance{occ.path, occ.node->name(), combo});
      }
    }
  }
  return spec;
}

}  // namespace patgen
