// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the pattern compiler: formula parsing and printing,
// pattern libraries, workflow expressions, specification generation, and
// the bounded lasso-model satisfiability checker.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "patgen/checker.hpp"
#include "patgen/diag.hpp"
#include "patgen/formula.hpp"
#include "patgen/generator.hpp"
#include "patgen/pattern.hpp"
#include "patgen/workflow.hpp"

namespace py = pybind11;
using namespace patgen;

namespace {

const char* severity_name(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

const char* verdict_name(CheckResult::Verdict verdict) {
  switch (verdict) {
    case CheckResult::Verdict::Satisfiable:
      return "satisfiable";
    case CheckResult::Verdict::Unsatisfiable:
      return "unsatisfiable";
    case CheckResult::Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

SearchBounds make_bounds(int max_prefix, int max_loop) {
  SearchBounds bounds;
  bounds.max_prefix = max_prefix;
  bounds.max_loop = max_loop;
  return bounds;
}

SearchLimits make_limits(std::uint64_t max_candidates,
                         std::uint64_t max_abstract_steps) {
  SearchLimits limits;
  limits.max_candidates = max_candidates;
  limits.max_abstract_steps = max_abstract_steps;
  return limits;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Compile workflow pattern expressions into temporal-logic "
      "specifications and check them over bounded lasso models.";

  // Exception translators run newest-first, so register the base class
  // first and the most derived classes last; the Python classes inherit
  // from the bound Error so `except patgen.Error` catches everything.
  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<BoundOverflowError>(m, "BoundOverflowError",
                                             error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  // ── Formulas ──────────────────────────────────────────────────────────
  py::class_<Formula>(m, "Formula")
      .def_static("atom", &Formula::atom, py::arg("name"))
      .def_static("negation", &Formula::negation, py::arg("operand"))
      .def_static("conjunction", &Formula::conjunction, py::arg("lhs"),
                  py::arg("rhs"))
      .def_static("disjunction", &Formula::disjunction, py::arg("lhs"),
                  py::arg("rhs"))
      .def_static("implication", &Formula::implication, py::arg("lhs"),
                  py::arg("rhs"))
      .def_static("eventually", &Formula::eventually, py::arg("operand"))
      .def_static("always", &Formula::always, py::arg("operand"))
      .def("atoms", [](const Formula& f) { return atoms_of(f); },
           "Sorted set of atom names occurring in the formula.")
      .def("is_propositional",
           [](const Formula& f) { return is_propositional(f); })
      .def("__str__", [](const Formula& f) { return print_formula(f); })
      .def("__repr__",
           [](const Formula& f) {
             return "Formula('" + print_formula(f) + "')";
           })
      .def("__eq__",
           [](const Formula& a, const Formula& b) { return a == b; },
           py::is_operator())
      .def("__ne__",
           [](const Formula& a, const Formula& b) { return !(a == b); },
           py::is_operator())
      .def("__hash__", [](const Formula& f) { return f.hash(); });

  m.def("parse_formula", &parse_formula, py::arg("text"),
        "Parse a formula from its concrete syntax.");
  m.def("print_formula", &print_formula, py::arg("formula"),
        "Render a formula in the canonical concrete syntax.");

  py::class_<PropExpr>(m, "PropExpr")
      .def(py::init<Formula>(), py::arg("formula"))
      .def_property_readonly("formula", &PropExpr::formula)
      .def("__str__",
           [](const PropExpr& e) { return print_formula(e.formula()); })
      .def("__repr__",
           [](const PropExpr& e) {
             return "PropExpr('" + print_formula(e.formula()) + "')";
           })
      .def("__eq__",
           [](const PropExpr& a, const PropExpr& b) { return a == b; },
           py::is_operator());

  m.def("parse_prop_expr", &parse_prop_expr, py::arg("text"),
        "Parse a propositional expression (no temporal operators).");

  m.def(
      "substitute",
      [](const Formula& f, const std::map<std::string, PropExpr>& binding) {
        Binding b(binding.begin(), binding.end());
        return substitute(f, b);
      },
      py::arg("formula"), py::arg("binding"),
      "Simultaneously replace named atoms with propositional expressions.");

  // ── Pattern libraries ─────────────────────────────────────────────────
  py::enum_<ArgRole>(m, "ArgRole")
      .value("Ini", ArgRole::Ini)
      .value("Ordinary", ArgRole::Ordinary)
      .value("Fin", ArgRole::Fin);

  py::class_<PatternDefinition>(m, "PatternDefinition")
      .def_property_readonly("name", &PatternDefinition::name)
      .def_property_readonly("formal_args", &PatternDefinition::formal_args)
      .def_property_readonly("arity", &PatternDefinition::arity)
      .def_property_readonly("ini", &PatternDefinition::ini)
      .def_property_readonly("fin", &PatternDefinition::fin)
      .def_property_readonly("basic_formulas",
                             &PatternDefinition::basic_formulas)
      .def("role_of", &PatternDefinition::role_of, py::arg("formal_arg"))
      .def("__repr__", [](const PatternDefinition& def) {
        return "PatternDefinition('" + def.name() + "'/" +
               std::to_string(def.arity()) + ")";
      });

  py::class_<PatternLibrary>(m, "PatternLibrary")
      .def_property_readonly("definitions", &PatternLibrary::definitions)
      .def("contains", &PatternLibrary::contains, py::arg("name"))
      .def("at", &PatternLibrary::at, py::arg("name"),
           py::return_value_policy::reference_internal)
      .def("__contains__",
           [](const PatternLibrary& lib, const std::string& name) {
             return lib.contains(name);
           })
      .def("__len__", &PatternLibrary::size);

  m.def("parse_pattern_library", &parse_pattern_library, py::arg("text"),
        "Parse a pattern library from its file format.");
  m.def("load_pattern_library", &load_pattern_library, py::arg("path"),
        "Read and parse a pattern library file.");

  py::class_<PatternInstance>(m, "PatternInstance")
      .def_readonly("ini", &PatternInstance::ini)
      .def_readonly("fin", &PatternInstance::fin)
      .def_readonly("formulas", &PatternInstance::formulas);

  m.def("instantiate", &instantiate, py::arg("definition"),
        py::arg("actuals"),
        "Substitute actual expressions for a pattern's formal arguments.");

  m.def("consistency_obligations",
        py::overload_cast<const PatternDefinition&>(&consistency_obligations),
        py::arg("definition"));
  m.def("consistency_obligations",
        py::overload_cast<const PropExpr&, const PropExpr&,
                          const std::vector<Formula>&>(
            &consistency_obligations),
        py::arg("ini"), py::arg("fin"),
        py::arg("basic_formulas") = std::vector<Formula>{});

  // ── Workflow expressions ──────────────────────────────────────────────
  py::class_<WorkflowNode>(m, "WorkflowNode")
      .def_static(
          "atomic",
          [](std::string name) { return WorkflowNode::atomic(std::move(name)); },
          py::arg("name"))
      .def_static(
          "application",
          [](std::string name, std::vector<WorkflowNode> args) {
            return WorkflowNode::application(std::move(name), std::move(args));
          },
          py::arg("name"), py::arg("args"))
      .def("is_atomic", &WorkflowNode::is_atomic)
      .def_property_readonly("name", &WorkflowNode::name)
      .def_property_readonly("args", &WorkflowNode::args)
      .def("depth", &WorkflowNode::depth)
      .def("__str__", [](const WorkflowNode& w) { return print_workflow(w); })
      .def("__repr__",
           [](const WorkflowNode& w) {
             return "WorkflowNode('" + print_workflow(w) + "')";
           })
      .def("__eq__",
           [](const WorkflowNode& a, const WorkflowNode& b) { return a == b; },
           py::is_operator());

  m.def("parse_workflow", &parse_workflow, py::arg("text"),
        "Parse a workflow expression.");
  m.def("print_workflow", &print_workflow, py::arg("workflow"),
        "Render a workflow expression.");

  py::enum_<LabelingMode>(m, "LabelingMode")
      .value("Depth", LabelingMode::Depth)
      .value("ScanCounter", LabelingMode::ScanCounter);

  py::class_<LabeledExpression>(m, "LabeledExpression")
      .def("to_string", &LabeledExpression::to_string)
      .def("stripped", &LabeledExpression::stripped)
      .def_property_readonly("max_label", &LabeledExpression::max_label)
      .def("__str__",
           [](const LabeledExpression& e) { return e.to_string(); });

  m.def("label_expression", &label_expression, py::arg("workflow"),
        py::arg("mode") = LabelingMode::Depth,
        "Attach nesting labels to every application in the expression.");

  py::class_<Diagnostic>(m, "Diagnostic")
      .def_property_readonly(
          "severity",
          [](const Diagnostic& d) {
            return std::string(severity_name(d.severity));
          })
      .def_readonly("message", &Diagnostic::message)
      .def_property_readonly("line",
                             [](const Diagnostic& d) { return d.pos.line; })
      .def_property_readonly("column",
                             [](const Diagnostic& d) { return d.pos.column; })
      .def("__repr__", [](const Diagnostic& d) {
        return std::string(severity_name(d.severity)) + " at " +
               std::to_string(d.pos.line) + ":" +
               std::to_string(d.pos.column) + ": " + d.message;
      });

  m.def("validate", &validate, py::arg("workflow"), py::arg("library"),
        py::arg("strict_atoms") = true,
        "Check a workflow expression against a library; returns findings.");
  m.def("has_errors", &has_errors, py::arg("diagnostics"));

  // ── Generation ────────────────────────────────────────────────────────
  py::enum_<ExprSide>(m, "ExprSide")
      .value("Ini", ExprSide::Ini)
      .value("Fin", ExprSide::Fin);

  py::class_<Provenance>(m, "Provenance")
      .def_readonly("path", &Provenance::path)
      .def_readonly("pattern", &Provenance::pattern)
      .def_property_readonly("combination", [](const Provenance& p) {
        std::map<std::size_t, std::string> out;
        for (const auto& [position, side] : p.combination.binding) {
          out[position] = side == ExprSide::Ini ? "ini" : "fin";
        }
        return out;
      });

  py::class_<Specification>(m, "Specification")
      .def_property_readonly("formulas", &Specification::formulas)
      .def_property_readonly("provenance", &Specification::provenance)
      .def("__len__", &Specification::size)
      .def("contains", &Specification::contains, py::arg("formula"));

  m.def(
      "consolidated_expression",
      [](const WorkflowNode& w, ExprSide side, const PatternLibrary& lib) {
        return consolidated_expression(w, side, lib);
      },
      py::arg("workflow"), py::arg("side"), py::arg("library"),
      "The start/finish expression of a nested workflow term.");

  m.def(
      "generate",
      [](const WorkflowNode& w, const PatternLibrary& lib, bool strict_atoms) {
        GenerateOptions options;
        options.strict_atoms = strict_atoms;
        return generate(w, lib, options);
      },
      py::arg("workflow"), py::arg("library"), py::arg("strict_atoms") = true,
      "Compile a workflow expression into its formula specification.");

  // ── Checking ──────────────────────────────────────────────────────────
  py::class_<LassoModel>(m, "LassoModel")
      .def(py::init<std::vector<State>, std::vector<State>>(),
           py::arg("prefix"), py::arg("loop"))
      .def_property_readonly("prefix", &LassoModel::prefix)
      .def_property_readonly("loop", &LassoModel::loop)
      .def("state_at", &LassoModel::state_at, py::arg("position"))
      .def("to_string", &LassoModel::to_string)
      .def("__len__", &LassoModel::size)
      .def("__str__", [](const LassoModel& m_) { return m_.to_string(); })
      .def("__repr__",
           [](const LassoModel& m_) {
             return "LassoModel('" + m_.to_string() + "')";
           })
      .def("__eq__",
           [](const LassoModel& a, const LassoModel& b) { return a == b; },
           py::is_operator());

  m.def("eval_at", &eval_at, py::arg("formula"), py::arg("model"),
        py::arg("position"),
        "Truth of the formula at a position of the lasso model.");

  m.def("completeness_threshold",
        [](int atom_count) {
          SearchBounds b = completeness_threshold(atom_count);
          return py::make_tuple(b.max_prefix, b.max_loop);
        },
        py::arg("atom_count"),
        "The (max_prefix, max_loop) pair that makes a negative search "
        "exhaustive.");

  py::class_<CheckResult>(m, "CheckResult")
      .def_property_readonly(
          "verdict",
          [](const CheckResult& r) {
            return std::string(verdict_name(r.verdict));
          })
      .def_readonly("witness", &CheckResult::witness)
      .def_readonly("exhaustive", &CheckResult::exhaustive)
      .def_property_readonly("bounds",
                             [](const CheckResult& r) {
                               return py::make_tuple(r.bounds.max_prefix,
                                                     r.bounds.max_loop);
                             })
      .def("is_satisfiable", &CheckResult::is_satisfiable)
      .def("is_unsatisfiable", &CheckResult::is_unsatisfiable)
      .def("is_unknown", &CheckResult::is_unknown)
      .def("to_string", &CheckResult::to_string)
      .def("__str__", [](const CheckResult& r) { return r.to_string(); })
      .def("__repr__", [](const CheckResult& r) {
        return "CheckResult('" + r.to_string() + "')";
      });

  m.def(
      "check_sat",
      [](const std::vector<Formula>& formulas, int max_prefix, int max_loop,
         std::uint64_t max_candidates, std::uint64_t max_abstract_steps) {
        return check_sat(formulas, make_bounds(max_prefix, max_loop),
                         make_limits(max_candidates, max_abstract_steps));
      },
      py::arg("formulas"), py::arg("max_prefix") = 8, py::arg("max_loop") = 4,
      py::arg("max_candidates") = std::uint64_t{2'000'000},
      py::arg("max_abstract_steps") = std::uint64_t{4'000'000},
      "Bounded satisfiability of a formula set over lasso models.");

  m.def(
      "check_pattern",
      [](const PatternDefinition& def, int max_prefix, int max_loop) {
        return check_pattern(def, make_bounds(max_prefix, max_loop));
      },
      py::arg("definition"), py::arg("max_prefix") = 8,
      py::arg("max_loop") = 4,
      "Bounded satisfiability of a pattern's consistency obligations.");

  m.def(
      "check_specification",
      [](const Specification& spec, int max_prefix, int max_loop) {
        return check_specification(spec, make_bounds(max_prefix, max_loop));
      },
      py::arg("specification"), py::arg("max_prefix") = 8,
      py::arg("max_loop") = 4,
      "Bounded satisfiability of a generated specification.");
}
