# SPDX-License-Identifier: Apache-2.0
"""Workflow pattern compiler.

Compiles nested workflow-pattern expressions into temporal-logic
specifications and checks them for satisfiability over bounded lasso
models.  The heavy lifting lives in the compiled extension module; this
package re-exports its public surface.
"""

from ._core import (
    ArgRole,
    BoundOverflowError,
    CheckResult,
    Diagnostic,
    Error,
    ExprSide,
    Formula,
    LabeledExpression,
    LabelingMode,
    LassoModel,
    ParseError,
    PatternDefinition,
    PatternInstance,
    PatternLibrary,
    PropExpr,
    Provenance,
    Specification,
    ValidationError,
    WorkflowNode,
    check_pattern,
    check_sat,
    check_specification,
    completeness_threshold,
    consistency_obligations,
    consolidated_expression,
    eval_at,
    generate,
    has_errors,
    instantiate,
    label_expression,
    load_pattern_library,
    parse_formula,
    parse_pattern_library,
    parse_prop_expr,
    parse_workflow,
    print_formula,
    print_workflow,
    substitute,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "ArgRole",
    "BoundOverflowError",
    "CheckResult",
    "Diagnostic",
    "Error",
    "ExprSide",
    "Formula",
    "LabeledExpression",
    "LabelingMode",
    "LassoModel",
    "ParseError",
    "PatternDefinition",
    "PatternInstance",
    "PatternLibrary",
    "PropExpr",
    "Provenance",
    "Specification",
    "ValidationError",
    "WorkflowNode",
    "check_pattern",
    "check_sat",
    "check_specification",
    "completeness_threshold",
    "consistency_obligations",
    "consolidated_expression",
    "eval_at",
    "generate",
    "has_errors",
    "instantiate",
    "label_expression",
    "load_pattern_library",
    "parse_formula",
    "parse_pattern_library",
    "parse_prop_expr",
    "parse_workflow",
    "print_formula",
    "print_workflow",
    "substitute",
    "validate",
]
