# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the Python bindings."""

import pytest

import patgen

LIBRARY = """\
Seq(f1,f2):
ini= f1 / fin= f2
f1 => <>f2 / ~f1 => ~<>f2
[]~(f1 & f2)

Concur(f1,f2,f3):
ini= f1 / fin= f2 | f3
f1 => <>f2 & <>f3 / ~f1 => ~<>f2 & ~<>f3
[]~(f1 & (f2 | f3))

Branch(f1,f2,f3):
ini= f1 / fin= (f2 & ~f3) | (~f2 & f3)
f1 => (<>f2 & ~<>f3) | (~<>f2 & <>f3)
~f1 => ~<>(f2 | f3)
[]~(f2 & f3) / []~((f1 & f2) | (f1 & f3))
"""


def test_formula_parse_print_roundtrip():
    f = patgen.parse_formula("f1 => <>f2 & <>f3")
    assert str(f) == "f1 => <>f2 & <>f3"
    assert patgen.parse_formula(str(f)) == f
    assert f.atoms() == {"f1", "f2", "f3"}
    assert not f.is_propositional()
    with pytest.raises(patgen.ParseError):
        patgen.parse_formula("a &")


def test_library_parsing_and_instantiation():
    lib = patgen.parse_pattern_library(LIBRARY)
    assert len(lib) == 3
    assert "Seq" in lib and "Nope" not in lib
    seq = lib.at("Seq")
    assert seq.arity == 2
    assert str(seq.ini) == "f1"
    assert seq.role_of("f2") == patgen.ArgRole.Fin

    actuals = [patgen.parse_prop_expr("a"), patgen.parse_prop_expr("b")]
    instance = patgen.instantiate(seq, actuals)
    assert [str(f) for f in instance.formulas] == [
        "a => <>b",
        "~a => ~<>b",
        "[]~(a & b)",
    ]
    assert str(instance.fin) == "b"


def test_workflow_labeling_modes():
    w = patgen.parse_workflow("Seq(a,Seq(ParalSplit(b,c,d),Synchron(e,f,g)))")
    labeled = patgen.label_expression(w)
    assert (
        labeled.to_string()
        == "Seq(1]a,Seq(2]ParalSplit(3]b,c,d[3),Synchron(3]e,f,g[3)[2)[1)"
    )
    assert labeled.max_label == 3
    assert labeled.stripped() == str(w)

    scanned = patgen.label_expression(w, patgen.LabelingMode.ScanCounter)
    assert scanned.max_label == 4


def test_generation_golden():
    lib = patgen.parse_pattern_library(LIBRARY)
    spec = patgen.generate(patgen.parse_workflow("Branch(a,b,c)"), lib)
    assert [str(f) for f in spec.formulas] == [
        "a => (<>b & ~<>c) | (~<>b & <>c)",
        "~a => ~<>(b | c)",
        "[]~(b & c)",
        "[]~((a & b) | (a & c))",
    ]
    assert len(spec) == 4
    assert spec.provenance[0].pattern == "Branch"
    assert spec.provenance[0].path == []
    assert spec.provenance[0].combination == {}


def test_consolidated_expression():
    lib = patgen.parse_pattern_library(LIBRARY)
    w = patgen.parse_workflow("Concur(a,Seq(b,Concur(c,d,e)),f)")
    fin = patgen.consolidated_expression(w, patgen.ExprSide.Fin, lib)
    assert str(fin) == "(d | e) | f"
    ini = patgen.consolidated_expression(w, patgen.ExprSide.Ini, lib)
    assert str(ini) == "a"


def test_validation_findings():
    lib = patgen.parse_pattern_library(LIBRARY)
    findings = patgen.validate(patgen.parse_workflow("Foo(a,b)"), lib)
    assert len(findings) == 1
    assert findings[0].severity == "error"
    assert "unknown pattern 'Foo'" in findings[0].message
    assert patgen.has_errors(findings)
    with pytest.raises(patgen.ValidationError):
        patgen.generate(patgen.parse_workflow("Foo(a,b)"), lib)


def test_model_evaluation():
    model = patgen.LassoModel([{"a"}], [{"b"}])
    assert len(model) == 2
    assert model.to_string() == "prefix: {a} | loop: {b}"
    assert patgen.eval_at(patgen.parse_formula("<>b"), model, 0)
    assert not patgen.eval_at(patgen.parse_formula("[]b"), model, 0)
    assert patgen.eval_at(patgen.parse_formula("[]b"), model, 1)


def test_satisfiability_checking():
    sat = patgen.check_sat([patgen.parse_formula("a => <>b")])
    assert sat.verdict == "satisfiable"
    assert sat.is_satisfiable()
    assert sat.witness.to_string() == "prefix: | loop: {}"

    unsat = patgen.check_sat(
        [patgen.parse_formula("<>a"), patgen.parse_formula("[]~a")],
        max_prefix=4,
        max_loop=2,
    )
    assert unsat.verdict == "unsatisfiable"
    assert unsat.exhaustive
    assert unsat.witness is None
    assert unsat.bounds == (4, 2)

    assert patgen.completeness_threshold(2) == (16, 4)
    with pytest.raises(ValueError):
        patgen.check_sat([])


def test_pattern_consistency():
    lib = patgen.parse_pattern_library(LIBRARY)
    result = patgen.check_pattern(lib.at("Concur"))
    assert result.is_satisfiable()
    assert result.witness.to_string() == "prefix: | loop: {f1} {f2,f3}"

    # The ini => <>fin transition duplicates the first basic formula and is
    # deduplicated away, keeping the first occurrence.
    obligations = patgen.consistency_obligations(lib.at("Seq"))
    assert [str(f) for f in obligations] == [
        "f1 => <>f2",
        "~f1 => ~<>f2",
        "[]~(f1 & f2)",
        "<>f1",
        "<>f2",
    ]


def test_end_to_end_specification_check():
    lib = patgen.parse_pattern_library(LIBRARY)
    spec = patgen.generate(patgen.parse_workflow("Concur(Seq(a,b),c,d)"), lib)
    assert len(spec) == 9
    result = patgen.check_specification(spec)
    assert result.is_satisfiable()
    assert result.witness == patgen.LassoModel([], [set()])
