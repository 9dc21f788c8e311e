import pytest
from hypothesis import given, settings, strategies as st

from conftest import assignments, dt_formulas, literals, ndt_formulas
from dtproof.const import CLASS_DT, CLASS_EDT, CLASS_ELK, CLASS_ENDT, CLASS_LK, CLASS_NDT
from dtproof.exceptions import PreconditionError
from dtproof.formula import (
    BOTTOM,
    ONE,
    TOP,
    ZERO,
    And,
    Dec,
    Ext,
    Lit,
    Or,
    System,
    balanced_or,
    big_and,
    big_or,
    classify,
    negate_dt,
    or_leaves,
    rename_ext,
    substitute_leaves,
)
from dtproof.semantics import eval_formula

p, q, r, s = Lit("p"), Lit("q"), Lit("r"), Lit("s")


def test_structural_equality_and_hash():
    assert Dec(p, q, r) == Dec(Lit("p"), Lit("q"), Lit("r"))
    assert hash(Or(p, q)) == hash(Or(p, q))
    assert Or(p, q) != And(p, q)
    assert p.complement().complement() == p


def test_decision_literal_must_be_a_literal():
    with pytest.raises(PreconditionError):
        Dec(p, Ext("e"), q)


def test_measures():
    f = Dec(p, q, Dec(p, r, s))
    assert p.size == 1
    assert Dec(p, q, r).size == 4
    assert Ext("e10").size == 3
    assert f.leaf_size == 3
    assert f.height == 2
    assert f.variables == {"p", "q", "r", "s"}
    assert f.subformulas() == [f, p, Dec(p, r, s), s]


def test_depth_counts_alternations():
    assert Or(Or(p, q), r).depth == 1
    assert And(p, Or(q, r)).depth == 2
    assert Dec(p, q, Dec(r, s, p)).depth == 2
    assert p.depth == 0


def test_constants_evaluate_without_assignment():
    assert eval_formula(ZERO, {}) == 0
    assert eval_formula(ONE, {}) == 1
    assert eval_formula(TOP, {}) == 1
    assert eval_formula(BOTTOM, {}) == 0


def test_big_connectives():
    assert big_or([p, q, r]) == Or(p, Or(q, r))
    assert big_and([p, q]) == And(p, q)
    assert or_leaves(big_or([p, q, r])) == [p, q, r]
    assert balanced_or([p, q, r, s]) == Or(Or(p, q), Or(r, s))
    with pytest.raises(PreconditionError):
        big_or([])


@pytest.mark.parametrize(
    "formula, expected",
    [
        (p, {CLASS_DT, CLASS_NDT, CLASS_EDT, CLASS_ENDT, CLASS_LK, CLASS_ELK}),
        (Dec(p, q, r), {CLASS_DT, CLASS_NDT, CLASS_EDT, CLASS_ENDT}),
        (Or(p, q), {CLASS_NDT, CLASS_ENDT, CLASS_LK, CLASS_ELK}),
        (And(p, q), {CLASS_LK, CLASS_ELK}),
        (Ext("e"), {CLASS_EDT, CLASS_ENDT, CLASS_ELK}),
        (Or(Ext("e"), Dec(p, q, r)), {CLASS_ENDT}),
    ],
)
def test_classify(formula, expected):
    assert classify(formula) == expected


def test_system_parse_and_rules():
    assert System.parse("dLK1") == System("dLK", 1)
    assert System.parse("2-LK") == System("dLK", 2)
    assert str(System.parse("dLK(3)")) == "dLK(3)"
    assert str(System.parse("eLNDT")) == "eLNDT"
    with pytest.raises(PreconditionError):
        System.parse("LJ")
    with pytest.raises(PreconditionError):
        System("dLK")

    ldt, lk, eldt = System("LDT"), System("LK"), System("eLDT")
    assert ldt.allows("dec-l") and not ldt.allows("or-l")
    assert lk.allows("and-r") and not lk.allows("dec-r")
    assert eldt.allows("ext") and not ldt.allows("ext")
    assert ldt.admits(Dec(p, q, r)) and not ldt.admits(Or(p, q))
    assert not System("dLK", 1).admits(And(p, Or(q, r)))
    assert System("dLK", 2).admits(And(p, Or(q, r)))


@given(dt_formulas)
@settings(max_examples=100)
def test_negation_complements(f):
    g = negate_dt(f)
    for a in assignments(f.variables):
        assert eval_formula(g, a) == 1 - eval_formula(f, a)


def test_negation_rejects_disjunctions():
    with pytest.raises(PreconditionError):
        negate_dt(Or(p, q))


@given(ndt_formulas, literals, st.sampled_from(["zero", "one"]))
@settings(max_examples=100)
def test_leaf_substitution_is_or_and(f, b, mode):
    g = substitute_leaves(f, mode, b)
    for a in assignments(f.variables | b.variables):
        x, y = eval_formula(f, a), eval_formula(b, a)
        assert eval_formula(g, a) == (x | y if mode == "zero" else x & y)


def test_rename_ext_keeps_decisions():
    f = Dec(Ext("a"), p, Or(Ext("b"), q))
    assert rename_ext(f, {"a": "a2"}) == Dec(Ext("a2"), p, Or(Ext("b"), q))
    assert rename_ext(f, {"z": "y"}) is f
