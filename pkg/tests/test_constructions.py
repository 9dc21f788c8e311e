import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import boolean_formulas, dt_formulas, edt_formulas, literal_lists, literals, ndt_formulas
from dtproof.axioms import EMPTY
from dtproof.const import CLASS_EDT
from dtproof.constructions import (
    CLAUSE,
    DtTranslation,
    TERM,
    TermClause,
    and_bp,
    cls,
    conj,
    disj,
    dt_of_boolean,
    dtms,
    is_normal_form,
    nf,
    or_bp,
    tms,
)
from dtproof.exceptions import PreconditionError
from dtproof.formula import And, Dec, Lit, Or, big_and, big_or, classify
from dtproof.semantics import equivalent

p, q, r = Lit("p"), Lit("q"), Lit("r")


def test_conj_and_disj_shapes():
    assert conj([p, q, r]) == Dec(p, p, Dec(q, q, r))
    assert disj([p, q]) == Dec(q, p, p)
    assert conj([p]) == p
    with pytest.raises(PreconditionError):
        disj([])


@given(literal_lists)
def test_conj_and_disj_meaning(ps):
    assert equivalent(conj(ps), big_and(ps))
    assert equivalent(disj(ps), big_or(ps))


def test_terms_of_a_decision():
    assert [t.literals for t in tms(Dec(q, p, r))] == [(p.complement(), q), (p, r)]
    assert [c.literals for c in cls(Dec(q, p, r))] == [(p, q), (p.complement(), r)]
    assert str(TermClause((p, q), CLAUSE)) == "(p | q)"
    with pytest.raises(PreconditionError):
        TermClause((), TERM)
    with pytest.raises(PreconditionError):
        cls(Or(p, q))


@given(ndt_formulas)
@settings(max_examples=100)
def test_terms_cover_the_formula(f):
    assert equivalent(big_or([t.formula() for t in tms(f)]), f)
    assert equivalent(big_or([t.dt() for t in tms(f)]), f)


@given(dt_formulas)
@settings(max_examples=100)
def test_clauses_cover_the_formula(f):
    assert equivalent(big_and([c.formula() for c in cls(f)]), f)


@given(ndt_formulas)
@settings(max_examples=100)
def test_normal_form(f):
    g = nf(f)
    assert is_normal_form(g)
    assert equivalent(f, g)
    assert len(dtms(f)) == len(tms(f))


@given(edt_formulas(), literals, st.sampled_from(["and", "or"]))
@settings(max_examples=100)
def test_and_or_by_substitution(case, b, which):
    a, axioms = case
    build, connective = (and_bp, And) if which == "and" else (or_bp, Or)
    g, out = build(a, b, axioms)
    assert CLASS_EDT in classify(g)
    assert all(CLASS_EDT in classify(body) for _, body in out)
    assert equivalent(g, connective(a, b), out, axioms)
    assert len(out) == 2 * len(axioms.dependencies(a.ext_names))


def test_second_operand_must_be_atomic():
    with pytest.raises(PreconditionError):
        and_bp(p, Dec(p, q, r))
    with pytest.raises(PreconditionError):
        or_bp(p, Or(q, r), EMPTY)


@given(boolean_formulas)
@settings(max_examples=100)
def test_dt_of_boolean(f):
    g, axioms = dt_of_boolean(f)
    assert CLASS_EDT in classify(g)
    assert all(CLASS_EDT in classify(body) for _, body in axioms)
    assert equivalent(f, g, EMPTY, axioms)


@pytest.mark.parametrize(
    "f",
    [And(p, And(q, r)), Or(And(p, q), Or(q, r)), And(Or(p, q), And(Or(q, r), p))],
)
def test_dt_of_nested_connectives(f):
    g, axioms = dt_of_boolean(f)
    assert len(axioms) >= 2
    assert equivalent(f, g, EMPTY, axioms)

@given(boolean_formulas)
@settings(max_examples=50)
def test_translation_is_shared(f):
    assume(not isinstance(f, Lit))
    translation = DtTranslation()
    g = translation(f)
    count = len(translation.axioms)
    assert translation(f) == g
    assert len(translation.axioms) == count
    assert g.name in translation.parts


def test_dt_of_boolean_height_bound():
    chain = big_or([Lit(f"x{k}") for k in range(20)])
    with pytest.raises(PreconditionError):
        dt_of_boolean(chain, height_constant=1)
    with pytest.raises(PreconditionError):
        dt_of_boolean(Dec(p, q, r))
