import pytest
from hypothesis import given, settings

from conftest import boolean_formulas, ndt_formulas
from dtproof.exceptions import FormulaSyntaxError
from dtproof.formula import ONE, ZERO, And, Dec, Ext, Lit, Or
from dtproof.syntax import parse_axiom_lines, parse_cedent, parse_formula, parse_sequent_parts

p, q, r = Lit("p"), Lit("q"), Lit("r")


def test_decision_nodes():
    f = parse_formula("(q ? p : r)")
    assert f == Dec(q, p, r)
    assert str(f) == "(q ? p : r)"
    assert parse_formula("((p ? ~q : r) ? s : $e)") == Dec(Dec(p, Lit("q", False), r), Lit("s"), Ext("e"))


def test_chains_associate_to_the_right():
    assert parse_formula("(p | q | r)") == Or(p, Or(q, r))
    assert parse_formula("(p & (q | r))") == And(p, Or(q, r))
    assert parse_formula("((p))") == p


def test_constants():
    assert parse_formula("0") == ZERO
    assert parse_formula("1") == ONE
    assert parse_formula("(0 ? x : 1)") == Dec(ZERO, Lit("x"), ONE)
    for text in ("0", "1", "(0 ? z : 1)", "((0 ? y : $e31) ? x : 1)"):
        assert str(parse_formula(text)) == text


@pytest.mark.parametrize(
    "text",
    ["(p | q & r)", "(p ? $e : q)", "(p ? q)", "p q", "", "(p |", "p @ q"],
)
def test_rejects(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text)


def test_error_position():
    with pytest.raises(FormulaSyntaxError) as err:
        parse_formula("(p | q & r)")
    assert err.value.position == 7
    assert "position 7" in str(err.value)


def test_cedents_and_sequents():
    assert parse_cedent("p, (q | r)") == [p, Or(q, r)]
    assert parse_cedent("") == []
    assert parse_sequent_parts("|- p, ~p") == ([], [p, Lit("p", False)])
    assert parse_sequent_parts("p, q |-") == ([p, q], [])
    with pytest.raises(FormulaSyntaxError):
        parse_sequent_parts("p, q")


def test_axiom_lines():
    text = "# header\n$e1 := (p ? q : r)\n\n$e2 := ($e1 | p)  # trailing\n"
    assert parse_axiom_lines(text) == [("e1", Dec(p, q, r)), ("e2", Or(Ext("e1"), p))]
    with pytest.raises(FormulaSyntaxError):
        parse_axiom_lines("e1 = p")


@given(ndt_formulas)
@settings(max_examples=100)
def test_printing_reparses_ndt(f):
    assert parse_formula(str(f)) == f


@given(boolean_formulas)
@settings(max_examples=100)
def test_printing_reparses_boolean(f):
    assert parse_formula(str(f)) == f
