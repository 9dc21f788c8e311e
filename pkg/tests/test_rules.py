import pytest

from dtproof.axioms import AxiomSet
from dtproof.exceptions import RuleError
from dtproof.formula import And, Dec, Ext, Lit, Or
from dtproof.rules import arity, conclude, is_axiom, is_extension_axiom, premise_shapes
from dtproof.sequent import Sequent

p, q, r = Lit("p"), Lit("q"), Lit("r")
np = p.complement()
S = Sequent.parse


@pytest.mark.parametrize("text", ["p |- p", "p, ~p |-", "|- ~p, p"])
def test_initial_sequents(text):
    assert is_axiom(S(text))


@pytest.mark.parametrize("text", ["p |- q", "p, p |-", "(p | q) |- (p | q)", "p, q |- p"])
def test_not_initial(text):
    assert not is_axiom(S(text))


def test_extension_axioms():
    axioms = AxiomSet.parse("$e := (p ? q : r)")
    assert is_extension_axiom(S("$e |- (p ? q : r)"), axioms)
    assert is_extension_axiom(S("(p ? q : r) |- $e"), axioms)
    assert not is_extension_axiom(S("$e |- p"), axioms)


def test_shapes():
    f = Dec(q, p, r)
    assert premise_shapes("dec-l", f) == [((q,), (p,)), ((p, r), ())]
    assert premise_shapes("dec-r", f) == [((), (q, p)), ((p,), (r,))]
    assert premise_shapes("cut", q) == [((), (q,)), ((q,), ())]
    assert arity("dec-l") == 2 and arity("or-r") == 1 and arity("ax") == 0
    with pytest.raises(RuleError):
        premise_shapes("or-l", f)


def test_conclusions():
    f = Dec(q, p, r)
    assert conclude("dec-l", [S("q |- p, r"), S("p, r |- r")], f, AxiomSet()) == S("(q ? p : r) |- r")
    assert conclude("dec-r", [S("q |- q, p"), S("p, q |- r")], f, AxiomSet()) == S("q |- (q ? p : r)")
    assert conclude("cut", [S("|- p, q"), S("p |- q")], p, AxiomSet()) == S("|- q")
    assert conclude("or-r", [S("|- p, q")], Or(p, q), AxiomSet()) == S("|- (p | q)")
    assert conclude("and-l", [S("p, q |-")], And(p, q), AxiomSet()) == S("(p & q) |-")
    assert conclude("w-l", [S("p |- p")], q, AxiomSet()) == S("p, q |- p")
    assert conclude("c-r", [S("|- p, p")], p, AxiomSet()) == S("|- p")
    assert conclude("ax", [], None, AxiomSet(), stated=S("|- p, ~p")) == S("|- p, ~p")


def test_side_cedents_must_agree():
    with pytest.raises(RuleError):
        conclude("cut", [S("|- p, q"), S("p |- r")], p, AxiomSet())
    with pytest.raises(RuleError):
        conclude("c-l", [S("p |-")], p, AxiomSet())
    with pytest.raises(RuleError):
        conclude("ax", [], None, AxiomSet(), stated=S("p |- q"))
    with pytest.raises(RuleError):
        conclude("ext", [], None, AxiomSet(), stated=S("$e |- p"))
    with pytest.raises(RuleError):
        conclude("w-r", [S("p |- p")], None, AxiomSet())


def test_or_left_and_right_shapes():
    f = Or(p, np)
    assert premise_shapes("or-l", f) == [((p,), ()), ((np,), ())]
    assert premise_shapes("and-r", And(p, Ext("e"))) == [((), (p,)), ((), (Ext("e"),))]
