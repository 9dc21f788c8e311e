import pytest

from dtproof.axioms import EMPTY, AxiomSet, fresh_suffix, rename_extvars
from dtproof.exceptions import AxiomError
from dtproof.formula import Dec, Ext, Lit, Or
from dtproof.semantics import equivalent

p, q, r = Lit("p"), Lit("q"), Lit("r")

AXIOMS = AxiomSet.parse("$a := (p ? q : r)\n$b := ($a ? p : q)\n$c := (r | p)\n")


def test_parse_and_format():
    assert AXIOMS.names == ["a", "b", "c"]
    assert AXIOMS.definition("b") == Dec(Ext("a"), p, q)
    assert "a" in AXIOMS and "z" not in AXIOMS
    assert AxiomSet.parse(AXIOMS.format()) == AXIOMS
    assert len(EMPTY) == 0


def test_stratification_is_enforced():
    with pytest.raises(AxiomError):
        AxiomSet.parse("$a := ($b ? p : q)\n$b := p\n")
    with pytest.raises(AxiomError):
        AxiomSet.parse("$a := p\n$a := q\n")
    with pytest.raises(AxiomError):
        AXIOMS.definition("z")


def test_dependencies_and_closure():
    assert AXIOMS.dependencies(["b"]) == ["a", "b"]
    assert AXIOMS.closure([Or(Ext("b"), p)]).names == ["a", "b"]
    assert AXIOMS.closure([p]).names == []


def test_union():
    merged = AXIOMS.union(AxiomSet.parse("$a := (p ? q : r)\n$c := (r | p)\n$d := $c\n"))
    assert merged.names == ["a", "b", "c", "d"]
    with pytest.raises(AxiomError):
        AXIOMS | AxiomSet.parse("$a := p\n")


def test_define_may_refer_to_earlier_names():
    extended = AXIOMS.define("e", Or(Ext("b"), Ext("a")))
    assert extended.names == ["a", "b", "c", "e"]
    assert extended.definition("e") == Or(Ext("b"), Ext("a"))
    with pytest.raises(AxiomError):
        AXIOMS.define("a", p)
    with pytest.raises(AxiomError):
        EMPTY.define("e", Ext("a"))


def test_sizes():
    assert AXIOMS.leaf_size == 2 + 2 + 2
    assert AXIOMS.size == (1 + 4) + (1 + 4) + (1 + 3)


def test_renaming_copies_definitions():
    suffix = fresh_suffix("test", "b")
    assert suffix == fresh_suffix("test", "b")
    renamed, new = rename_extvars(Ext("b"), AXIOMS, suffix)
    assert renamed == Ext(f"b.{suffix}")
    assert new.names == [f"a.{suffix}", f"b.{suffix}"]
    assert equivalent(Ext("b"), renamed, AXIOMS, new)
