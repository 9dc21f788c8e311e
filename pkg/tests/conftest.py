"""Shared hypothesis strategies and fixtures."""
from __future__ import annotations

from itertools import product
from pathlib import Path
from typing import Dict, Iterator, List, Sequence

import pytest
from hypothesis import strategies as st

from dtproof.axioms import AxiomSet
from dtproof.bp import BranchingProgram, Sink, Test
from dtproof.formula import And, Dec, Ext, Lit, Or

DATA = Path(__file__).resolve().parent.parent / "dtproof" / "data"

VARIABLES = ("p", "q", "r", "s")


def assignments(variables: Sequence[str]) -> Iterator[Dict[str, int]]:
    variables = sorted(variables)
    for bits in product((0, 1), repeat=len(variables)):
        yield dict(zip(variables, bits))


literals = st.builds(Lit, st.sampled_from(VARIABLES), st.booleans())

dt_formulas = st.recursive(
    literals,
    lambda children: st.builds(Dec, children, literals, children),
    max_leaves=8,
)

ndt_formulas = st.recursive(
    literals,
    lambda children: st.one_of(
        st.builds(Dec, children, literals, children),
        st.builds(Or, children, children),
    ),
    max_leaves=8,
)

boolean_formulas = st.recursive(
    literals,
    lambda children: st.one_of(st.builds(Or, children, children), st.builds(And, children, children)),
    max_leaves=6,
)

literal_lists = st.lists(literals, min_size=1, max_size=3)


@st.composite
def edt_formulas(draw, max_axioms: int = 3, disjunctions: bool = False):
    """A formula with extension variables and the stratified axioms defining them."""
    entries: List = []
    names: List[str] = []
    for k in range(draw(st.integers(0, max_axioms))):
        atoms = literals if not names else st.one_of(literals, st.sampled_from(names).map(Ext))
        body = draw(_bodies(atoms, disjunctions))
        entries.append((f"e{k}", body))
        names.append(f"e{k}")
    atoms = literals if not names else st.one_of(literals, st.sampled_from(names).map(Ext))
    f = draw(_bodies(atoms, disjunctions))
    return f, AxiomSet(tuple(entries))


def _bodies(atoms, disjunctions: bool):
    def extend(children):
        dec = st.builds(Dec, children, literals, children)
        if disjunctions:
            return st.one_of(dec, st.builds(Or, children, children))
        return dec

    return st.recursive(atoms, extend, max_leaves=5)


@st.composite
def deterministic_bps(draw, max_tests: int = 6):
    """Programs whose test node ``k`` falls through to ``k + 1`` on its low edge."""
    n = draw(st.integers(1, max_tests))
    one = n + 1
    nodes: List = []
    for k in range(n):
        lit = draw(literals)
        low = k + 1
        high = one if k == n - 1 else draw(st.integers(k + 1, one))
        nodes.append(Test(lit, low, high))
    nodes.extend([Sink(0), Sink(1)])
    return BranchingProgram(tuple(nodes), 0)


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def majority_ax() -> AxiomSet:
    return AxiomSet.parse((DATA / "majority4.ax").read_text())


def majority(assignment: Dict[str, int]) -> int:
    return int(sum(assignment[v] for v in "wxyz") >= 2)


