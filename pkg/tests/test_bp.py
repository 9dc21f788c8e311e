import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import VARIABLES, assignments, deterministic_bps, majority
from dtproof.bp import (
    BranchingProgram,
    OrNode,
    Sink,
    Test,
    bisimilar,
    bp_to_edt,
    distinguishing_path,
    edt_to_bp,
    eval_bp,
    is_obdd,
    isomorphic,
    permute,
    read_bp,
    to_dot,
    unroll,
    write_bp,
)
from dtproof.exceptions import BranchingProgramError, SizeCapExceeded
from dtproof.formula import Dec, Ext, Lit
from dtproof.semantics import eval_formula


@pytest.fixture
def majority4(data_dir):
    return read_bp((data_dir / "majority4.bp").read_text())


def test_majority_program(majority4):
    assert len(majority4) == 8
    assert majority4.names[majority4.source] == "00"
    for a in assignments("wxyz"):
        assert eval_bp(majority4, a) == majority(a)


def test_majority_formula(majority4, majority_ax):
    f, axioms = bp_to_edt(majority4)
    assert f == Dec(Ext("e10"), Lit("w"), Ext("e11"))
    assert dict(axioms) == dict(majority_ax)
    assert isomorphic(edt_to_bp(f, axioms), majority4)


def test_obdd_order(majority4):
    assert is_obdd(majority4, "wxyz")
    assert not is_obdd(majority4, "zyxw")
    assert not is_obdd(majority4, "wxy")


def test_write_then_read(majority4):
    assert read_bp(write_bp(majority4)) == majority4
    dot = to_dot(majority4)
    assert dot.startswith("digraph bp {")
    assert '"00" -> "10" [style=dashed];' in dot


def test_distinguishing_path(majority4):
    flipped = list(majority4.nodes)
    flipped[5] = Test(Lit("z", False), 6, 7)
    other = BranchingProgram(tuple(flipped), majority4.source, majority4.names)
    path = distinguishing_path(majority4, other)
    # w low, x low, y high reaches the z test
    assert path == (0, 0, 1)
    assert not bisimilar(majority4, other)
    assert distinguishing_path(majority4, majority4) is None


@given(deterministic_bps())
@settings(max_examples=100)
def test_formula_agrees_with_program(g):
    f, axioms = bp_to_edt(g)
    for a in assignments(VARIABLES):
        assert eval_formula(f, a, axioms) == eval_bp(g, a)
    assert bisimilar(edt_to_bp(f, axioms), g)


@given(deterministic_bps())
@settings(max_examples=100)
def test_unrolling_is_bisimilar(g):
    tree = unroll(g)
    assert bisimilar(g, tree)
    assert len(tree) >= len(g)
    assert isomorphic(tree, unroll(tree))


@given(deterministic_bps(), st.data())
@settings(max_examples=100)
def test_permutation_is_isomorphic(g, data):
    order = data.draw(st.permutations(range(len(g))))
    h = permute(g, order)
    assert isomorphic(g, h)
    for a in assignments(VARIABLES):
        assert eval_bp(h, a) == eval_bp(g, a)


def test_unroll_cap(majority4):
    with pytest.raises(SizeCapExceeded):
        unroll(majority4, cap=5)


def test_disjunction_nodes():
    g = BranchingProgram((OrNode((1, 2)), Test(Lit("p"), 3, 4), Test(Lit("q"), 3, 4), Sink(0), Sink(1)), 0)
    assert not g.deterministic
    assert eval_bp(g, {"p": 0, "q": 1}) == 1
    assert eval_bp(g, {"p": 0, "q": 0}) == 0
    f, axioms = bp_to_edt(g)
    assert str(f) == "($en1 | $en2)"
    for a in assignments("pq"):
        assert eval_formula(f, a, axioms) == eval_bp(g, a)
    with pytest.raises(BranchingProgramError):
        bisimilar(g, g)
    with pytest.raises(BranchingProgramError):
        isomorphic(g, g)
    with pytest.raises(BranchingProgramError):
        is_obdd(g, "pq")
    tree = unroll(g)
    assert not tree.deterministic
    for a in assignments("pq"):
        assert eval_bp(tree, a) == eval_bp(g, a)


@pytest.mark.parametrize(
    "text",
    [
        "node a sink 1\n",
        "node a sink 1\nsource a\nsource a\n",
        "node a sink 2\nsource a\n",
        "node a sink 1\nnode a sink 0\nsource a\n",
        "node a test p low=b high=b\nsource a\n",
        "node a test p & q low=b high=b\nsource a\n",
        "node a test p low=b high=b\nnode b test q low=a high=a\nsource a\n",
        "node a sink 0\nnode b sink 1\nsource a\n",
        "gate a\nsource a\n",
        "node a or\nsource a\n",
    ],
)
def test_read_errors(text):
    with pytest.raises(BranchingProgramError):
        read_bp(text)


def test_permutation_must_cover_the_nodes(majority4):
    with pytest.raises(BranchingProgramError):
        permute(majority4, [0, 0, 1, 2, 3, 4, 5, 6])
