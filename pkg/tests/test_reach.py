import pytest
from hypothesis import given, settings

from conftest import VARIABLES, assignments, edt_formulas, ndt_formulas
from dtproof.axioms import EMPTY
from dtproof.exceptions import PreconditionError
from dtproof.formula import TOP, And, Dec, Lit, Or
from dtproof.generators import prop_ndtnf
from dtproof.proof import check
from dtproof.reach import (
    SINK,
    ProofGraph,
    bfs_reaches,
    build_graph,
    build_proof_graph,
    reach_formula,
    reach_lemma_first,
    reach_lemma_prepend,
    split_point,
)
from dtproof.semantics import eval_formula, is_valid

p, q, r = Lit("p"), Lit("q"), Lit("r")


@pytest.mark.parametrize(
    "lo, hi, expected",
    [(0, 4, 2), (0, 1, None), (3, 8, 4), (0, 9, 8), (5, 7, 6), (6, 7, None)],
)
def test_split_point(lo, hi, expected):
    assert split_point(lo, hi) == expected


def test_graph_shape():
    f = Dec(q, p, r)
    g = build_graph([f])
    assert g.vertices[SINK] is None
    k = g.vertex(f)
    assert g.label(k, g.vertex(q)) == p.complement()
    assert g.label(k, g.vertex(r)) == p
    assert g.label(g.vertex(q), SINK) == q
    same = build_graph([Dec(q, p, q)])
    assert same.label(same.vertex(Dec(q, p, q)), same.vertex(q)) == Or(p.complement(), p)
    ors = build_graph([Or(p, q)])
    assert ors.label(ors.vertex(Or(p, q)), ors.vertex(p)) == TOP


def test_graph_rejections():
    with pytest.raises(PreconditionError):
        build_graph([And(p, q)])
    with pytest.raises(PreconditionError):
        ProofGraph([None, p, q], {(1, 2): TOP, (2, 1): TOP}, EMPTY)
    with pytest.raises(PreconditionError):
        build_graph([p]).vertex(q)


def test_ranks_decrease_along_edges():
    g = build_graph([Or(Dec(q, p, r), Dec(r, q, p))])
    for (u, v) in g.labels:
        assert g.rank[u] > g.rank[v]
    assert g.rank[SINK] == 0


@given(edt_formulas(disjunctions=True))
@settings(max_examples=60, deadline=None)
def test_search_agrees_with_the_formula(case):
    f, axioms = case
    g = build_graph([f], axioms)
    for a in assignments(VARIABLES):
        assert bfs_reaches(g, g.vertex(f), a) == bool(eval_formula(f, a, axioms))


@given(ndt_formulas)
@settings(max_examples=40, deadline=None)
def test_reach_formulas_agree_with_search(f):
    g = build_graph([f])
    bound = g.size_bound()
    for i in range(1, len(g)):
        reach = reach_formula(g, i)
        assert reach.size <= bound
        for a in assignments(VARIABLES):
            assert eval_formula(reach, a) == int(bfs_reaches(g, i, a))


@given(ndt_formulas)
@settings(max_examples=20, deadline=None)
def test_unfolding_lemmas(f):
    g = build_graph([f])
    for a in range(1, len(g)):
        proof = reach_lemma_first(g, a)
        assert check(proof).ok, check(proof).reason
        assert is_valid(proof.endsequent)
        for j in g.step_targets(a, SINK):
            proof = reach_lemma_prepend(g, a, j)
            assert check(proof).ok, check(proof).reason
            assert is_valid(proof.endsequent)


def test_lemma_preconditions():
    g = build_graph([Dec(q, p, r)])
    with pytest.raises(PreconditionError):
        reach_lemma_first(g, SINK)
    with pytest.raises(PreconditionError):
        reach_lemma_prepend(g, g.vertex(q), g.vertex(r))


def test_proof_graph_covers_every_formula():
    proof = prop_ndtnf(Or(Dec(q, p, r), q), "a", p, r)
    g = build_proof_graph(proof)
    for step in proof.steps:
        for f in step.sequent.formulas():
            assert g.vertices[g.vertex(f)] == f
