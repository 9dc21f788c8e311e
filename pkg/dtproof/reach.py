"""Reachability graphs of eLNDT proofs and their Boolean reachability formulas.

Every formula occurring in a proof (and every extension axiom body) is a vertex;
vertex 0 is the accepting sink. Edges carry Boolean labels: a decision node
``(A ? p : B)`` goes to ``A`` under ``~p`` and to ``B`` under ``p``, an extension
variable goes to its definition, a disjunction goes to both operands and a literal
``p`` goes to the sink under ``p``.

Vertices are ranked along a topological order, every edge going down in rank.
``Reach(a, b)`` splits the rank interval between ``b`` and ``a`` at the point of
largest power-of-two alignment and takes a disjunction over the edges crossing
it. Because that split point is the same for every sub-interval still containing
it, unfolding one step of a path keeps the disjuncts of the enclosing formula,
which is what the two lemma derivations below rely on.
"""
from __future__ import annotations

from collections import deque
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .axioms import EMPTY, AxiomSet
from .builder import ProofBuilder
from .const import CONST_VAR, MODE_DAG, SYSTEM_LK
from .exceptions import PreconditionError
from .formula import BOTTOM, TOP, Dec, Ext, Formula, Lit, Or, System, balanced_or, big_and
from .generators import identity
from .logutil import get_logger
from .proof import Proof
from .semantics import Assignment, eval_formula
from .sequent import Sequent

logger = get_logger(__file__)

SINK = 0

Edge = Tuple[int, int]


def split_point(lo: int, hi: int) -> Optional[int]:
    """The point of ``(lo, hi)`` divisible by the largest power of two, if any."""
    for k in range(hi.bit_length(), -1, -1):
        m = ((lo >> k) + 1) << k
        if m < hi:
            return m
    return None


class ProofGraph:
    """Labelled reachability graph with memoized ``Reach`` formulas."""

    def __init__(self, vertices: Sequence[Optional[Formula]], labels: Dict[Edge, Formula], axioms: AxiomSet):
        self.vertices = list(vertices)
        self.labels = dict(labels)
        self.axioms = axioms
        self.index: Dict[Formula, int] = {f: k for k, f in enumerate(self.vertices) if f is not None}
        self.digraph = nx.DiGraph()
        self.digraph.add_nodes_from(range(len(self.vertices)))
        self.digraph.add_edges_from(sorted(self.labels))
        if not nx.is_directed_acyclic_graph(self.digraph):
            raise PreconditionError("the reachability graph has a cycle")
        order = list(nx.lexicographical_topological_sort(self.digraph.reverse(copy=False)))
        self.rank = [0] * len(self.vertices)
        for position, v in enumerate(order):
            self.rank[v] = position
        self._below: Dict[int, frozenset] = {}
        self._pairs: Dict[Edge, List[Edge]] = {}
        self._reach: Dict[Edge, Formula] = {}

    def __len__(self):
        return len(self.vertices)

    def successors(self, v: int) -> List[int]:
        return sorted(self.digraph.successors(v))

    def label(self, a: int, b: int) -> Formula:
        return self.labels[(a, b)]

    def vertex(self, f: Formula) -> int:
        try:
            return self.index[f]
        except KeyError:
            raise PreconditionError(f"{f} is not a vertex of the graph") from None

    def reaches(self, a: int, b: int) -> bool:
        """Static reachability, ignoring labels."""
        if a == b:
            return True
        if a not in self._below:
            self._below[a] = frozenset(nx.descendants(self.digraph, a))
        return b in self._below[a]

    # Reach formulas
    def pairs(self, a: int, b: int) -> List[Edge]:
        """Edges a path from ``a`` to ``b`` may cross the split point on."""
        key = (a, b)
        if key in self._pairs:
            return self._pairs[key]
        hi, lo = self.rank[a], self.rank[b]
        if hi <= lo:
            out: List[Edge] = []
        else:
            c = split_point(lo, hi)
            if c is None:
                out = [(a, b)] if (a, b) in self.labels else []
            else:
                out = [
                    (u, v)
                    for (u, v) in self.labels
                    if c < self.rank[u] <= hi
                    and lo <= self.rank[v] <= c
                    and self.reaches(a, u)
                    and self.reaches(v, b)
                ]
                out.sort(key=lambda e: (self.rank[e[0]], self.rank[e[1]], e))
        self._pairs[key] = out
        return out

    def link_parts(self, a: int, u: int, v: int, b: int) -> List[Formula]:
        parts = []
        if u != a:
            parts.append(self.reach(a, u))
        parts.append(self.label(u, v))
        if v != b:
            parts.append(self.reach(v, b))
        return parts

    def link(self, a: int, u: int, v: int, b: int) -> Formula:
        return big_and(self.link_parts(a, u, v, b))

    def reach_items(self, a: int, b: int) -> List[Formula]:
        return [self.link(a, u, v, b) for (u, v) in self.pairs(a, b)]

    def reach(self, a: int, b: int = SINK) -> Formula:
        key = (a, b)
        if key not in self._reach:
            items = self.reach_items(a, b)
            self._reach[key] = balanced_or(items) if items else BOTTOM
        return self._reach[key]

    # One step of a path, unfolded at the start
    def step_targets(self, a: int, b: int) -> List[int]:
        return [j for j in self.successors(a) if self.reaches(j, b)]

    def step_items(self, a: int, b: int) -> List[Formula]:
        return [self.link(a, a, j, b) for j in self.step_targets(a, b)]

    def step(self, a: int, b: int = SINK) -> Formula:
        items = self.step_items(a, b)
        return balanced_or(items) if items else BOTTOM

    def size_bound(self) -> int:
        """Upper bound on the size of every ``Reach`` formula of this graph."""
        edges = max(len(self.labels), 1)
        label = max([f.size for f in self.labels.values()] + [BOTTOM.size])
        bound = label
        for _ in range(len(self.vertices).bit_length() + 1):
            bound = edges * (2 * bound + label + 2) + edges
        return bound


def build_graph(formulas: Iterable[Formula], axioms: AxiomSet = EMPTY) -> ProofGraph:
    """Graph over the subformulas of ``formulas`` and of the axioms they use.

    Vertices are numbered in first-occurrence order after the sink; axiom bodies
    follow the formulas.
    """
    vertices: List[Optional[Formula]] = [None]
    index: Dict[Formula, int] = {}

    def visit(f: Formula) -> None:
        for g in f.subformulas():
            if g not in index:
                index[g] = len(vertices)
                vertices.append(g)

    for f in formulas:
        visit(f)
    k = 1
    while k < len(vertices):
        g = vertices[k]
        if isinstance(g, Ext):
            visit(axioms.definition(g.name))
        k += 1

    labels: Dict[Edge, Formula] = {}
    for k, g in enumerate(vertices[1:], 1):
        if isinstance(g, Lit):
            labels[(k, SINK)] = g
        elif isinstance(g, Ext):
            labels[(k, index[axioms.definition(g.name)])] = TOP
        elif isinstance(g, Dec):
            low, high = index[g.low], index[g.high]
            neg = g.lit.complement()
            if low == high:
                labels[(k, low)] = Or(neg, g.lit)
            else:
                labels[(k, low)] = neg
                labels[(k, high)] = g.lit
        elif isinstance(g, Or):
            labels[(k, index[g.left])] = TOP
            labels[(k, index[g.right])] = TOP
        else:
            raise PreconditionError(f"conjunctions have no vertex in a reachability graph: {g}")
    graph = ProofGraph(vertices, labels, axioms)
    logger.debug("reachability graph: %d vertices, %d edges", len(vertices), len(labels))
    return graph


def build_proof_graph(proof: Proof) -> ProofGraph:
    formulas = [f for step in proof.steps for f in step.sequent.formulas()]
    return build_graph(formulas, proof.axioms)


def reach_formula(g: ProofGraph, i: int) -> Formula:
    """``Reach_i``: a Boolean formula true exactly when vertex ``i`` reaches the sink."""
    return g.reach(i, SINK)


def bfs_reaches(g: ProofGraph, i: int, assignment: Assignment) -> bool:
    """Breadth-first search through the edges whose labels hold under ``assignment``."""
    values = dict(assignment)
    values.setdefault(CONST_VAR, 0)
    seen = {i}
    queue = deque([i])
    while queue:
        v = queue.popleft()
        if v == SINK:
            return True
        for w in g.successors(v):
            if w not in seen and eval_formula(g.label(v, w), values):
                seen.add(w)
                queue.append(w)
    return False


# Derivations over balanced disjunctions and right-associated conjunctions
def assemble_or(pb: ProofBuilder, i: int, items: Sequence[Formula]) -> int:
    """Build ``balanced_or(items)`` in the succedent; missing operands are weakened in."""
    if len(items) == 1:
        return pb.ensure(i, right=[items[0]])
    mid = len(items) // 2
    i = assemble_or(pb, i, items[:mid])
    i = assemble_or(pb, i, items[mid:])
    return pb.or_right(i, balanced_or(items))


def cases_or(pb: ProofBuilder, items: Sequence[Formula], case: Callable[[int], int], offset: int = 0) -> int:
    """``or-l`` over ``balanced_or(items)``; ``case(k)`` handles the ``k``-th operand."""
    if len(items) == 1:
        return case(offset)
    mid = len(items) // 2
    left = cases_or(pb, items[:mid], case, offset)
    right = cases_or(pb, items[mid:], case, offset + mid)
    return pb.or_left(left, right, balanced_or(items))


def conjoin_left(pb: ProofBuilder, i: int, parts: Sequence[Formula]) -> int:
    for k in range(len(parts) - 2, -1, -1):
        i = pb.and_left(i, big_and(parts[k:]))
    return pb.ensure(i, left=[big_and(parts)])


def conjoin_right(pb: ProofBuilder, proofs: Sequence[int], parts: Sequence[Formula]) -> int:
    i = proofs[-1]
    for k in range(len(parts) - 2, -1, -1):
        i = pb.and_right(proofs[k], i, big_and(parts[k:]))
    return i


def bottom_left(pb: ProofBuilder) -> int:
    """``BOTTOM |-``."""
    c = Lit(CONST_VAR)
    return pb.and_left(pb.axiom(left=[c, c.complement()]), BOTTOM)


def top_right(pb: ProofBuilder) -> int:
    """``|- TOP``."""
    c = Lit(CONST_VAR)
    return pb.or_right(pb.axiom(right=[c, c.complement()]), TOP)


class ReachProver:
    """LK derivations of the one-step unfolding of ``Reach``.

    ``first(a, b)`` proves ``Reach(a, b) |- Step(a, b)`` and ``prepend(i, j, b)``
    proves ``phi(i, j), Reach(j, b) |- Reach(i, b)`` (without ``Reach(j, b)`` when
    ``j == b``). Together they give ``Reach(a, b) <-> OR_j (phi(a, j) & Reach(j, b))``.
    """

    def __init__(self, graph: ProofGraph, pb: ProofBuilder):
        self.graph = graph
        self.pb = pb

    def identity(self, f: Formula) -> int:
        return identity(self.pb, f)

    def first(self, a: int, b: int) -> int:
        key = ("reach-first", a, b)
        if key not in self.pb.cache:
            self.pb.cache[key] = self._first(a, b)
        return self.pb.cache[key]

    def prepend(self, i: int, j: int, b: int) -> int:
        key = ("reach-prepend", i, j, b)
        if key not in self.pb.cache:
            self.pb.cache[key] = self._prepend(i, j, b)
        return self.pb.cache[key]

    def _first(self, a: int, b: int) -> int:
        g, pb = self.graph, self.pb
        pairs = g.pairs(a, b)
        outer = g.step_items(a, b)
        if not pairs:
            return pb.ensure(bottom_left(pb), right=[g.step(a, b)])

        def case(k: int) -> int:
            u, v = pairs[k]
            parts = g.link_parts(a, u, v, b)
            if u == a:
                return assemble_or(pb, self.identity(big_and(parts)), outer)
            rest = parts[1:]
            targets = g.step_targets(a, u)

            def inner(m: int) -> int:
                j = targets[m]
                jparts = g.link_parts(j, u, v, b)
                i = conjoin_right(pb, [self.identity(x) for x in jparts], jparts)
                i = assemble_or(pb, i, g.reach_items(j, b))
                phi = g.label(a, j)
                i = conjoin_right(pb, [self.identity(phi), i], [phi, g.reach(j, b)])
                i = assemble_or(pb, i, outer)
                return conjoin_left(pb, i, g.link_parts(a, a, j, u))

            i = cases_or(pb, g.step_items(a, u), inner)
            i = pb.cut(self.first(a, u), i, g.step(a, u))
            return conjoin_left(pb, pb.ensure(i, left=rest), parts)

        return cases_or(pb, g.reach_items(a, b), case)

    def _prepend(self, i: int, j: int, b: int) -> int:
        g, pb = self.graph, self.pb
        phi = g.label(i, j)
        target_items = g.reach_items(i, b)
        c = split_point(g.rank[b], g.rank[i])
        if j == b or c is None or g.rank[j] <= c:
            parts = g.link_parts(i, i, j, b)
            k = conjoin_right(pb, [self.identity(x) for x in parts], parts)
            return assemble_or(pb, pb.ensure(k, left=parts), target_items)
        pairs = g.pairs(j, b)

        def case(k: int) -> int:
            u, v = pairs[k]
            parts = g.link_parts(j, u, v, b)
            rest = parts[1:] if u != j else parts
            head = self.prepend(i, j, u) if u != j else self.prepend(i, j, j)
            new_parts = g.link_parts(i, u, v, b)
            out = conjoin_right(pb, [head] + [self.identity(x) for x in new_parts[1:]], new_parts)
            out = assemble_or(pb, out, target_items)
            return conjoin_left(pb, pb.ensure(out, left=rest), parts)

        return pb.ensure(cases_or(pb, g.reach_items(j, b), case), left=[phi])


def _lk_builder() -> ProofBuilder:
    return ProofBuilder(System(SYSTEM_LK), MODE_DAG)


def reach_lemma_first(g: ProofGraph, a: int, b: int = SINK) -> Proof:
    """LK proof of ``Reach(a, b) |- OR_j (phi(a, j) & Reach(j, b))``."""
    if not g.reaches(a, b) or a == b:
        raise PreconditionError(f"vertex {a} does not reach {b}")
    pb = _lk_builder()
    root = ReachProver(g, pb).first(a, b)
    root = pb.fit(root, Sequent.of([g.reach(a, b)], [g.step(a, b)]))
    return pb.finish(root)


def reach_lemma_prepend(g: ProofGraph, i: int, j: int, b: int = SINK) -> Proof:
    """LK proof of ``phi(i, j) & Reach(j, b) |- Reach(i, b)`` for an edge ``(i, j)``."""
    if (i, j) not in g.labels or not g.reaches(j, b):
        raise PreconditionError(f"({i}, {j}) is not an edge on a path to {b}")
    pb = _lk_builder()
    root = ReachProver(g, pb).prepend(i, j, b)
    parts = g.link_parts(i, i, j, b)
    root = pb.fit(conjoin_left(pb, root, parts), Sequent.of([big_and(parts)], [g.reach(i, b)]))
    return pb.finish(root)
