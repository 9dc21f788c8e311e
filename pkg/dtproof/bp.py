"""Branching programs and their extension-axiom formulas.

A program is a dag of test nodes, 0/1 sinks and (for nondeterministic programs)
disjunction nodes, with a unique source. Test nodes go to ``high`` when their
literal is true, like the decision node ``(low ? p : high)``.

File format, one declaration per line (``#`` starts a comment)::

    node <id> test <literal> low=<id> high=<id>
    node <id> or <id> <id> ...
    node <id> sink <0|1>
    source <id>
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .axioms import EMPTY, AxiomSet
from .const import CONST_VAR, DEFAULT_TREE_CAP
from .exceptions import BranchingProgramError, EvaluationError, SizeCapExceeded
from .formula import ONE, ZERO, And, Dec, Ext, Formula, Lit, big_or, constant
from .logutil import get_logger
from .semantics import Assignment
from .syntax import parse_formula

logger = get_logger(__file__)

NODE_RE = re.compile(r"node\s+(?P<id>\w+)\s+(?P<kind>test|or|sink)\s+(?P<rest>.*)")
TEST_RE = re.compile(r"(?P<lit>~?\w+)\s+low=(?P<low>\w+)\s+high=(?P<high>\w+)")
SOURCE_RE = re.compile(r"source\s+(?P<id>\w+)")


@dataclass(frozen=True)
class Sink:
    bit: int


@dataclass(frozen=True)
class Test:
    lit: Lit
    low: int
    high: int


@dataclass(frozen=True)
class OrNode:
    children: Tuple[int, ...]


Node = Union[Sink, Test, OrNode]


def successors(node: Node) -> Tuple[int, ...]:
    if isinstance(node, Test):
        return (node.low, node.high)
    if isinstance(node, OrNode):
        return node.children
    return ()


@dataclass(frozen=True)
class BranchingProgram:
    nodes: Tuple[Node, ...]
    source: int
    names: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if not self.names:
            object.__setattr__(self, "names", tuple(f"n{k}" for k in range(len(self.nodes))))
        if len(self.names) != len(self.nodes):
            raise BranchingProgramError("one name per node is required")
        if not 0 <= self.source < len(self.nodes):
            raise BranchingProgramError(f"source {self.source} is not a node")
        for k, node in enumerate(self.nodes):
            if isinstance(node, Sink) and node.bit not in (0, 1):
                raise BranchingProgramError(f"sink {self.names[k]} is labelled {node.bit}")
            if isinstance(node, OrNode) and not node.children:
                raise BranchingProgramError(f"or-node {self.names[k]} has no children")
            for j in successors(node):
                if not 0 <= j < len(self.nodes):
                    raise BranchingProgramError(f"node {self.names[k]} points to a missing node {j}")
        if not nx.is_directed_acyclic_graph(self.digraph):
            raise BranchingProgramError("the program has a cycle")
        sources = [k for k, d in self.digraph.in_degree() if d == 0]
        if sources != [self.source]:
            shown = ", ".join(self.names[k] for k in sources)
            raise BranchingProgramError(f"the program needs the unique source {self.names[self.source]}, found {shown}")

    @cached_property
    def digraph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(range(len(self.nodes)))
        for k, node in enumerate(self.nodes):
            g.add_edges_from((k, j) for j in successors(node))
        return g

    def __len__(self):
        return len(self.nodes)

    @property
    def deterministic(self) -> bool:
        return not any(isinstance(node, OrNode) for node in self.nodes)

    @property
    def variables(self) -> frozenset:
        return frozenset(n.lit.var for n in self.nodes if isinstance(n, Test)) - {CONST_VAR}

    def bottom_up(self) -> List[int]:
        """Nodes with every successor before its predecessors."""
        return list(reversed(list(nx.lexicographical_topological_sort(self.digraph))))


def _require_deterministic(*programs: BranchingProgram) -> None:
    for g in programs:
        if not g.deterministic:
            raise BranchingProgramError("disjunction nodes are not supported here")


def eval_bp(g: BranchingProgram, assignment: Assignment) -> int:
    """1 when some path from the source under ``assignment`` ends in the 1-sink."""
    accept: Dict[int, int] = {}
    for k in g.bottom_up():
        node = g.nodes[k]
        if isinstance(node, Sink):
            accept[k] = node.bit
        elif isinstance(node, OrNode):
            accept[k] = int(any(accept[j] for j in node.children))
        else:
            var = node.lit.var
            if var in assignment:
                bit = int(assignment[var])
            elif var == CONST_VAR:
                bit = 0
            else:
                raise EvaluationError(f"variable {var} is unassigned")
            value = bit if node.lit.positive else 1 - bit
            accept[k] = accept[node.high if value else node.low]
    return accept[g.source]


# Formulas with extension axioms
def ext_name(g: BranchingProgram, k: int) -> str:
    return f"e{g.names[k]}"


def bp_to_edt(g: BranchingProgram) -> Tuple[Formula, AxiomSet]:
    """An eDT formula (eNDT with disjunction nodes) with one extension variable per inner node.

    The source node is written out as the formula itself; sinks become the 0/1
    constants.
    """
    refs: Dict[int, Formula] = {}
    bodies: Dict[int, Formula] = {}
    for k in g.bottom_up():
        node = g.nodes[k]
        if isinstance(node, Sink):
            refs[k] = constant(node.bit)
            continue
        if isinstance(node, Test):
            body: Formula = Dec(refs[node.low], node.lit, refs[node.high])
        else:
            body = big_or([refs[j] for j in node.children])
        bodies[k] = body
        refs[k] = Ext(ext_name(g, k))
    if isinstance(g.nodes[g.source], Sink):
        return refs[g.source], EMPTY
    entries = tuple((ext_name(g, k), bodies[k]) for k in g.bottom_up() if k in bodies and k != g.source)
    out = bodies[g.source]
    logger.debug("compiled %d nodes into %s with %d axioms", len(g), out, len(entries))
    return out, AxiomSet(entries)


def edt_to_bp(f: Formula, axioms: AxiomSet = EMPTY) -> BranchingProgram:
    """A program with one node per distinct subformula; extension variables share their definition's node."""
    nodes: List[Node] = []
    index: Dict[Formula, int] = {}
    sinks: Dict[int, int] = {}

    def sink(bit: int) -> int:
        if bit not in sinks:
            nodes.append(Sink(bit))
            sinks[bit] = len(nodes) - 1
        return sinks[bit]

    # iterative post-order; definitions of extension variables are visited in place
    stack: List[Tuple[Formula, bool]] = [(f, False)]
    while stack:
        g, expanded = stack.pop()
        if g in index:
            continue
        if g == ZERO or g == ONE:
            index[g] = sink(int(g == ONE))
            continue
        if isinstance(g, Lit):
            if g.var == CONST_VAR:
                index[g] = sink(0 if g.positive else 1)
                continue
            nodes.append(Test(g, sink(0), sink(1)))
            index[g] = len(nodes) - 1
            continue
        if isinstance(g, And):
            raise BranchingProgramError(f"conjunctions have no branching program node: {g}")
        children = (axioms.definition(g.name),) if isinstance(g, Ext) else g.children()
        if not expanded:
            stack.append((g, True))
            stack.extend((c, False) for c in reversed(children) if c not in index)
            continue
        if isinstance(g, Ext):
            index[g] = index[children[0]]
        elif isinstance(g, Dec):
            nodes.append(Test(g.lit, index[g.low], index[g.high]))
            index[g] = len(nodes) - 1
        else:
            nodes.append(OrNode((index[g.left], index[g.right])))
            index[g] = len(nodes) - 1
    return _reachable(nodes, index[f])


def _reachable(nodes: Sequence[Node], source: int) -> BranchingProgram:
    """Keep the nodes reachable from ``source``, renumbered in discovery order."""
    order: List[int] = []
    seen = {source}
    queue = deque([source])
    while queue:
        k = queue.popleft()
        order.append(k)
        for j in successors(nodes[k]):
            if j not in seen:
                seen.add(j)
                queue.append(j)
    new = {old: i for i, old in enumerate(order)}
    out: List[Node] = []
    for old in order:
        node = nodes[old]
        if isinstance(node, Test):
            node = Test(node.lit, new[node.low], new[node.high])
        elif isinstance(node, OrNode):
            node = OrNode(tuple(new[j] for j in node.children))
        out.append(node)
    return BranchingProgram(tuple(out), 0)


def permute(g: BranchingProgram, order: Sequence[int]) -> BranchingProgram:
    """The same program with node ``k`` moved to position ``order[k]``."""
    if sorted(order) != list(range(len(g))):
        raise BranchingProgramError("not a permutation of the nodes")
    out: List[Optional[Node]] = [None] * len(g)
    names: List[str] = [""] * len(g)
    for k, node in enumerate(g.nodes):
        if isinstance(node, Test):
            node = Test(node.lit, order[node.low], order[node.high])
        elif isinstance(node, OrNode):
            node = OrNode(tuple(order[j] for j in node.children))
        out[order[k]] = node
        names[order[k]] = g.names[k]
    return BranchingProgram(tuple(out), order[g.source], tuple(names))


# Comparison
def _label(node: Node) -> object:
    return node.bit if isinstance(node, Sink) else node.lit


def _product(a: BranchingProgram, b: BranchingProgram) -> Tuple[Optional[Tuple[int, ...]], Dict[Tuple[int, int], Tuple[int, ...]]]:
    """Breadth-first search over node pairs reached by the same bit path.

    Paths pick a branch at every test independently, so a variable may be read
    with both values along one path. Returns a distinguishing path, if any, and
    the reached pairs with the first path reaching each.
    """
    _require_deterministic(a, b)
    start = (a.source, b.source)
    reached: Dict[Tuple[int, int], Tuple[int, ...]] = {start: ()}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        u, v = a.nodes[pair[0]], b.nodes[pair[1]]
        path = reached[pair]
        if _label(u) != _label(v):
            return path, reached
        if isinstance(u, Sink):
            continue
        for bit, nxt in ((0, (u.low, v.low)), (1, (u.high, v.high))):
            if nxt not in reached:
                reached[nxt] = path + (bit,)
                queue.append(nxt)
    return None, reached


def distinguishing_path(a: BranchingProgram, b: BranchingProgram) -> Optional[Tuple[int, ...]]:
    """The first branch sequence (0 low, 1 high) on which the two programs disagree."""
    return _product(a, b)[0]


def bisimilar(a: BranchingProgram, b: BranchingProgram) -> bool:
    return distinguishing_path(a, b) is None


def isomorphic(a: BranchingProgram, b: BranchingProgram) -> bool:
    """Bisimilar with the reached pairs forming a bijection between the nodes."""
    path, reached = _product(a, b)
    if path is not None:
        return False
    left: Dict[int, int] = {}
    right: Dict[int, int] = {}
    for u, v in reached:
        if left.setdefault(u, v) != v or right.setdefault(v, u) != u:
            return False
    return len(left) == len(a) and len(right) == len(b)


def is_obdd(g: BranchingProgram, order: Sequence[str]) -> bool:
    """Variables are tested in a subsequence of ``order`` along every path."""
    _require_deterministic(g)
    rank = {var: k for k, var in enumerate(order)}
    for node in g.nodes:
        if not isinstance(node, Test):
            continue
        if node.lit.var not in rank:
            return False
        for j in successors(node):
            child = g.nodes[j]
            if isinstance(child, Test) and rank.get(child.lit.var, -1) <= rank[node.lit.var]:
                return False
    return True


def unroll(g: BranchingProgram, cap: int = DEFAULT_TREE_CAP) -> BranchingProgram:
    """The tree of all paths: every node gets one copy per path reaching it."""
    out: List[Node] = []
    names: List[str] = []

    def copy(k: int) -> int:
        if len(out) >= cap:
            raise SizeCapExceeded(cap)
        index = len(out)
        out.append(g.nodes[k])
        names.append(f"{g.names[k]}_{index}")
        return index

    root = copy(g.source)
    stack = [(root, g.source)]
    while stack:
        new, old = stack.pop()
        node = g.nodes[old]
        if isinstance(node, Test):
            low, high = copy(node.low), copy(node.high)
            out[new] = Test(node.lit, low, high)
            stack.extend([(low, node.low), (high, node.high)])
        elif isinstance(node, OrNode):
            kids = tuple(copy(j) for j in node.children)
            out[new] = OrNode(kids)
            stack.extend(zip(kids, node.children))
    logger.debug("unrolled %d nodes into %d", len(g), len(out))
    return BranchingProgram(tuple(out), root, tuple(names))


# Text formats
def read_bp(text: str) -> BranchingProgram:
    raw: Dict[str, Tuple[str, object, int]] = {}
    order: List[str] = []
    source: Optional[str] = None
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        match = SOURCE_RE.fullmatch(line)
        if match:
            if source is not None:
                raise BranchingProgramError(f"line {number}: second source declaration")
            source = match.group("id")
            continue
        match = NODE_RE.fullmatch(line)
        if not match:
            raise BranchingProgramError(f"line {number}: cannot read {line!r}")
        name, kind, rest = match.group("id"), match.group("kind"), match.group("rest").strip()
        if name in raw:
            raise BranchingProgramError(f"line {number}: node {name} is declared twice")
        if kind == "sink":
            if rest not in ("0", "1"):
                raise BranchingProgramError(f"line {number}: sinks are labelled 0 or 1")
            raw[name] = (kind, int(rest), number)
        elif kind == "test":
            test = TEST_RE.fullmatch(rest)
            if not test:
                raise BranchingProgramError(f"line {number}: expected '<literal> low=<id> high=<id>'")
            raw[name] = (kind, (test.group("lit"), test.group("low"), test.group("high")), number)
        else:
            raw[name] = (kind, tuple(rest.split()), number)
        order.append(name)
    if source is None:
        raise BranchingProgramError("no source declaration")
    index = {name: k for k, name in enumerate(order)}

    def ref(name: str, number: int) -> int:
        if name not in index:
            raise BranchingProgramError(f"line {number}: unknown node {name}")
        return index[name]

    nodes: List[Node] = []
    for name in order:
        kind, data, number = raw[name]
        if kind == "sink":
            nodes.append(Sink(data))
        elif kind == "test":
            text_lit, low, high = data
            lit = parse_formula(text_lit)
            if not isinstance(lit, Lit):
                raise BranchingProgramError(f"line {number}: {text_lit} is not a literal")
            nodes.append(Test(lit, ref(low, number), ref(high, number)))
        else:
            nodes.append(OrNode(tuple(ref(j, number) for j in data)))
    return BranchingProgram(tuple(nodes), ref(source, 0), tuple(order))


def write_bp(g: BranchingProgram) -> str:
    lines = []
    for name, node in zip(g.names, g.nodes):
        if isinstance(node, Sink):
            lines.append(f"node {name} sink {node.bit}")
        elif isinstance(node, Test):
            lines.append(f"node {name} test {node.lit} low={g.names[node.low]} high={g.names[node.high]}")
        else:
            lines.append(f"node {name} or {' '.join(g.names[j] for j in node.children)}")
    lines.append(f"source {g.names[g.source]}")
    return "\n".join(lines) + "\n"


def to_dot(g: BranchingProgram) -> str:
    """Graphviz rendering; dashed edges are taken when the literal is false."""
    lines = ["digraph bp {"]
    for name, node in zip(g.names, g.nodes):
        if isinstance(node, Sink):
            lines.append(f'  "{name}" [shape=box, label="{node.bit}"];')
        elif isinstance(node, Test):
            lines.append(f'  "{name}" [label="{node.lit}"];')
            lines.append(f'  "{name}" -> "{g.names[node.low]}" [style=dashed];')
            lines.append(f'  "{name}" -> "{g.names[node.high]}";')
        else:
            lines.append(f'  "{name}" [label="or"];')
            lines.extend(f'  "{name}" -> "{g.names[j]}";' for j in node.children)
    lines.append("}")
    return "\n".join(lines) + "\n"
