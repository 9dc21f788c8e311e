"""Truth semantics and the brute-force oracle.

Evaluation of a single assignment follows the truth definition directly. The
oracle evaluates every formula once over all assignments at the same time,
representing a column of the truth table as a Python integer whose bit ``k``
holds the value under the ``k``-th assignment in lexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from .axioms import EMPTY, AxiomSet
from .const import CONST_VAR, DEFAULT_MAX_VARS
from .exceptions import AxiomError, EvaluationError, VariableBoundError
from .formula import Dec, Ext, Formula, Lit, Or
from .logutil import get_logger
from .sequent import Sequent

logger = get_logger(__file__)

Assignment = Mapping[str, int]


def _ext_values(axioms: AxiomSet, names: Iterable[str], value) -> Dict[str, object]:
    out: Dict[str, object] = {}
    for name in axioms.dependencies(names):
        out[name] = value(axioms.definition(name), out)
    return out


def eval_formula(f: Formula, assignment: Assignment, axioms: AxiomSet = EMPTY) -> int:
    """Value of ``f``; extension variables take the value of their definitions."""
    for name in f.ext_names:
        if name not in axioms:
            raise AxiomError(f"${name} has no extension axiom")

    def value(g: Formula, ext: Dict[str, object]) -> int:
        memo: Dict[Formula, int] = {}

        def go(h: Formula) -> int:
            if h in memo:
                return memo[h]
            if isinstance(h, Lit):
                if h.var in assignment:
                    bit = int(assignment[h.var])
                elif h.var == CONST_VAR:
                    bit = 0
                else:
                    raise EvaluationError(f"variable {h.var} is unassigned")
                out = bit if h.positive else 1 - bit
            elif isinstance(h, Ext):
                out = ext[h.name]
            elif isinstance(h, Dec):
                out = go(h.high) if go(h.lit) else go(h.low)
            elif isinstance(h, Or):
                out = go(h.left) or go(h.right)
            else:
                out = go(h.left) and go(h.right)
            memo[h] = out
            return out

        return go(g)

    ext = _ext_values(axioms, f.ext_names, value)
    return value(f, ext)


def sequent_truth(s: Sequent, assignment: Assignment, axioms: AxiomSet = EMPTY) -> int:
    if any(eval_formula(f, assignment, axioms) == 0 for f in s.antecedent):
        return 1
    return int(any(eval_formula(f, assignment, axioms) == 1 for f in s.succedent))


class TruthTable:
    """All assignments to ``variables`` at once, first variable most significant."""

    def __init__(self, variables: Sequence[str], axioms: AxiomSet = EMPTY):
        self.variables = list(variables)
        self.axioms = axioms
        n = len(self.variables)
        self.rows = 1 << n
        self.full = (1 << self.rows) - 1
        self._columns: Dict[str, int] = {}
        for i, var in enumerate(self.variables):
            half = 1 << (n - 1 - i)
            block = ((1 << half) - 1) << half
            period = 2 * half
            repeat = ((1 << (period * (self.rows // period))) - 1) // ((1 << period) - 1)
            self._columns[var] = block * repeat
        self._ext: Dict[str, int] = {}
        self._memo: Dict[Formula, int] = {}

    def column(self, f: Formula) -> int:
        missing = f.ext_names - self._ext.keys()
        if missing:
            for name in self.axioms.dependencies(missing):
                if name not in self._ext:
                    self._ext[name] = self._column(self.axioms.definition(name))
        return self._column(f)

    def _column(self, f: Formula) -> int:
        stack = [f]
        memo = self._memo
        while stack:
            g = stack[-1]
            if g in memo:
                stack.pop()
                continue
            pending = [c for c in g.children() if c not in memo]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            memo[g] = self._node(g)
        return memo[f]

    def _node(self, g: Formula) -> int:
        memo = self._memo
        if isinstance(g, Lit):
            return self._literal(g)
        if isinstance(g, Ext):
            try:
                return self._ext[g.name]
            except KeyError:
                raise AxiomError(f"${g.name} has no extension axiom") from None
        if isinstance(g, Dec):
            p = self._literal(g.lit)
            return (memo[g.low] & ~p & self.full) | (memo[g.high] & p)
        if isinstance(g, Or):
            return memo[g.left] | memo[g.right]
        return memo[g.left] & memo[g.right]

    def _literal(self, p: Lit) -> int:
        if p.var in self._columns:
            col = self._columns[p.var]
        elif p.var == CONST_VAR:
            col = 0
        else:
            raise EvaluationError(f"variable {p.var} is unassigned")
        return col if p.positive else self.full & ~col

    def sequent_column(self, s: Sequent) -> int:
        out = 0
        for f in s.antecedent:
            out |= self.full & ~self.column(f)
        for f in s.succedent:
            out |= self.column(f)
        return out

    def assignment(self, row: int) -> Dict[str, int]:
        n = len(self.variables)
        return {var: (row >> (n - 1 - i)) & 1 for i, var in enumerate(self.variables)}


@dataclass(frozen=True)
class Validity:
    valid: bool
    counterexample: Optional[Dict[str, int]] = None

    def __bool__(self):
        return self.valid


def oracle_variables(formulas: Iterable[Formula], axioms: AxiomSet) -> List[str]:
    formulas = list(formulas)
    names = set()
    out = set()
    for f in formulas:
        names |= f.ext_names
        out |= f.variables
    for name in axioms.dependencies(names):
        out |= axioms.definition(name).variables
    out.discard(CONST_VAR)
    return sorted(out)


def _table(formulas: Iterable[Formula], axioms: AxiomSet, max_vars: int) -> TruthTable:
    variables = oracle_variables(formulas, axioms)
    if len(variables) > max_vars:
        raise VariableBoundError(len(variables), max_vars)
    return TruthTable(variables, axioms)


def validity(s: Sequent, axioms: AxiomSet = EMPTY, max_vars: int = DEFAULT_MAX_VARS) -> Validity:
    """Exhaustive check; the counterexample is the least falsifying assignment."""
    table = _table(s.formulas(), axioms, max_vars)
    falsified = table.full & ~table.sequent_column(s)
    if not falsified:
        return Validity(True)
    # bit k is the k-th assignment in lexicographic order
    row = (falsified & -falsified).bit_length() - 1
    logger.debug("%s falsified by row %d of %d", s, row, table.rows)
    return Validity(False, table.assignment(row))


def is_valid(s: Sequent, axioms: AxiomSet = EMPTY, max_vars: int = DEFAULT_MAX_VARS) -> bool:
    return validity(s, axioms, max_vars).valid


def equivalent(
    f: Formula,
    g: Formula,
    axf: AxiomSet = EMPTY,
    axg: AxiomSet = EMPTY,
    max_vars: int = DEFAULT_MAX_VARS,
) -> bool:
    axioms = axf.union(axg)
    table = _table([f, g], axioms, max_vars)
    return table.column(f) == table.column(g)
