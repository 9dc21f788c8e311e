"""Formula-level translations between the calculi."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .axioms import EMPTY, AxiomSet, fresh_name, fresh_suffix
from .const import CLASS_DT, CLASS_LK, CLASS_NDT, DEFAULT_HEIGHT_CONSTANT
from .exceptions import PreconditionError
from .formula import And, Dec, Ext, Formula, Lit, Or, big_and, big_or, classify, map_leaves
from .logutil import get_logger

logger = get_logger(__file__)

TERM = "term"
CLAUSE = "clause"


def conj(ps: Sequence[Lit]) -> Formula:
    """``Conj(p) = p`` and ``Conj(p, ps) = (p ? p : Conj(ps))``."""
    if not ps:
        raise PreconditionError("Conj needs at least one literal")
    out: Formula = ps[-1]
    for p in reversed(ps[:-1]):
        out = Dec(p, p, out)
    return out


def disj(ps: Sequence[Lit]) -> Formula:
    """``Disj(p) = p`` and ``Disj(p, ps) = (Disj(ps) ? p : p)``."""
    if not ps:
        raise PreconditionError("Disj needs at least one literal")
    out: Formula = ps[-1]
    for p in reversed(ps[:-1]):
        out = Dec(out, p, p)
    return out


@dataclass(frozen=True)
class TermClause:
    literals: Tuple[Lit, ...]
    kind: str = TERM

    def __post_init__(self):
        if not self.literals:
            raise PreconditionError(f"empty {self.kind}")

    def formula(self) -> Formula:
        return big_and(self.literals) if self.kind == TERM else big_or(self.literals)

    def dt(self) -> Formula:
        """The DT rendering: ``Conj`` of a term, ``Disj`` of a clause."""
        return conj(self.literals) if self.kind == TERM else disj(self.literals)

    def prepend(self, p: Lit) -> "TermClause":
        return TermClause((p,) + self.literals, self.kind)

    def __str__(self):
        return str(self.formula())


def _require(f: Formula, cls: str, what: str) -> None:
    if cls not in classify(f):
        raise PreconditionError(f"{what} needs a {cls} formula, got {f}")


def tms(f: Formula) -> List[TermClause]:
    """DNF terms; ``Tms(B | C)`` is ``Tms(B)`` followed by ``Tms(C)``."""
    _require(f, CLASS_NDT, "Tms")
    memo: Dict[Formula, List[TermClause]] = {}

    def go(g: Formula) -> List[TermClause]:
        if g in memo:
            return memo[g]
        if isinstance(g, Lit):
            out = [TermClause((g,), TERM)]
        elif isinstance(g, Or):
            out = go(g.left) + go(g.right)
        else:
            neg = g.lit.complement()
            out = [t.prepend(neg) for t in go(g.low)] + [t.prepend(g.lit) for t in go(g.high)]
        memo[g] = out
        return out

    return go(f)


def cls(f: Formula) -> List[TermClause]:
    """CNF clauses of a DT formula."""
    _require(f, CLASS_DT, "Cls")
    memo: Dict[Formula, List[TermClause]] = {}

    def go(g: Formula) -> List[TermClause]:
        if g in memo:
            return memo[g]
        if isinstance(g, Lit):
            out = [TermClause((g,), CLAUSE)]
        else:
            neg = g.lit.complement()
            out = [c.prepend(g.lit) for c in go(g.low)] + [c.prepend(neg) for c in go(g.high)]
        memo[g] = out
        return out

    return go(f)


def dtms(f: Formula) -> List[Formula]:
    """Disjunction-free DT formulas whose disjunction is equivalent to ``f``."""
    _require(f, CLASS_NDT, "DTms")
    memo: Dict[Formula, List[Formula]] = {}

    def go(g: Formula) -> List[Formula]:
        if g in memo:
            return memo[g]
        if isinstance(g, Lit):
            out = [g]
        elif isinstance(g, Or):
            out = go(g.left) + go(g.right)
        else:
            neg = g.lit.complement()
            out = [Dec(neg, neg, d) for d in go(g.low)] + [Dec(g.lit, g.lit, d) for d in go(g.high)]
        memo[g] = out
        return out

    return go(f)


def nf(f: Formula) -> Formula:
    """Normal form: disjunctions are kept, every other subformula becomes ``OR DTms``."""
    if isinstance(f, Or):
        return Or(nf(f.left), nf(f.right))
    return big_or(dtms(f))


def is_normal_form(f: Formula) -> bool:
    if isinstance(f, Or):
        return is_normal_form(f.left) and is_normal_form(f.right)
    return CLASS_DT in classify(f)


# Substitution over extension axioms
@dataclass(frozen=True)
class Substitution:
    """``[0/b]`` or ``[1/b]`` together with the primed names it gives extension variables."""

    mode: str
    b: Formula
    mapping: Dict[str, str]

    def leaf(self, g: Formula) -> Formula:
        if isinstance(g, Ext):
            return Ext(self.mapping[g.name])
        return Dec(self.b, g, g) if self.mode == "zero" else Dec(g, g, self.b)

    def __call__(self, f: Formula) -> Formula:
        return map_leaves(f, self.leaf)


def make_substitution(f: Formula, axioms: AxiomSet, mode: str, b: Formula) -> Tuple[Substitution, AxiomSet]:
    """The substitution for ``f`` and the primed axioms it needs."""
    if mode not in ("zero", "one"):
        raise PreconditionError(f"substitution mode must be 'zero' or 'one', got {mode!r}")
    suffix = fresh_suffix(mode, b)
    names = axioms.dependencies(f.ext_names)
    sub = Substitution(mode, b, {name: fresh_name(name, suffix) for name in names})
    primed = AxiomSet(tuple((sub.mapping[n], sub(axioms.definition(n))) for n in names))
    return sub, primed


def substitute_axioms(f: Formula, axioms: AxiomSet, mode: str, b: Formula) -> Tuple[Formula, AxiomSet]:
    """``f[0/b]`` or ``f[1/b]`` with primed copies of the extension axioms it uses.

    Every ``e`` reachable from ``f`` gets a copy ``e'`` defined by its body with
    leaves substituted and extension leaves primed. The result carries the primed
    axioms after the original ones.
    """
    sub, primed = make_substitution(f, axioms, mode, b)
    base = axioms.closure([f, b])
    return sub(f), base.union(primed)


def _single_atom(b: Formula) -> None:
    if b.leaf_size != 1 or not b.is_atomic:
        raise PreconditionError(f"the second operand must be a literal or extension variable, got {b}")


def and_bp(a: Formula, b: Formula, axioms: AxiomSet = EMPTY) -> Tuple[Formula, AxiomSet]:
    """``And(a, b) = a[1/b]``."""
    _single_atom(b)
    return substitute_axioms(a, axioms, "one", b)


def or_bp(a: Formula, b: Formula, axioms: AxiomSet = EMPTY) -> Tuple[Formula, AxiomSet]:
    """``Or(a, b) = a[0/b]``."""
    _single_atom(b)
    return substitute_axioms(a, axioms, "zero", b)


# Boolean formulas to eDT
def height_bound(f: Formula, constant: int = DEFAULT_HEIGHT_CONSTANT) -> int:
    return int(constant * math.log2(max(f.size, 2)) + constant)


def dt_name(f: Formula) -> str:
    return fresh_name("dt", fresh_suffix("dt", f))


class DtTranslation:
    """Shared ``Dt`` translation for a family of Boolean formulas.

    ``Dt(p) = p``; a conjunction or disjunction becomes a new extension variable
    defined through ``And``/``Or`` of the translations of its operands, so one
    formula always gets one variable.
    """

    def __init__(self, height_constant: int = DEFAULT_HEIGHT_CONSTANT):
        self.height_constant = height_constant
        self.axioms = EMPTY
        self._memo: Dict[Formula, Formula] = {}
        # extension variable -> (connective, operand translations)
        self.parts: Dict[str, Tuple[type, Formula, Formula]] = {}

    def check_height(self, f: Formula) -> None:
        if f.height > height_bound(f, self.height_constant):
            raise PreconditionError(
                f"height {f.height} exceeds {height_bound(f, self.height_constant)} for a formula of size {f.size}"
            )

    def __call__(self, f: Formula) -> Formula:
        if CLASS_LK not in classify(f):
            raise PreconditionError(f"Dt needs a Boolean formula, got {f}")
        self.check_height(f)
        return self._translate(f)

    def _translate(self, f: Formula) -> Formula:
        if f in self._memo:
            return self._memo[f]
        if isinstance(f, Lit):
            out: Formula = f
        else:
            left = self._translate(f.left)
            right = self._translate(f.right)
            mode = "one" if isinstance(f, And) else "zero"
            body, axioms = substitute_axioms(left, self.axioms, mode, right)
            name = dt_name(f)
            self.axioms = self.axioms.union(axioms).define(name, body)
            self.parts[name] = (type(f), left, right)
            out = Ext(name)
        self._memo[f] = out
        return out


def dt_of_boolean(f: Formula, height_constant: int = DEFAULT_HEIGHT_CONSTANT) -> Tuple[Formula, AxiomSet]:
    translation = DtTranslation(height_constant)
    out = translation(f)
    return out, translation.axioms.closure([out])
