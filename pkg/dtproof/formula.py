"""Formula AST shared by every calculus in the toolkit.

One tagged union covers literals, extension variables, decision nodes
``(A ? p : B)`` ("if p is false then A, else B"), disjunction and conjunction.
Which of them a calculus admits is decided by :func:`classify`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .const import (
    CLASS_DT,
    CLASS_EDT,
    CLASS_ELK,
    CLASS_ENDT,
    CLASS_LK,
    CLASS_NDT,
    CONST_VAR,
    SYSTEM_DLK,
    SYSTEM_ELDT,
    SYSTEM_ELNDT,
    SYSTEM_LDT,
    SYSTEM_LK,
    SYSTEM_LNDT,
    RULE_AND_LEFT,
    RULE_AND_RIGHT,
    RULE_DEC_LEFT,
    RULE_DEC_RIGHT,
    RULE_EXTENSION,
    RULE_OR_LEFT,
    RULE_OR_RIGHT,
)
from .exceptions import PreconditionError


class Formula:
    """Behaviour common to the five node types."""

    def _key(self) -> tuple:
        raise NotImplementedError

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self) or hash(self) != hash(other):
            return False
        return self._key() == other._key()

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}<{self}>"

    @cached_property
    def _hash(self) -> int:
        return hash((type(self).__name__,) + self._key())

    @property
    def is_atomic(self) -> bool:
        return not self.children()

    @cached_property
    def size(self) -> int:
        """Symbol count: atoms and internal nodes, extension names by length."""
        return self._own_size() + sum(c.size for c in self.children())

    def _own_size(self) -> int:
        return 1

    @cached_property
    def leaf_size(self) -> int:
        if self.is_atomic:
            return 1
        return sum(c.leaf_size for c in self.children())

    @cached_property
    def height(self) -> int:
        if self.is_atomic:
            return 0
        return 1 + max(c.height for c in self.children())

    @cached_property
    def variables(self) -> FrozenSet[str]:
        out = frozenset()
        for c in self.children():
            out |= c.variables
        return out

    @cached_property
    def ext_names(self) -> FrozenSet[str]:
        out = frozenset()
        for c in self.children():
            out |= c.ext_names
        return out

    @cached_property
    def connectives(self) -> FrozenSet[type]:
        out = frozenset() if self.is_atomic else frozenset({type(self)})
        for c in self.children():
            out |= c.connectives
        return out

    @cached_property
    def depth(self) -> int:
        """Alternation depth; decision nodes count one level each."""
        if self.is_atomic:
            return 0
        if isinstance(self, Dec):
            return 1 + max(self.low.depth, self.high.depth)
        return 1 + max(c.depth for c in _chain(self, type(self)))

    def subformulas(self) -> List["Formula"]:
        """Distinct subformulas in first-occurrence preorder."""
        seen: Dict[Formula, None] = {}
        stack = [self]
        while stack:
            f = stack.pop()
            if f in seen:
                continue
            seen[f] = None
            stack.extend(reversed(f.children()))
        return list(seen)


@dataclass(frozen=True, eq=False, repr=False)
class Lit(Formula):
    var: str
    positive: bool = True

    def _key(self):
        return (self.var, self.positive)

    def complement(self) -> "Lit":
        return Lit(self.var, not self.positive)

    @cached_property
    def variables(self):
        return frozenset({self.var})

    def __str__(self):
        return self.var if self.positive else f"~{self.var}"


@dataclass(frozen=True, eq=False, repr=False)
class Ext(Formula):
    name: str

    def _key(self):
        return (self.name,)

    def _own_size(self):
        return len(self.name)

    @cached_property
    def ext_names(self):
        return frozenset({self.name})

    def __str__(self):
        return f"${self.name}"


@dataclass(frozen=True, eq=False, repr=False)
class Dec(Formula):
    low: Formula
    lit: Lit
    high: Formula

    def __post_init__(self):
        if not isinstance(self.lit, Lit):
            raise PreconditionError(f"decision literal must be a literal, got {self.lit}")

    def _key(self):
        return (self.low, self.lit, self.high)

    def children(self):
        return (self.low, self.high)

    def _own_size(self):
        return 2

    @cached_property
    def variables(self):
        return self.low.variables | self.high.variables | {self.lit.var}

    def __str__(self):
        if self == ZERO:
            return "0"
        if self == ONE:
            return "1"
        return f"({self.low} ? {self.lit} : {self.high})"


@dataclass(frozen=True, eq=False, repr=False)
class Or(Formula):
    left: Formula
    right: Formula

    def _key(self):
        return (self.left, self.right)

    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return f"({self.left} | {self.right})"


@dataclass(frozen=True, eq=False, repr=False)
class And(Formula):
    left: Formula
    right: Formula

    def _key(self):
        return (self.left, self.right)

    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return f"({self.left} & {self.right})"


def _chain(f: Formula, kind: type) -> Iterator[Formula]:
    """Maximal operands of a nested same-connective chain."""
    stack = [f]
    while stack:
        g = stack.pop()
        if type(g) is kind:
            stack.extend(reversed(g.children()))
        else:
            yield g


def lit(var: str, positive: bool = True) -> Lit:
    return Lit(var, positive)


C = Lit(CONST_VAR)
ZERO: Formula = Dec(C, C, C.complement())
ONE: Formula = Dec(C.complement(), C, C)
TOP: Formula = Or(C, C.complement())
BOTTOM: Formula = And(C, C.complement())


def constant(bit: int) -> Formula:
    return ONE if bit else ZERO


# Big connectives
def big_or(items: Sequence[Formula]) -> Formula:
    """Right-associated disjunction of a nonempty sequence."""
    if not items:
        raise PreconditionError("empty disjunction")
    out = items[-1]
    for f in reversed(items[:-1]):
        out = Or(f, out)
    return out


def big_and(items: Sequence[Formula]) -> Formula:
    if not items:
        raise PreconditionError("empty conjunction")
    out = items[-1]
    for f in reversed(items[:-1]):
        out = And(f, out)
    return out


def balanced_or(items: Sequence[Formula]) -> Formula:
    if not items:
        raise PreconditionError("empty disjunction")
    if len(items) == 1:
        return items[0]
    mid = len(items) // 2
    return Or(balanced_or(items[:mid]), balanced_or(items[mid:]))


def or_leaves(f: Formula) -> List[Formula]:
    """Left-to-right operands of the maximal disjunction at the root."""
    return list(_chain(f, Or))


def and_leaves(f: Formula) -> List[Formula]:
    return list(_chain(f, And))


# Classification
_CLASS_OF_SYSTEM = {
    SYSTEM_LDT: CLASS_DT,
    SYSTEM_LNDT: CLASS_NDT,
    SYSTEM_ELDT: CLASS_EDT,
    SYSTEM_ELNDT: CLASS_ENDT,
    SYSTEM_LK: CLASS_LK,
    SYSTEM_DLK: CLASS_LK,
}

_SYSTEM_RE = re.compile(r"dLK\(?(\d+)\)?|(\d+)-?LK")


def classify(f: Formula) -> FrozenSet[str]:
    """Formula classes ``f`` is well formed in."""
    kinds = f.connectives
    has_ext = bool(f.ext_names)
    out = set()
    if And not in kinds:
        out.add(CLASS_ENDT)
        if Or not in kinds:
            out.add(CLASS_EDT)
        if not has_ext:
            out.add(CLASS_NDT)
            if Or not in kinds:
                out.add(CLASS_DT)
    if Dec not in kinds:
        out.add(CLASS_ELK)
        if not has_ext:
            out.add(CLASS_LK)
    return frozenset(out)


@dataclass(frozen=True)
class System:
    name: str
    depth: Optional[int] = None

    def __post_init__(self):
        if self.name not in _CLASS_OF_SYSTEM:
            raise PreconditionError(f"unknown system {self.name!r}")
        if self.name == SYSTEM_DLK and (self.depth is None or self.depth < 1):
            raise PreconditionError("depth-restricted LK needs a depth of at least 1")

    @classmethod
    def parse(cls, text: str) -> "System":
        text = text.strip()
        if text in _CLASS_OF_SYSTEM and text != SYSTEM_DLK:
            return cls(text)
        if match := _SYSTEM_RE.fullmatch(text):
            return cls(SYSTEM_DLK, int(match.group(1) or match.group(2)))
        raise PreconditionError(f"unknown system {text!r}")

    def __str__(self):
        if self.name == SYSTEM_DLK:
            return f"dLK({self.depth})"
        return self.name

    @property
    def formula_class(self) -> str:
        return _CLASS_OF_SYSTEM[self.name]

    @property
    def extended(self) -> bool:
        return self.name in (SYSTEM_ELDT, SYSTEM_ELNDT)

    @property
    def boolean(self) -> bool:
        return self.name in (SYSTEM_LK, SYSTEM_DLK)

    def admits(self, f: Formula) -> bool:
        if self.formula_class not in classify(f):
            return False
        return self.depth is None or f.depth <= self.depth

    def allows(self, rule: str) -> bool:
        if rule == RULE_EXTENSION:
            return self.extended
        if rule in (RULE_DEC_LEFT, RULE_DEC_RIGHT):
            return not self.boolean
        if rule in (RULE_OR_LEFT, RULE_OR_RIGHT):
            return self.name in (SYSTEM_LNDT, SYSTEM_ELNDT) or self.boolean
        if rule in (RULE_AND_LEFT, RULE_AND_RIGHT):
            return self.boolean
        return True


# Transformations
def negate_dt(f: Formula) -> Formula:
    """Complement of a DT formula: negate every leaf, keep decision literals."""
    if CLASS_DT not in classify(f):
        raise PreconditionError(f"negation is only defined on DT formulas, got {f}")
    memo: Dict[Formula, Formula] = {}

    def go(g: Formula) -> Formula:
        if g in memo:
            return memo[g]
        if isinstance(g, Lit):
            out = g.complement()
        else:
            out = Dec(go(g.low), g.lit, go(g.high))
        memo[g] = out
        return out

    return go(f)


def map_leaves(f: Formula, fn: Callable[[Formula], Formula]) -> Formula:
    """Rebuild ``f`` with every leaf (never a decision literal) replaced by ``fn``."""
    memo: Dict[Formula, Formula] = {}

    def go(g: Formula) -> Formula:
        if g in memo:
            return memo[g]
        if g.is_atomic:
            out = fn(g)
        elif isinstance(g, Dec):
            out = Dec(go(g.low), g.lit, go(g.high))
        else:
            out = type(g)(go(g.left), go(g.right))
        memo[g] = out
        return out

    return go(f)


def substitute_leaves(f: Formula, mode: str, b: Formula) -> Formula:
    """``f[0/b]`` (mode ``zero``) or ``f[1/b]`` (mode ``one``); extension leaves stay."""
    if mode not in ("zero", "one"):
        raise PreconditionError(f"substitution mode must be 'zero' or 'one', got {mode!r}")

    def leaf(g: Formula) -> Formula:
        if not isinstance(g, Lit):
            return g
        return Dec(b, g, g) if mode == "zero" else Dec(g, g, b)

    return map_leaves(f, leaf)


def rename_ext(f: Formula, mapping: Dict[str, str]) -> Formula:
    if not (f.ext_names & mapping.keys()):
        return f
    return map_leaves(f, lambda g: Ext(mapping.get(g.name, g.name)) if isinstance(g, Ext) else g)
