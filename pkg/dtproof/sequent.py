"""Sequents over multisets of formulas."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Tuple

from .formula import Formula
from .syntax import parse_sequent_parts


@dataclass(frozen=True, eq=False)
class Sequent:
    """``antecedent |- succedent``; equality ignores order, keeps multiplicity."""

    antecedent: Tuple[Formula, ...] = ()
    succedent: Tuple[Formula, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(self.antecedent))
        object.__setattr__(self, "succedent", tuple(self.succedent))

    @classmethod
    def of(cls, left: Iterable[Formula] = (), right: Iterable[Formula] = ()) -> "Sequent":
        return cls(tuple(left), tuple(right))

    @classmethod
    def parse(cls, text: str) -> "Sequent":
        left, right = parse_sequent_parts(text)
        return cls(tuple(left), tuple(right))

    @cached_property
    def left_counts(self) -> Counter:
        return Counter(self.antecedent)

    @cached_property
    def right_counts(self) -> Counter:
        return Counter(self.succedent)

    @cached_property
    def _hash(self) -> int:
        return hash((frozenset(self.left_counts.items()), frozenset(self.right_counts.items())))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Sequent) or hash(self) != hash(other):
            return False
        return self.left_counts == other.left_counts and self.right_counts == other.right_counts

    def __str__(self):
        left = ", ".join(map(str, self.antecedent))
        right = ", ".join(map(str, self.succedent))
        return " ".join(part for part in (left, "|-", right) if part)

    def __repr__(self):
        return f"Sequent<{self}>"

    def formulas(self) -> Iterator[Formula]:
        yield from self.antecedent
        yield from self.succedent

    @cached_property
    def size(self) -> int:
        return sum(f.size for f in self.formulas())

    @cached_property
    def variables(self) -> frozenset:
        out = frozenset()
        for f in self.formulas():
            out |= f.variables
        return out

    def add(self, left: Iterable[Formula] = (), right: Iterable[Formula] = ()) -> "Sequent":
        return Sequent(self.antecedent + tuple(left), self.succedent + tuple(right))

    def contains(self, left: Iterable[Formula] = (), right: Iterable[Formula] = ()) -> bool:
        return not (Counter(left) - self.left_counts) and not (Counter(right) - self.right_counts)

    def remove(self, left: Iterable[Formula] = (), right: Iterable[Formula] = ()) -> "Sequent":
        """Drop one occurrence per listed formula; missing formulas raise KeyError."""
        return Sequent(_remove(self.antecedent, left), _remove(self.succedent, right))

    def is_sub(self, other: "Sequent") -> bool:
        """Every occurrence here also occurs in ``other``."""
        return not (self.left_counts - other.left_counts) and not (self.right_counts - other.right_counts)

    def join(self, other: "Sequent") -> "Sequent":
        """Smallest sequent containing both (multiset maximum per side)."""
        return Sequent(
            tuple((self.left_counts | other.left_counts).elements()),
            tuple((self.right_counts | other.right_counts).elements()),
        )

    def minus(self, other: "Sequent") -> "Sequent":
        return Sequent(
            tuple((self.left_counts - other.left_counts).elements()),
            tuple((self.right_counts - other.right_counts).elements()),
        )


def _remove(cedent: Tuple[Formula, ...], drop: Iterable[Formula]) -> Tuple[Formula, ...]:
    out = list(cedent)
    for f in drop:
        for i, g in enumerate(out):
            if g == f:
                del out[i]
                break
        else:
            raise KeyError(f)
    return tuple(out)
