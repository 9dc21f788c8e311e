"""Stratified sets of extension axioms ``e <-> A``."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Tuple

from .const import FRESH_DIGEST_LENGTH
from .exceptions import AxiomError
from .formula import Formula, rename_ext
from .logutil import get_logger
from .syntax import parse_axiom_lines

logger = get_logger(__file__)


@dataclass(frozen=True)
class AxiomSet:
    """Ordered definitions; each body may only mention earlier names."""

    entries: Tuple[Tuple[str, Formula], ...] = ()
    _defs: Dict[str, Formula] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for name, body in self.entries:
            if name in self._defs:
                raise AxiomError(f"${name} is defined twice")
            unknown = body.ext_names - self._defs.keys()
            if unknown:
                raise AxiomError(
                    f"${name} refers to {', '.join(sorted('$' + u for u in unknown))} before their definition"
                )
            self._defs[name] = body

    @classmethod
    def parse(cls, text: str) -> "AxiomSet":
        return cls(tuple(parse_axiom_lines(text)))

    def format(self) -> str:
        return "".join(f"${name} := {body}\n" for name, body in self.entries)

    def __iter__(self) -> Iterator[Tuple[str, Formula]]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, name: str) -> bool:
        return name in self._defs

    @property
    def names(self) -> List[str]:
        return [name for name, _ in self.entries]

    def definition(self, name: str) -> Formula:
        try:
            return self._defs[name]
        except KeyError:
            raise AxiomError(f"${name} has no extension axiom") from None

    def is_body(self, f: Formula) -> bool:
        return f in self._bodies

    @cached_property
    def _bodies(self) -> frozenset:
        return frozenset(self._defs.values())

    @cached_property
    def leaf_size(self) -> int:
        return sum(body.leaf_size for _, body in self.entries)

    @cached_property
    def size(self) -> int:
        return sum(len(name) + body.size for name, body in self.entries)

    def dependencies(self, names: Iterable[str]) -> List[str]:
        """Names reachable from ``names`` through definitions, in axiom order."""
        needed = set()
        stack = list(names)
        while stack:
            name = stack.pop()
            if name in needed:
                continue
            needed.add(name)
            stack.extend(self.definition(name).ext_names)
        return [name for name, _ in self.entries if name in needed]

    def closure(self, formulas: Iterable[Formula]) -> "AxiomSet":
        names = set()
        for f in formulas:
            names |= f.ext_names
        keep = set(self.dependencies(names))
        return AxiomSet(tuple((n, b) for n, b in self.entries if n in keep))

    def variables(self) -> frozenset:
        out = frozenset()
        for _, body in self.entries:
            out |= body.variables
        return out

    def union(self, *others: "AxiomSet") -> "AxiomSet":
        """Merge keeping order; identical repeated definitions are tolerated."""
        merged: Dict[str, Formula] = dict(self._defs)
        entries = list(self.entries)
        for other in others:
            for name, body in other.entries:
                if name in merged:
                    if merged[name] != body:
                        raise AxiomError(f"${name} has two different definitions")
                    continue
                merged[name] = body
                entries.append((name, body))
        return AxiomSet(tuple(entries))

    def define(self, name: str, body: Formula) -> "AxiomSet":
        """This set with ``$name := body`` appended."""
        return AxiomSet(self.entries + ((name, body),))

    def __or__(self, other: "AxiomSet") -> "AxiomSet":
        return self.union(other)


EMPTY = AxiomSet()


def fresh_suffix(tag: str, *parts: object) -> str:
    """Short digest naming the construction that introduces new variables."""
    digest = hashlib.sha1("\x1f".join([tag, *map(str, parts)]).encode("utf-8"))
    return digest.hexdigest()[:FRESH_DIGEST_LENGTH]


def fresh_name(old: str, suffix: str) -> str:
    return f"{old}.{suffix}"


def rename_extvars(f: Formula, axioms: AxiomSet, suffix: str) -> Tuple[Formula, AxiomSet]:
    """Copy ``f`` and the axioms it depends on under names ``<old>.<suffix>``."""
    names = axioms.dependencies(f.ext_names)
    mapping = {name: fresh_name(name, suffix) for name in names}
    renamed = AxiomSet(tuple((mapping[n], rename_ext(axioms.definition(n), mapping)) for n in names))
    for new, body in renamed:
        if new in axioms and axioms.definition(new) != body:
            raise AxiomError(f"fresh name ${new} is already defined differently")
    logger.debug("renamed %d extension variables with suffix %s", len(mapping), suffix)
    return rename_ext(f, mapping), renamed
