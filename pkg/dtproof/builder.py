"""Incremental proof construction.

Every construction in the toolkit writes its steps through a
:class:`ProofBuilder`. The builder computes conclusions with the same rule
schemas the checker uses, joins side cedents of binary rules by weakening, and
keeps tree proofs tree-shaped by copying a subderivation whenever it is used a
second time.
"""
from __future__ import annotations

from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence

from .axioms import EMPTY, AxiomSet
from .const import (
    DEFAULT_TREE_CAP,
    MODE_DAG,
    MODE_TREE,
    RULE_AND_LEFT,
    RULE_AND_RIGHT,
    RULE_AXIOM,
    RULE_CONTRACT_LEFT,
    RULE_CONTRACT_RIGHT,
    RULE_CUT,
    RULE_DEC_LEFT,
    RULE_DEC_RIGHT,
    RULE_EXTENSION,
    RULE_OR_LEFT,
    RULE_OR_RIGHT,
    RULE_WEAKEN_LEFT,
    RULE_WEAKEN_RIGHT,
)
from .exceptions import RuleError, SizeCapExceeded
from .formula import Formula, Lit, System
from .logutil import get_logger
from .proof import Proof, Step, compact
from .rules import conclude, premise_shapes
from .sequent import Sequent

logger = get_logger(__file__)


class ProofBuilder:
    def __init__(
        self,
        system: System,
        mode: str = MODE_DAG,
        axioms: AxiomSet = EMPTY,
        cap: int = DEFAULT_TREE_CAP,
    ):
        self.system = system
        self.mode = mode
        self.axioms = axioms
        self.cap = cap
        self.steps: List[Step] = []
        self.cache: Dict[object, int] = {}
        self._memo: Dict[tuple, int] = {}
        self._used: set = set()

    @property
    def tree(self) -> bool:
        return self.mode == MODE_TREE

    def sequent(self, i: int) -> Sequent:
        return self.steps[i].sequent

    def _append(self, step: Step) -> int:
        self.steps.append(step)
        if len(self.steps) > self.cap:
            raise SizeCapExceeded(self.cap)
        return len(self.steps) - 1

    def _copy(self, root: int) -> int:
        results: List[int] = []
        stack = [(root, False)]
        while stack:
            i, expanded = stack.pop()
            step = self.steps[i]
            if not expanded:
                stack.append((i, True))
                stack.extend((j, False) for j in reversed(step.premises))
                continue
            n = len(step.premises)
            premises = tuple(results[len(results) - n:]) if n else ()
            if n:
                del results[len(results) - n:]
            self._used.update(premises)
            results.append(self._append(Step(step.sequent, step.rule, premises, step.principal, step.note)))
        return results[0]

    def _claim(self, i: int) -> int:
        if not self.tree:
            return i
        if i in self._used:
            i = self._copy(i)
        self._used.add(i)
        return i

    def add(
        self,
        rule: str,
        premises: Sequence[int] = (),
        principal: Optional[Formula] = None,
        sequent: Optional[Sequent] = None,
        note: Optional[str] = None,
    ) -> int:
        if not self.system.allows(rule):
            raise RuleError(f"{rule} is not a rule of {self.system}")
        premises = tuple(premises)
        derived = conclude(rule, [self.sequent(j) for j in premises], principal, self.axioms, stated=sequent)
        key = (rule, premises, principal, derived)
        if not self.tree and key in self._memo:
            return self._memo[key]
        premises = tuple(self._claim(j) for j in premises)
        index = self._append(Step(derived, rule, premises, principal, note))
        if not self.tree:
            self._memo[key] = index
        return index

    def finish(self, root: Optional[int] = None) -> Proof:
        if root is None:
            root = len(self.steps) - 1
        proof = Proof(self.system, self.mode, tuple(self.steps[: root + 1]), self.axioms)
        out = compact(proof)
        logger.debug("finished %s %s proof with %d steps", self.system, self.mode, len(out.steps))
        return out

    def graft(self, proof: Proof) -> int:
        """Replay another proof's steps here; returns the index of its endsequent."""
        index: Dict[int, int] = {}
        for k, step in enumerate(proof.steps):
            index[k] = self.add(
                step.rule,
                [index[j] for j in step.premises],
                step.principal,
                step.sequent if not step.premises else None,
                step.note,
            )
        return index[len(proof.steps) - 1]

    # Initial sequents
    def axiom(self, left: Iterable[Formula] = (), right: Iterable[Formula] = ()) -> int:
        return self.add(RULE_AXIOM, sequent=Sequent.of(left, right))

    def identity_literal(self, p: Lit) -> int:
        return self.axiom([p], [p])

    def ext_axiom(self, left: Formula, right: Formula) -> int:
        return self.add(RULE_EXTENSION, sequent=Sequent.of([left], [right]))

    # Structural rules
    def weaken(self, i: int, left: Iterable[Formula] = (), right: Iterable[Formula] = ()) -> int:
        for f in left:
            i = self.add(RULE_WEAKEN_LEFT, [i], f)
        for f in right:
            i = self.add(RULE_WEAKEN_RIGHT, [i], f)
        return i

    def contract(self, i: int, left: Iterable[Formula] = (), right: Iterable[Formula] = ()) -> int:
        for f in left:
            i = self.add(RULE_CONTRACT_LEFT, [i], f)
        for f in right:
            i = self.add(RULE_CONTRACT_RIGHT, [i], f)
        return i

    def ensure(self, i: int, left: Iterable[Formula] = (), right: Iterable[Formula] = ()) -> int:
        """Weaken in whichever of the given occurrences ``i`` does not have yet."""
        s = self.sequent(i)
        missing_left = Counter(left) - s.left_counts
        missing_right = Counter(right) - s.right_counts
        return self.weaken(i, missing_left.elements(), missing_right.elements())

    def weaken_to(self, i: int, target: Sequent) -> int:
        current = self.sequent(i)
        if not current.is_sub(target):
            raise RuleError(f"cannot weaken {current} to {target}")
        missing = target.minus(current)
        return self.weaken(i, missing.antecedent, missing.succedent)

    def fit(self, i: int, target: Sequent) -> int:
        """Contract surplus copies, then weaken up to ``target``."""
        current = self.sequent(i)
        extra = current.minus(target)
        for f in extra.antecedent:
            if f not in target.left_counts:
                raise RuleError(f"{f} is not in {target}")
        for f in extra.succedent:
            if f not in target.right_counts:
                raise RuleError(f"{f} is not in {target}")
        i = self.contract(i, extra.antecedent, extra.succedent)
        return self.weaken_to(i, target)

    # Logical rules, side cedents joined by weakening
    def apply(self, rule: str, premises: Sequence[int], principal: Formula, note: Optional[str] = None) -> int:
        shapes = premise_shapes(rule, principal)
        if len(shapes) != len(premises):
            raise RuleError(f"{rule} takes {len(shapes)} premises, got {len(premises)}")
        premises = [self.ensure(j, left, right) for j, (left, right) in zip(premises, shapes)]
        contexts = [self.sequent(j).remove(left, right) for j, (left, right) in zip(premises, shapes)]
        joint = contexts[0]
        for c in contexts[1:]:
            joint = joint.join(c)
        fitted = [self.weaken_to(j, joint.add(left, right)) for j, (left, right) in zip(premises, shapes)]
        return self.add(rule, fitted, principal, note=note)

    def cut(self, left: int, right: int, f: Formula) -> int:
        return self.apply(RULE_CUT, [left, right], f)

    def dec_left(self, left: int, right: int, f: Formula) -> int:
        return self.apply(RULE_DEC_LEFT, [left, right], f)

    def dec_right(self, left: int, right: int, f: Formula) -> int:
        return self.apply(RULE_DEC_RIGHT, [left, right], f)

    def or_left(self, left: int, right: int, f: Formula) -> int:
        return self.apply(RULE_OR_LEFT, [left, right], f)

    def or_right(self, i: int, f: Formula) -> int:
        return self.apply(RULE_OR_RIGHT, [i], f)

    def and_left(self, i: int, f: Formula) -> int:
        return self.apply(RULE_AND_LEFT, [i], f)

    def and_right(self, left: int, right: int, f: Formula) -> int:
        return self.apply(RULE_AND_RIGHT, [left, right], f)
