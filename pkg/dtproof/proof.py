"""Proof objects, the rule-by-rule checker and size statistics."""
from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, replace
from typing import Dict, List, Optional, Tuple

from .axioms import EMPTY, AxiomSet
from .const import DEFAULT_TREE_CAP, MODE_DAG, MODE_TREE, RULE_CUT
from .exceptions import CheckFailure, RuleError, SizeCapExceeded
from .formula import Ext, Formula, Lit, System
from .logutil import TRACE, get_logger
from .rules import ALL_RULES, arity, conclude
from .sequent import Sequent

logger = get_logger(__file__)


@dataclass(frozen=True)
class Step:
    sequent: Sequent
    rule: str
    premises: Tuple[int, ...] = ()
    principal: Optional[Formula] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class Proof:
    system: System
    mode: str
    steps: Tuple[Step, ...]
    axioms: AxiomSet = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    @property
    def endsequent(self) -> Sequent:
        return self.steps[-1].sequent

    def __len__(self):
        return len(self.steps)

    def with_system(self, system: System, mode: Optional[str] = None) -> "Proof":
        return replace(self, system=system, mode=mode or self.mode)

    def premise_uses(self) -> Counter:
        uses: Counter = Counter()
        for step in self.steps:
            uses.update(step.premises)
        return uses


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    step: Optional[int] = None
    reason: str = ""

    def raise_for_failure(self) -> None:
        if not self.ok:
            raise CheckFailure(self.step, self.reason)


@dataclass(frozen=True)
class ProofStats:
    steps: int
    size: int
    is_tree: bool
    cut_count: int
    atomic_cut_count: int
    extension_cut_count: int
    max_formula_depth: int

    @property
    def cut_free(self) -> bool:
        return self.cut_count == 0

    @property
    def atomic_cuts_only(self) -> bool:
        return self.cut_count == self.atomic_cut_count

    @property
    def extension_cuts_only(self) -> bool:
        return self.cut_count == self.extension_cut_count

    def as_dict(self) -> Dict[str, object]:
        return asdict(self)


def check_step(proof: Proof, k: int) -> None:
    """Raise RuleError when step ``k`` does not follow from its premises."""
    step = proof.steps[k]
    system = proof.system
    if step.rule not in ALL_RULES:
        raise RuleError(f"unknown rule {step.rule!r}")
    if not system.allows(step.rule):
        raise RuleError(f"{step.rule} is not a rule of {system}")
    if len(step.premises) != arity(step.rule):
        raise RuleError(f"{step.rule} takes {arity(step.rule)} premises, got {len(step.premises)}")
    for j in step.premises:
        if not 0 <= j < k:
            raise RuleError(f"premise {j} does not precede step {k}")
    for f in step.sequent.formulas():
        if not system.admits(f):
            raise RuleError(f"{f} is not a formula of {system}")
        for name in f.ext_names:
            if name not in proof.axioms:
                raise RuleError(f"${name} has no extension axiom")
    if step.principal is not None and not system.admits(step.principal):
        raise RuleError(f"principal {step.principal} is not a formula of {system}")
    premises = [proof.steps[j].sequent for j in step.premises]
    derived = conclude(step.rule, premises, step.principal, proof.axioms, stated=step.sequent)
    if derived != step.sequent:
        raise RuleError(f"{step.rule} yields {derived}, not {step.sequent}")


def check(proof: Proof) -> CheckReport:
    """Check every step; the lowest failing index is reported."""
    if not proof.steps:
        return CheckReport(False, None, "empty proof")
    if proof.mode not in (MODE_TREE, MODE_DAG):
        return CheckReport(False, None, f"unknown mode {proof.mode!r}")
    used = set()
    for k, step in enumerate(proof.steps):
        try:
            check_step(proof, k)
        except RuleError as err:
            logger.debug("step %d rejected: %s", k, err.msg)
            return CheckReport(False, k, err.msg)
        if proof.mode == MODE_TREE:
            for j in step.premises:
                if j in used:
                    return CheckReport(False, k, f"step {j} used twice in a tree proof")
                used.add(j)
        logger.log(TRACE, "step %d ok: %s", k, step.sequent)
    return CheckReport(True)


def is_extension_cut(f: Formula, axioms: AxiomSet) -> bool:
    return isinstance(f, Ext) or axioms.is_body(f)


def stats(proof: Proof) -> ProofStats:
    cuts = [s.principal for s in proof.steps if s.rule == RULE_CUT]
    depth = 0
    for step in proof.steps:
        for f in step.sequent.formulas():
            depth = max(depth, f.depth)
    return ProofStats(
        steps=len(proof.steps),
        size=sum(step.sequent.size for step in proof.steps),
        is_tree=all(n <= 1 for n in proof.premise_uses().values()),
        cut_count=len(cuts),
        atomic_cut_count=sum(isinstance(f, Lit) for f in cuts),
        extension_cut_count=sum(is_extension_cut(f, proof.axioms) for f in cuts),
        max_formula_depth=depth,
    )


def to_tree(proof: Proof, cap: int = DEFAULT_TREE_CAP) -> Proof:
    """Duplicate shared subderivations until every step is used at most once."""
    steps: List[Step] = []
    results: List[int] = []
    stack = [(len(proof.steps) - 1, False)]
    while stack:
        i, expanded = stack.pop()
        step = proof.steps[i]
        if not expanded:
            stack.append((i, True))
            stack.extend((j, False) for j in reversed(step.premises))
            continue
        n = len(step.premises)
        premises = tuple(results[len(results) - n:]) if n else ()
        if n:
            del results[len(results) - n:]
        steps.append(replace(step, premises=premises))
        if len(steps) > cap:
            raise SizeCapExceeded(cap)
        results.append(len(steps) - 1)
    logger.debug("tree expansion: %d steps became %d", len(proof.steps), len(steps))
    return replace(proof, mode=MODE_TREE, steps=tuple(steps))


def compact(proof: Proof) -> Proof:
    """Drop steps the endsequent does not depend on and renumber."""
    needed = set()
    stack = [len(proof.steps) - 1]
    while stack:
        i = stack.pop()
        if i in needed:
            continue
        needed.add(i)
        stack.extend(proof.steps[i].premises)
    order = sorted(needed)
    index = {old: new for new, old in enumerate(order)}
    steps = tuple(
        replace(proof.steps[old], premises=tuple(index[j] for j in proof.steps[old].premises))
        for old in order
    )
    return replace(proof, steps=steps)
