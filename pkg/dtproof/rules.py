"""Inference rule schemas.

Both the proof builder and the checker go through :func:`conclude`, so a step
that was built is a step that checks. Every rule shares its side cedents
between premises (``Gamma`` and ``Delta`` are the same in each premise).
"""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .axioms import AxiomSet
from .const import (
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
from .exceptions import RuleError
from .formula import And, Dec, Ext, Formula, Lit, Or
from .sequent import Sequent

INITIAL_RULES = (RULE_AXIOM, RULE_EXTENSION)
ALL_RULES = (
    RULE_AXIOM,
    RULE_EXTENSION,
    RULE_WEAKEN_LEFT,
    RULE_WEAKEN_RIGHT,
    RULE_CONTRACT_LEFT,
    RULE_CONTRACT_RIGHT,
    RULE_CUT,
    RULE_DEC_LEFT,
    RULE_DEC_RIGHT,
    RULE_OR_LEFT,
    RULE_OR_RIGHT,
    RULE_AND_LEFT,
    RULE_AND_RIGHT,
)

# (left, right) active formulas each premise must contain
Shape = Tuple[Tuple[Formula, ...], Tuple[Formula, ...]]

_CONNECTIVE = {
    RULE_DEC_LEFT: Dec,
    RULE_DEC_RIGHT: Dec,
    RULE_OR_LEFT: Or,
    RULE_OR_RIGHT: Or,
    RULE_AND_LEFT: And,
    RULE_AND_RIGHT: And,
}


def arity(rule: str) -> int:
    if rule in INITIAL_RULES:
        return 0
    if rule in (RULE_CUT, RULE_DEC_LEFT, RULE_DEC_RIGHT, RULE_OR_LEFT, RULE_AND_RIGHT):
        return 2
    return 1


def premise_shapes(rule: str, principal: Formula) -> List[Shape]:
    """Active formulas of each premise for ``rule`` applied to ``principal``."""
    kind = _CONNECTIVE.get(rule)
    if kind is not None and not isinstance(principal, kind):
        raise RuleError(f"{rule} needs a {kind.__name__} principal formula, got {principal}")
    f = principal
    if rule == RULE_WEAKEN_LEFT or rule == RULE_WEAKEN_RIGHT:
        return [((), ())]
    if rule == RULE_CONTRACT_LEFT:
        return [((f, f), ())]
    if rule == RULE_CONTRACT_RIGHT:
        return [((), (f, f))]
    if rule == RULE_CUT:
        return [((), (f,)), ((f,), ())]
    if rule == RULE_DEC_LEFT:
        return [((f.low,), (f.lit,)), ((f.lit, f.high), ())]
    if rule == RULE_DEC_RIGHT:
        return [((), (f.low, f.lit)), ((f.lit,), (f.high,))]
    if rule == RULE_OR_LEFT:
        return [((f.left,), ()), ((f.right,), ())]
    if rule == RULE_OR_RIGHT:
        return [((), (f.left, f.right))]
    if rule == RULE_AND_LEFT:
        return [((f.left, f.right), ())]
    if rule == RULE_AND_RIGHT:
        return [((), (f.left,)), ((), (f.right,))]
    raise RuleError(f"unknown rule {rule!r}")


def principal_side(rule: str) -> Optional[str]:
    if rule == RULE_CUT:
        return None
    return "left" if rule.endswith("-l") else "right"


def is_axiom(s: Sequent) -> bool:
    """``p |- p``, ``p, ~p |-`` or ``|- p, ~p`` for a literal ``p``."""
    left, right = s.antecedent, s.succedent
    if len(left) + len(right) != 2 or not all(isinstance(f, Lit) for f in s.formulas()):
        return False
    if len(left) == 1:
        return left[0] == right[0]
    pair = left or right
    return pair[0] == pair[1].complement()


def is_extension_axiom(s: Sequent, axioms: AxiomSet) -> bool:
    """``e |- A`` or ``A |- e`` for an axiom ``e <-> A``."""
    if len(s.antecedent) != 1 or len(s.succedent) != 1:
        return False
    a, b = s.antecedent[0], s.succedent[0]
    if isinstance(a, Ext) and a.name in axioms and axioms.definition(a.name) == b:
        return True
    return isinstance(b, Ext) and b.name in axioms and axioms.definition(b.name) == a


def side_context(rule: str, premises: Sequence[Sequent], principal: Formula) -> Sequent:
    """Shared side cedents of the premises; raises when they differ."""
    shapes = premise_shapes(rule, principal)
    if len(shapes) != len(premises):
        raise RuleError(f"{rule} takes {len(shapes)} premises, got {len(premises)}")
    context = None
    for k, (premise, (left, right)) in enumerate(zip(premises, shapes)):
        try:
            rest = premise.remove(left, right)
        except KeyError as err:
            raise RuleError(f"premise {k} of {rule} lacks {err.args[0]}") from None
        if context is None:
            context = rest
        elif rest != context:
            raise RuleError(f"side cedents of {rule} differ: {context} versus {rest}")
    return context


def conclude(
    rule: str,
    premises: Sequence[Sequent],
    principal: Optional[Formula],
    axioms: AxiomSet,
    stated: Optional[Sequent] = None,
) -> Sequent:
    """The conclusion ``rule`` yields; initial sequents are taken from ``stated``."""
    if rule in INITIAL_RULES:
        if premises:
            raise RuleError(f"{rule} takes no premises")
        if stated is None:
            raise RuleError(f"{rule} needs its sequent stated")
        if rule == RULE_AXIOM and not is_axiom(stated):
            raise RuleError(f"{stated} is not an initial sequent")
        if rule == RULE_EXTENSION and not is_extension_axiom(stated, axioms):
            raise RuleError(f"{stated} is not an extension axiom")
        return stated
    if principal is None:
        raise RuleError(f"{rule} needs a principal formula")
    context = side_context(rule, premises, principal)
    side = principal_side(rule)
    if side == "left":
        return context.add(left=(principal,))
    if side == "right":
        return context.add(right=(principal,))
    return context
