"""Proof-to-proof translations between the calculi.

Every translation reads a checked proof and writes a new one through a
:class:`ProofBuilder`. Steps are rewritten one at a time and each rewritten step
is fitted to the exact translation of the original sequent, so a mismatch shows
up at the step that caused it. The finished proof is checked again before a
:class:`SimulationReport` is returned.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .builder import ProofBuilder
from .const import (
    DEFAULT_HEIGHT_CONSTANT,
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
    SYSTEM_DLK,
    SYSTEM_ELDT,
    SYSTEM_ELNDT,
    SYSTEM_LDT,
    SYSTEM_LK,
    SYSTEM_LNDT,
)
from .constructions import DtTranslation, cls, conj, disj, dtms, is_normal_form, make_substitution, nf, tms
from .exceptions import PreconditionError
from .formula import TOP, And, Dec, Ext, Formula, Lit, Or, System, and_leaves, big_or, negate_dt, or_leaves
from .generators import (
    SubstitutionClaims,
    collapse_right,
    conjdisj_step,
    contradiction,
    identity,
    identity_step,
    ndtnf_step,
    or_cases,
    term_implies_clause,
)
from .logutil import TRACE, get_logger
from .proof import Proof, ProofStats, Step, check, stats
from .reach import SINK, ProofGraph, ReachProver, build_proof_graph, cases_or, top_right
from .sequent import Sequent

logger = get_logger(__file__)

STRATEGY_DAG = "dag"
STRATEGY_TREE = "tree-quasipoly"

DIRECTION_TO_2LK = "lndt-to-2lk"
DIRECTION_TO_LNDT = "2lk-to-lndt"

_STRUCTURAL = (RULE_WEAKEN_LEFT, RULE_WEAKEN_RIGHT, RULE_CONTRACT_LEFT, RULE_CONTRACT_RIGHT)
_HANDLERS = {
    RULE_CUT: "cut",
    RULE_DEC_LEFT: "dec_left",
    RULE_DEC_RIGHT: "dec_right",
    RULE_OR_LEFT: "or_left",
    RULE_OR_RIGHT: "or_right",
    RULE_AND_LEFT: "and_left",
    RULE_AND_RIGHT: "and_right",
}


@dataclass(frozen=True)
class SimulationReport:
    theorem: str
    proof: Proof
    input_stats: ProofStats
    output_stats: ProofStats
    endsequent_translation: Sequent
    exponent: Optional[float] = None
    bound: Optional[int] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def as_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "theorem": self.theorem,
            "system": str(self.proof.system),
            "mode": self.proof.mode,
            "input": self.input_stats.as_dict(),
            "output": self.output_stats.as_dict(),
            "endsequent": str(self.endsequent_translation),
        }
        if self.exponent is not None:
            out["exponent"] = round(self.exponent, 6)
        if self.bound is not None:
            out["bound"] = self.bound
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def quasi_exponent(n_in: int, n_out: int) -> float:
    """``c`` with ``n_out = n_in ** (c * log2 n_in)``."""
    if n_in < 2:
        return 0.0
    return math.log2(max(n_out, 1)) / math.log2(n_in) ** 2


def _require_checked(proof: Proof, allowed: Sequence[str], what: str) -> None:
    if proof.system.name not in allowed:
        raise PreconditionError(f"{what} reads {'/'.join(allowed)} proofs, got {proof.system}")
    report = check(proof)
    if not report.ok:
        raise PreconditionError(f"the input proof does not check: step {report.step}: {report.reason}")


def _require_tree(proof: Proof, what: str) -> None:
    if not stats(proof).is_tree:
        raise PreconditionError(f"{what} needs a tree-like input proof")


def _report(
    theorem: str,
    source: Proof,
    pb: ProofBuilder,
    root: int,
    target: Sequent,
    exponent: bool = False,
    bound: Optional[int] = None,
    notes: Sequence[str] = (),
) -> SimulationReport:
    out = pb.finish(pb.fit(root, target))
    check(out).raise_for_failure()
    before, after = stats(source), stats(out)
    logger.info("%s: %d steps (size %d) became %d steps (size %d)", theorem, before.steps, before.size, after.steps, after.size)
    return SimulationReport(
        theorem=theorem,
        proof=out,
        input_stats=before,
        output_stats=after,
        endsequent_translation=target,
        exponent=quasi_exponent(before.size, after.size) if exponent else None,
        bound=bound,
        notes=tuple(notes),
    )


class StepTranslation:
    """Rewrites a proof one step at a time.

    Axioms are copied through :meth:`sequent`, structural steps are left to the
    fitting that follows every step, and logical rules dispatch to the method
    named after them.
    """

    def __init__(self, source: Proof, pb: ProofBuilder):
        self.source = source
        self.pb = pb

    def formula(self, f: Formula) -> Formula:
        return f

    def left(self, f: Formula) -> List[Formula]:
        return [self.formula(f)]

    def right(self, f: Formula) -> List[Formula]:
        return [self.formula(f)]

    def sequent(self, s: Sequent) -> Sequent:
        left = [g for f in s.antecedent for g in self.left(f)]
        right = [g for f in s.succedent for g in self.right(f)]
        return Sequent.of(left, right)

    def run(self) -> int:
        out: List[int] = []
        for k, step in enumerate(self.source.steps):
            i = self.translate(step, [out[j] for j in step.premises])
            out.append(self.pb.fit(i, self.sequent(step.sequent)))
            logger.log(TRACE, "translated step %d (%s)", k, step.rule)
        return out[-1]

    def translate(self, step: Step, premises: List[int]) -> int:
        if step.rule == RULE_AXIOM:
            s = self.sequent(step.sequent)
            return self.pb.axiom(s.antecedent, s.succedent)
        if step.rule == RULE_EXTENSION:
            return self.extension(step.sequent)
        if step.rule in _STRUCTURAL:
            return premises[0]
        handler = getattr(self, _HANDLERS[step.rule], None)
        if handler is None:
            raise PreconditionError(f"{step.rule} has no translation into {self.pb.system}")
        return handler(step.principal, *premises)

    def extension(self, s: Sequent) -> int:
        raise PreconditionError(f"extension axioms have no translation into {self.pb.system}")

    def cut(self, f: Formula, left: int, right: int) -> int:
        return self.pb.cut(left, right, self.formula(f))


class ConjDisjRules:
    """And/or steps over ``Conj``/``Disj`` renderings of terms and clauses."""

    pb: ProofBuilder

    def _parts(self, f: Formula, leaves: Callable[[Formula], List[Formula]]):
        return leaves(f.left), leaves(f.right)

    def and_left(self, f: And, i: int) -> int:
        ps, qs = self._parts(f, and_leaves)
        i = self.pb.cut(conjdisj_step(self.pb, ps, qs, "a"), i, conj(ps))
        return self.pb.cut(conjdisj_step(self.pb, ps, qs, "b"), i, conj(qs))

    def and_right(self, f: And, left: int, right: int) -> int:
        ps, qs = self._parts(f, and_leaves)
        i = self.pb.cut(left, conjdisj_step(self.pb, ps, qs, "c"), conj(ps))
        return self.pb.cut(right, i, conj(qs))


# Depth-one LK and LDT
class OneLkToLdt(StepTranslation, ConjDisjRules):
    def formula(self, f: Formula) -> Formula:
        if isinstance(f, And):
            return conj(and_leaves(f))
        if isinstance(f, Or):
            return disj(or_leaves(f))
        return f

    def or_left(self, f: Or, left: int, right: int) -> int:
        ps, qs = self._parts(f, or_leaves)
        i = self.pb.cut(conjdisj_step(self.pb, ps, qs, "f"), left, disj(ps))
        return self.pb.cut(i, right, disj(qs))

    def or_right(self, f: Or, i: int) -> int:
        ps, qs = self._parts(f, or_leaves)
        i = self.pb.cut(i, conjdisj_step(self.pb, ps, qs, "d"), disj(ps))
        return self.pb.cut(i, conjdisj_step(self.pb, ps, qs, "e"), disj(qs))


def sim_1lk_to_ldt(proof: Proof) -> SimulationReport:
    """LDT proof of the DT-translation of a 1-LK proof; tree proofs stay trees."""
    _require_checked(proof, (SYSTEM_DLK, SYSTEM_LK), "1-LK to LDT")
    for step in proof.steps:
        for f in step.sequent.formulas():
            if f.depth > 1:
                raise PreconditionError(f"{f} is not a depth one formula")
    pb = ProofBuilder(System(SYSTEM_LDT), proof.mode)
    t = OneLkToLdt(proof, pb)
    return _report("1lk-to-ldt", proof, pb, t.run(), t.sequent(proof.endsequent))


class LdtToOneLk(StepTranslation):
    """Boolean translation: ``Cls`` on the left, ``Tms`` on the right."""

    def __init__(self, source: Proof, pb: ProofBuilder, strategy: str):
        super().__init__(source, pb)
        self.strategy = strategy
        self.sizes: List[int] = []
        for step in source.steps:
            self.sizes.append(step.sequent.size + sum(self.sizes[j] for j in step.premises))
        self.current: Optional[Step] = None

    def left(self, f: Formula) -> List[Formula]:
        return [c.formula() for c in cls(f)]

    def right(self, f: Formula) -> List[Formula]:
        return [t.formula() for t in tms(f)]

    def translate(self, step: Step, premises: List[int]) -> int:
        self.current = step
        return super().translate(step, premises)

    def dec_left(self, f: Dec, left: int, right: int) -> int:
        pb, p = self.pb, f.lit
        n = p.complement()
        zero = left
        for c in cls(f.low):
            zero = pb.or_left(pb.identity_literal(p), zero, Or(p, c.formula()))
        one = right
        for c in cls(f.high):
            one = pb.or_left(pb.axiom(left=[p, n]), one, Or(n, c.formula()))
        return pb.cut(zero, one, p)

    def dec_right(self, f: Dec, left: int, right: int) -> int:
        pb, p = self.pb, f.lit
        n = p.complement()
        zero = left
        for t in tms(f.low):
            zero = pb.and_right(pb.axiom(right=[p, n]), zero, And(n, t.formula()))
        one = right
        for t in tms(f.high):
            one = pb.and_right(pb.identity_literal(p), one, And(p, t.formula()))
        return pb.cut(zero, one, p)

    def _first_construction(self) -> bool:
        if self.strategy == STRATEGY_DAG:
            return True
        zero, one = self.current.premises
        # ties go to the first construction
        return self.sizes[one] <= self.sizes[zero]

    def cut(self, f: Formula, left: int, right: int) -> int:
        pb = self.pb
        terms = [t.formula() for t in tms(f)]
        clauses = [c.formula() for c in cls(f)]
        if self._first_construction():
            # F, Gamma |- Delta for every term F, then cut the terms away
            out = left
            for term in terms:
                k = right
                for clause in clauses:
                    k = pb.cut(term_implies_clause(pb, term, clause), k, clause)
                out = pb.cut(out, _single(pb, k, left=term), term)
            return out
        # Gamma |- Delta, D for every clause D, then cut the clauses away
        out = right
        for clause in clauses:
            k = left
            for term in terms:
                k = pb.cut(k, term_implies_clause(pb, term, clause), term)
            out = pb.cut(_single(pb, k, right=clause), out, clause)
        return out


def _single(pb: ProofBuilder, i: int, left: Optional[Formula] = None, right: Optional[Formula] = None) -> int:
    """Contract ``i`` down to one occurrence of the given formula."""
    s = pb.sequent(i)
    if left is not None and s.left_counts[left] > 1:
        i = pb.contract(i, left=[left] * (s.left_counts[left] - 1))
    if right is not None and s.right_counts[right] > 1:
        i = pb.contract(i, right=[right] * (s.right_counts[right] - 1))
    return i


def sim_ldt_to_1lk(proof: Proof, strategy: str = STRATEGY_DAG) -> SimulationReport:
    """1-LK proof of the Boolean translation of an LDT proof.

    ``dag`` rewrites cuts with the first construction and shares subproofs.
    ``tree-quasipoly`` needs a tree input and picks, at each cut, the
    construction that repeats the smaller subderivation.
    """
    if strategy not in (STRATEGY_DAG, STRATEGY_TREE):
        raise PreconditionError(f"unknown strategy {strategy!r}")
    _require_checked(proof, (SYSTEM_LDT,), "LDT to 1-LK")
    if strategy == STRATEGY_TREE:
        _require_tree(proof, "the tree strategy")
    mode = MODE_TREE if strategy == STRATEGY_TREE else MODE_DAG
    pb = ProofBuilder(System(SYSTEM_DLK, 1), mode)
    t = LdtToOneLk(proof, pb, strategy)
    root = t.run()
    return _report(
        f"ldt-to-1lk ({strategy})",
        proof,
        pb,
        root,
        t.sequent(proof.endsequent),
        exponent=strategy == STRATEGY_TREE,
    )


# LNDT normal forms
class Normalization(StepTranslation):
    def formula(self, f: Formula) -> Formula:
        return nf(f)

    def or_left(self, f: Or, left: int, right: int) -> int:
        return self.pb.or_left(left, right, nf(f))

    def or_right(self, f: Or, i: int) -> int:
        return self.pb.or_right(i, nf(f))

    def dec_left(self, f: Dec, left: int, right: int) -> int:
        pb, a, p, b = self.pb, f.low, f.lit, f.high
        zero = pb.cut(ndtnf_step(pb, "c", a, p, b), left, nf(a))
        one = pb.cut(ndtnf_step(pb, "d", a, p, b), right, nf(b))
        return pb.cut(zero, one, p)

    def dec_right(self, f: Dec, left: int, right: int) -> int:
        pb, a, p, b = self.pb, f.low, f.lit, f.high
        zero = pb.cut(left, ndtnf_step(pb, "a", a, p, b), nf(a))
        one = pb.cut(right, ndtnf_step(pb, "b", a, p, b), nf(b))
        return pb.cut(zero, one, p)


def sim_normalize_lndt(proof: Proof) -> Proof:
    """The same proof with every formula ``A`` replaced by ``NF(A)``."""
    _require_checked(proof, (SYSTEM_LDT, SYSTEM_LNDT), "normalization")
    pb = ProofBuilder(System(SYSTEM_LNDT), proof.mode)
    t = Normalization(proof, pb)
    out = pb.finish(pb.fit(t.run(), t.sequent(proof.endsequent)))
    check(out).raise_for_failure()
    logger.info("normalized %d steps into %d", len(proof), len(out))
    return out


def is_normal_proof(proof: Proof) -> bool:
    return all(is_normal_form(f) for step in proof.steps for f in step.sequent.formulas())


# Tree-like LNDT and LDT
def spread(pb: ProofBuilder, a: Formula) -> int:
    """LDT proof of ``a |- DTms(a)``."""
    key = ("spread", a)
    if key in pb.cache:
        return pb.cache[key]
    if isinstance(a, Lit):
        out = pb.identity_literal(a)
    else:
        p = a.lit
        n = p.complement()
        zero = spread(pb, a.low)
        for d in dtms(a.low):
            lemma = pb.dec_right(pb.axiom(right=[p, n]), identity(pb, d), Dec(n, n, d))
            zero = pb.cut(zero, lemma, d)
        one = spread(pb, a.high)
        for d in dtms(a.high):
            lemma = pb.dec_right(pb.identity_literal(p), identity(pb, d), Dec(p, p, d))
            one = pb.cut(one, lemma, d)
        out = pb.dec_left(zero, one, a)
    pb.cache[key] = out
    return out


def gather(pb: ProofBuilder, a: Formula) -> List[int]:
    """LDT proofs of ``d |- a``, one for each ``d`` in ``DTms(a)``."""
    key = ("gather", a)
    if key in pb.cache:
        return pb.cache[key]
    if isinstance(a, Lit):
        out = [pb.identity_literal(a)]
    else:
        p = a.lit
        n = p.complement()
        out = []
        to_low = identity_step(pb, "d", a.low, p, a.high)
        for d, proof in zip(dtms(a.low), gather(pb, a.low)):
            i = pb.cut(pb.cut(proof, to_low, a.low), pb.axiom(left=[p, n]), p)
            out.append(pb.dec_left(pb.identity_literal(n), i, Dec(n, n, d)))
        to_high = identity_step(pb, "e", a.low, p, a.high)
        for d, proof in zip(dtms(a.high), gather(pb, a.high)):
            i = pb.cut(proof, to_high, a.high)
            out.append(pb.dec_left(pb.identity_literal(p), i, Dec(p, p, d)))
    pb.cache[key] = out
    return out


class HypothesisDischarge:
    """LDT derivations of ``|- F(Delta)`` from hypotheses ``|- F(A)``, ``A`` in ``Gamma``.

    ``F`` flattens a normal form into its DT disjuncts. A hypothesis is any step
    whose succedent holds ``F(A)``; extra side formulas it carries end up in the
    conclusion, which is how subderivations are stacked without copying them.
    """

    def __init__(self, source: Proof, pb: ProofBuilder):
        self.steps = source.steps
        self.pb = pb

    def build(self, k: int, hyp: Dict[Formula, int]) -> int:
        step = self.steps[k]
        pb, rule, f, prem = self.pb, step.rule, step.principal, step.premises
        if rule == RULE_AXIOM:
            left = step.sequent.antecedent
            if len(left) == 2:
                p, q = left
                return pb.cut(hyp[p], pb.cut(hyp[q], pb.axiom(left=[p, q]), q), p)
            if len(left) == 1:
                return hyp[left[0]]
            return pb.axiom(right=step.sequent.succedent)
        if rule in _STRUCTURAL or rule == RULE_OR_RIGHT:
            return self.build(prem[0], hyp)
        if rule == RULE_CUT:
            first = self.build(prem[0], hyp)
            return self.build(prem[1], {**hyp, f: first})
        if rule == RULE_OR_LEFT:
            first = self.build(prem[0], {**hyp, f.left: hyp[f]})
            return self.build(prem[1], {**hyp, f.right: first})
        if rule == RULE_DEC_RIGHT:
            zero = self.build(prem[0], hyp)
            one = self.build(prem[1], {**hyp, f.lit: pb.identity_literal(f.lit)})
            return pb.dec_right(zero, one, f)
        if rule == RULE_DEC_LEFT:
            whole = hyp[f]
            low = pb.cut(whole, identity_step(pb, "f", f.low, f.lit, f.high), f)
            high = pb.cut(whole, identity_step(pb, "g", f.low, f.lit, f.high), f)
            zero = self.build(prem[0], {**hyp, f.low: low})
            one = self.build(prem[1], {**hyp, f.lit: pb.identity_literal(f.lit), f.high: high})
            return pb.cut(zero, one, f.lit)
        raise PreconditionError(f"{rule} does not occur in LNDT proofs")


def sim_treelndt_to_ldt(proof: Proof) -> SimulationReport:
    """LDT proof of the DT endsequent of a tree-like LNDT proof."""
    _require_checked(proof, (SYSTEM_LDT, SYSTEM_LNDT), "tree-LNDT to LDT")
    _require_tree(proof, "tree-LNDT to LDT")
    end = proof.endsequent
    for f in end.formulas():
        if Or in f.connectives:
            raise PreconditionError(f"the endsequent must be a DT sequent, {f} is not a DT formula")
    notes = []
    normal = is_normal_proof(proof)
    source = proof if normal else sim_normalize_lndt(proof)
    if not normal:
        notes.append("normalized the input first")
    pb = ProofBuilder(System(SYSTEM_LDT), MODE_DAG)
    if normal:
        hyp = {a: identity(pb, a) for a in end.antecedent}
    else:
        hyp = {nf(a): spread(pb, a) for a in end.antecedent}
    root = HypothesisDischarge(source, pb).build(len(source.steps) - 1, hyp)
    if not normal:
        for d in end.succedent:
            for item, lemma in zip(dtms(d), gather(pb, d)):
                root = pb.cut(root, lemma, item)
    return _report("treelndt-to-ldt", proof, pb, root, end, notes=notes)


def _items(s: Sequent) -> List[Formula]:
    return [negate_dt(f) for f in s.antecedent] + list(s.succedent)


def sequent_disjunction(s: Sequent) -> Formula:
    """``OR`` of the negated antecedent and the succedent."""
    items = _items(s)
    if not items:
        raise PreconditionError("the empty sequent has no disjunction")
    return big_or(items)


class SequentDisjunctions:
    """Tree LNDT lemmas ``A_j, A_k |- A_i`` over the disjunctions of an LDT proof."""

    def __init__(self, source: Proof, pb: ProofBuilder):
        self.steps = source.steps
        self.pb = pb
        self.disjunctions = [sequent_disjunction(step.sequent) for step in self.steps]

    def unfold(self, k: int, case: Callable[[Formula], int]) -> int:
        return or_cases(self.pb, self.disjunctions[k], case)

    def lemma(self, i: int) -> int:
        pb = self.pb
        step = self.steps[i]
        target = self.disjunctions[i]
        if step.rule == RULE_AXIOM:
            return collapse_right(pb, pb.axiom(right=_items(step.sequent)), target)
        ident = lambda g: identity(pb, g)  # noqa: E731
        if len(step.premises) == 1:
            return collapse_right(pb, self.unfold(step.premises[0], ident), target)
        j, k = step.premises
        f = step.principal
        if step.rule == RULE_CUT:
            neg = negate_dt(f)
            zero = self.unfold(j, ident)
            one = self.unfold(k, lambda g: contradiction(pb, f) if g == neg else identity(pb, g))
            return collapse_right(pb, pb.cut(zero, one, f), target)
        # dec-l lands on the negation of its principal formula, dec-r on the formula itself
        x = negate_dt(f) if step.rule == RULE_DEC_LEFT else f
        n = x.lit.complement()
        zero = self.unfold(j, ident)
        one = self.unfold(k, lambda g: pb.axiom(left=[x.lit, n]) if g == n else identity(pb, g))
        return collapse_right(pb, pb.dec_right(zero, one, x), target)

    def base(self) -> int:
        """``A_m, Gamma |- Delta`` for the endsequent."""
        end = self.steps[-1].sequent
        negated = {negate_dt(f): f for f in end.antecedent}
        pb = self.pb

        def case(g: Formula) -> int:
            if g in end.right_counts:
                return identity(pb, g)
            return contradiction(pb, negated[g])

        return self.unfold(len(self.steps) - 1, case)


def sim_ldt_to_treelndt(proof: Proof) -> SimulationReport:
    """Tree-like LNDT proof of the endsequent of a (dag-like) LDT proof."""
    _require_checked(proof, (SYSTEM_LDT,), "LDT to tree-LNDT")
    pb = ProofBuilder(System(SYSTEM_LNDT), MODE_TREE)
    lemmas = SequentDisjunctions(proof, pb)
    current = lemmas.base()
    for i in range(len(proof.steps) - 1, -1, -1):
        a = lemmas.disjunctions[i]
        if a not in pb.sequent(current).left_counts:
            continue
        current = pb.cut(lemmas.lemma(i), _single(pb, current, left=a), a)
    return _report("ldt-to-treelndt", proof, pb, current, proof.endsequent)


# LNDT and depth-two LK
def term_disjunction(f: Formula) -> Formula:
    """``OR Tms`` of every DT disjunct of a normal form, disjunctions kept."""
    if isinstance(f, Or):
        return Or(term_disjunction(f.left), term_disjunction(f.right))
    return big_or([t.formula() for t in tms(f)])


class LndtToTwoLk(StepTranslation):
    def formula(self, f: Formula) -> Formula:
        return term_disjunction(f)

    def or_left(self, f: Or, left: int, right: int) -> int:
        return self.pb.or_left(left, right, self.formula(f))

    def or_right(self, f: Or, i: int) -> int:
        return self.pb.or_right(i, self.formula(f))

    def _terms(self, f: Dec) -> Tuple[Lit, Lit, Formula]:
        return f.lit, f.lit.complement(), self.formula(f)

    def dec_left(self, f: Dec, left: int, right: int) -> int:
        pb = self.pb
        p, n, whole = self._terms(f)
        low, high = self.formula(f.low), self.formula(f.high)

        # T(ApB) |- T(A), p
        def to_low(item: And) -> int:
            if item.left == n:
                i = collapse_right(pb, identity(pb, item.right), low)
                return pb.ensure(pb.and_left(i, item), right=[p])
            return pb.and_left(pb.identity_literal(p), item)

        # p, T(ApB) |- T(B)
        def to_high(item: And) -> int:
            if item.left == n:
                return pb.and_left(pb.axiom(left=[p, n]), item)
            i = collapse_right(pb, identity(pb, item.right), high)
            return pb.ensure(pb.and_left(i, item), left=[p])

        zero = pb.cut(or_cases(pb, whole, to_low), left, low)
        one = pb.cut(or_cases(pb, whole, to_high), right, high)
        return pb.cut(zero, one, p)

    def dec_right(self, f: Dec, left: int, right: int) -> int:
        pb = self.pb
        p, n, whole = self._terms(f)
        low, high = self.formula(f.low), self.formula(f.high)

        # T(A) |- p, T(ApB)
        def from_low(t: Formula) -> int:
            i = pb.and_right(pb.axiom(right=[p, n]), identity(pb, t), And(n, t))
            return collapse_right(pb, i, whole)

        # p, T(B) |- T(ApB)
        def from_high(t: Formula) -> int:
            i = pb.and_right(pb.identity_literal(p), identity(pb, t), And(p, t))
            return collapse_right(pb, i, whole)

        zero = pb.cut(left, or_cases(pb, low, from_low), low)
        one = pb.cut(right, or_cases(pb, high, from_high), high)
        return pb.cut(zero, one, p)


def is_dnf(f: Formula) -> bool:
    """A disjunction of conjunctions of literals."""
    return all(isinstance(x, Lit) for g in or_leaves(f) for x in and_leaves(g))


def dnf_to_ndt(f: Formula) -> Formula:
    if isinstance(f, Or):
        return Or(dnf_to_ndt(f.left), dnf_to_ndt(f.right))
    return conj(and_leaves(f))


class TwoLkToLndt(StepTranslation, ConjDisjRules):
    def formula(self, f: Formula) -> Formula:
        return dnf_to_ndt(f)

    def or_left(self, f: Or, left: int, right: int) -> int:
        return self.pb.or_left(left, right, self.formula(f))

    def or_right(self, f: Or, i: int) -> int:
        return self.pb.or_right(i, self.formula(f))


def sim_lndt_2lk(proof: Proof, direction: str = DIRECTION_TO_2LK) -> SimulationReport:
    """LNDT to 2-LK through ``OR Tms``, or 2-LK over DNF formulas to LNDT through ``OR Conj``."""
    if direction == DIRECTION_TO_2LK:
        _require_checked(proof, (SYSTEM_LDT, SYSTEM_LNDT), "LNDT to 2-LK")
        notes = []
        source = proof
        if not is_normal_proof(proof):
            source = sim_normalize_lndt(proof)
            notes.append("normalized the input first")
        pb = ProofBuilder(System(SYSTEM_DLK, 2), source.mode)
        t = LndtToTwoLk(source, pb)
        return _report(direction, proof, pb, t.run(), t.sequent(source.endsequent), notes=notes)
    if direction != DIRECTION_TO_LNDT:
        raise PreconditionError(f"unknown direction {direction!r}")
    _require_checked(proof, (SYSTEM_DLK, SYSTEM_LK), "2-LK to LNDT")
    for step in proof.steps:
        for f in step.sequent.formulas():
            if not is_dnf(f):
                raise PreconditionError(f"{f} is not a disjunction of conjunctions of literals")
    pb = ProofBuilder(System(SYSTEM_LNDT), proof.mode)
    t = TwoLkToLndt(proof, pb)
    return _report(direction, proof, pb, t.run(), t.sequent(proof.endsequent))


# LK into eLDT
class LkToEldt(StepTranslation):
    """Every Boolean formula becomes the literal or extension variable ``Dt`` gives it."""

    def __init__(self, source: Proof, pb: ProofBuilder, translation: DtTranslation):
        super().__init__(source, pb)
        self.dt = translation
        self._claims: Dict[tuple, SubstitutionClaims] = {}

    def formula(self, f: Formula) -> Formula:
        return self.dt(f)

    def _claim(self, f: Formula, variant: str) -> Tuple[int, Formula, Formula]:
        """Claim ``variant`` for the body of ``Dt(f)``; returns it with ``Dt(f)`` and the body."""
        e = self.dt(f)
        kind, left, right = self.dt.parts[e.name]
        mode = "one" if kind is And else "zero"
        key = (e.name, variant)
        if key not in self._claims:
            sub, _ = make_substitution(left, self.pb.axioms, mode, right)
            self._claims[key] = SubstitutionClaims(self.pb, variant, sub)
        return self._claims[key](left), e, self.pb.axioms.definition(e.name)

    def unfold(self, f: Formula, variant: str) -> int:
        """``Dt(f) |- ...`` through the axiom ``e |- body``."""
        claim, e, body = self._claim(f, variant)
        return self.pb.cut(self.pb.ext_axiom(e, body), claim, body)

    def fold(self, f: Formula, variant: str) -> int:
        """``... |- Dt(f)`` through the axiom ``body |- e``."""
        claim, e, body = self._claim(f, variant)
        return self.pb.cut(claim, self.pb.ext_axiom(body, e), body)

    def and_left(self, f: And, i: int) -> int:
        i = self.pb.cut(self.unfold(f, "e"), i, self.dt(f.left))
        return self.pb.cut(self.unfold(f, "d"), i, self.dt(f.right))

    def and_right(self, f: And, left: int, right: int) -> int:
        i = self.pb.cut(left, self.fold(f, "f"), self.dt(f.left))
        return self.pb.cut(right, i, self.dt(f.right))

    def or_left(self, f: Or, left: int, right: int) -> int:
        i = self.pb.cut(self.unfold(f, "c"), left, self.dt(f.left))
        return self.pb.cut(i, right, self.dt(f.right))

    def or_right(self, f: Or, i: int) -> int:
        i = self.pb.cut(i, self.fold(f, "b"), self.dt(f.left))
        return self.pb.cut(i, self.fold(f, "a"), self.dt(f.right))

    # DT-translation of clauses and terms
    def to_conj(self, f: Formula) -> int:
        """``Dt(f) |- Conj(leaves)`` for a conjunction of literals."""
        pb = self.pb
        if isinstance(f, Lit):
            return pb.identity_literal(f)
        ps, qs = and_leaves(f.left), and_leaves(f.right)
        low = pb.cut(self.unfold(f, "e"), self.to_conj(f.left), self.dt(f.left))
        high = pb.cut(self.unfold(f, "d"), self.to_conj(f.right), self.dt(f.right))
        i = pb.cut(low, conjdisj_step(pb, ps, qs, "c"), conj(ps))
        return pb.cut(high, i, conj(qs))

    def from_disj(self, f: Formula) -> int:
        """``Disj(leaves) |- Dt(f)`` for a disjunction of literals."""
        pb = self.pb
        if isinstance(f, Lit):
            return pb.identity_literal(f)
        ps, qs = or_leaves(f.left), or_leaves(f.right)
        i = pb.cut(conjdisj_step(pb, ps, qs, "f"), self.from_disj(f.left), disj(ps))
        i = pb.cut(i, self.from_disj(f.right), disj(qs))
        i = pb.cut(i, self.fold(f, "b"), self.dt(f.left))
        return pb.cut(i, self.fold(f, "a"), self.dt(f.right))


def is_clause(f: Formula) -> bool:
    return all(isinstance(x, Lit) for x in or_leaves(f))


def is_term(f: Formula) -> bool:
    return all(isinstance(x, Lit) for x in and_leaves(f))


def sim_lk_to_eldt(proof: Proof, height_constant: int = DEFAULT_HEIGHT_CONSTANT) -> SimulationReport:
    """eLDT proof of ``Dt(Gamma) |- Dt(Delta)``, then of the DT-translation when it applies."""
    _require_checked(proof, (SYSTEM_LK, SYSTEM_DLK), "LK to eLDT")
    translation = DtTranslation(height_constant)
    for step in proof.steps:
        for f in step.sequent.formulas():
            translation(f)
    pb = ProofBuilder(System(SYSTEM_ELDT), MODE_DAG, translation.axioms)
    t = LkToEldt(proof, pb, translation)
    root = t.run()
    end = proof.endsequent
    notes = []
    if all(is_clause(f) for f in end.antecedent) and all(is_term(f) for f in end.succedent):
        for f in end.antecedent:
            root = pb.cut(t.from_disj(f), root, translation(f))
        for f in end.succedent:
            root = pb.cut(root, t.to_conj(f), translation(f))
        target = Sequent.of([disj(or_leaves(f)) for f in end.antecedent], [conj(and_leaves(f)) for f in end.succedent])
    else:
        target = t.sequent(end)
        notes.append("the endsequent is not clauses |- terms; kept Dt(Gamma) |- Dt(Delta)")
    return _report("lk-to-eldt", proof, pb, root, target, notes=notes)


# eLNDT into LK
class ElndtToLk(StepTranslation):
    """Every formula becomes the reachability formula of its vertex."""

    def __init__(self, source: Proof, pb: ProofBuilder, graph: ProofGraph):
        super().__init__(source, pb)
        self.graph = graph
        self.prover = ReachProver(graph, pb)

    def vertex(self, f: Formula) -> int:
        return self.graph.vertex(f)

    def formula(self, f: Formula) -> Formula:
        return self.graph.reach(self.vertex(f))

    def _step_cases(self, f: Formula, case: Callable[[int], int]) -> int:
        """``Reach(f), ... |- ...`` from one derivation per successor of ``f``."""
        g, pb = self.graph, self.pb
        v = self.vertex(f)
        targets = g.step_targets(v, SINK)
        items = g.step_items(v, SINK)

        def one(k: int) -> int:
            parts = g.link_parts(v, v, targets[k], SINK)
            return pb.and_left(pb.ensure(case(targets[k]), left=parts), items[k])

        return pb.cut(self.prover.first(v, SINK), cases_or(pb, items, one), g.step(v, SINK))

    def _prepend(self, f: Formula, child: Formula) -> int:
        """``phi, Reach(child) |- Reach(f)``."""
        return self.prover.prepend(self.vertex(f), self.vertex(child), SINK)

    def extension(self, s: Sequent) -> int:
        pb = self.pb
        a, b = s.antecedent[0], s.succedent[0]
        if isinstance(a, Ext) and self.graph.axioms.definition(a.name) == b:
            reach_b = self.formula(b)
            return self._step_cases(a, lambda j: identity(pb, reach_b))
        return pb.cut(top_right(pb), self._prepend(b, a), TOP)

    def or_left(self, f: Or, left: int, right: int) -> int:
        low = self.vertex(f.left)
        return self._step_cases(f, lambda j: left if j == low else right)

    def or_right(self, f: Or, i: int) -> int:
        pb = self.pb
        for child in (f.left, f.right):
            lemma = pb.cut(top_right(pb), self._prepend(f, child), TOP)
            i = pb.cut(i, lemma, self.formula(child))
        return i

    def dec_left(self, f: Dec, left: int, right: int) -> int:
        pb, p = self.pb, f.lit
        n = p.complement()
        low = self.vertex(f.low)
        if low == self.vertex(f.high):
            merged = pb.cut(left, right, p)
            return self._step_cases(f, lambda j: merged)

        def case(j: int) -> int:
            if j == low:
                return pb.cut(left, pb.axiom(left=[p, n]), p)
            return right

        return self._step_cases(f, case)

    def dec_right(self, f: Dec, left: int, right: int) -> int:
        pb, p = self.pb, f.lit
        n = p.complement()
        if self.vertex(f.low) == self.vertex(f.high):
            merged = pb.cut(left, right, p)
            i = pb.cut(merged, self._prepend(f, f.low), self.formula(f.low))
            either = Or(n, p)
            return pb.cut(pb.or_right(pb.axiom(right=[n, p]), either), i, either)
        zero = pb.cut(left, self._prepend(f, f.low), self.formula(f.low))
        zero = pb.cut(pb.axiom(right=[p, n]), zero, n)
        one = pb.cut(right, self._prepend(f, f.high), self.formula(f.high))
        return pb.cut(zero, one, p)


def sim_elndt_to_lk(proof: Proof) -> SimulationReport:
    """LK proof of the reachability translation of an eLNDT (or eLDT, LNDT, LDT) proof."""
    _require_checked(proof, (SYSTEM_LDT, SYSTEM_LNDT, SYSTEM_ELDT, SYSTEM_ELNDT), "eLNDT to LK")
    graph = build_proof_graph(proof)
    pb = ProofBuilder(System(SYSTEM_LK), MODE_DAG)
    t = ElndtToLk(proof, pb, graph)
    root = t.run()
    return _report(
        "elndt-to-lk",
        proof,
        pb,
        root,
        t.sequent(proof.endsequent),
        exponent=True,
        bound=graph.size_bound(),
    )


SIMULATIONS: Dict[str, Callable[..., SimulationReport]] = {
    "1lk-to-ldt": sim_1lk_to_ldt,
    "ldt-to-1lk": sim_ldt_to_1lk,
    "treelndt-to-ldt": sim_treelndt_to_ldt,
    "ldt-to-treelndt": sim_ldt_to_treelndt,
    DIRECTION_TO_2LK: lambda proof, **_: sim_lndt_2lk(proof, DIRECTION_TO_2LK),
    DIRECTION_TO_LNDT: lambda proof, **_: sim_lndt_2lk(proof, DIRECTION_TO_LNDT),
    "lk-to-eldt": sim_lk_to_eldt,
    "elndt-to-lk": sim_elndt_to_lk,
}
