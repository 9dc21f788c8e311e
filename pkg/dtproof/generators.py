"""Proof generators for the basic propositions of the decision tree calculi.

Each public function returns a checked-by-construction :class:`Proof` whose
endsequent is exactly the statement it is named after. The private helpers take
a :class:`ProofBuilder` and return a step index, so the simulations can splice
the same derivations into larger proofs.
"""
from __future__ import annotations

from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .axioms import EMPTY, AxiomSet, fresh_name, fresh_suffix, rename_extvars
from .builder import ProofBuilder
from .const import (
    CLASS_DT,
    CLASS_NDT,
    MODE_DAG,
    MODE_TREE,
    SYSTEM_DLK,
    SYSTEM_ELDT,
    SYSTEM_ELNDT,
    SYSTEM_LDT,
    SYSTEM_LK,
    SYSTEM_LNDT,
)
from .constructions import cls, conj, disj, make_substitution, nf, tms
from .exceptions import InvalidSequentError, PreconditionError, RuleError
from .formula import And, Dec, Ext, Formula, Lit, Or, System, and_leaves, classify, negate_dt, or_leaves, rename_ext
from .logutil import get_logger
from .proof import Proof
from .semantics import validity
from .sequent import Sequent

logger = get_logger(__file__)

IDENTITY_VARIANTS = "abcdefg"
CONJDISJ_VARIANTS = "abcdef"
NDTNF_VARIANTS = "abcdefg"
ANDOR_VARIANTS = "abcdef"


def system_for(formulas: Iterable[Formula]) -> System:
    """Smallest calculus whose formula class contains every formula."""
    kinds = frozenset()
    extended = False
    for f in formulas:
        kinds |= f.connectives
        extended = extended or bool(f.ext_names)
    if And in kinds:
        return System(SYSTEM_LK)
    if extended:
        return System(SYSTEM_ELNDT if Or in kinds else SYSTEM_ELDT)
    return System(SYSTEM_LNDT if Or in kinds else SYSTEM_LDT)


def extended_system(formulas: Iterable[Formula]) -> System:
    """eLDT, or eLNDT once a disjunction occurs."""
    has_or = any(Or in f.connectives for f in formulas)
    return System(SYSTEM_ELNDT if has_or else SYSTEM_ELDT)


def _done(pb: ProofBuilder, root: int, target: Sequent, name: str) -> Proof:
    proof = pb.finish(pb.fit(root, target))
    logger.debug("%s: %s in %d steps", name, target, len(proof))
    return proof


def _cached(pb: ProofBuilder, key: tuple, build: Callable[[], int]) -> int:
    if key not in pb.cache:
        pb.cache[key] = build()
    return pb.cache[key]


# Building blocks shared with the simulations
def identity(pb: ProofBuilder, f: Formula) -> int:
    """``f |- f``; extension variables go through their two axioms."""
    key = ("identity", f)
    if key in pb.cache:
        return pb.cache[key]
    if isinstance(f, Lit):
        out = pb.identity_literal(f)
    elif isinstance(f, Ext):
        body = pb.axioms.definition(f.name)
        out = pb.cut(pb.ext_axiom(f, body), pb.ext_axiom(body, f), body)
    elif isinstance(f, Dec):
        out = dec_congruence(pb, f, f, identity(pb, f.low), identity(pb, f.high))
    elif isinstance(f, Or):
        out = or_congruence(pb, f, f, identity(pb, f.left), identity(pb, f.right))
    else:
        out = and_congruence(pb, f, f, identity(pb, f.left), identity(pb, f.right))
    pb.cache[key] = out
    return out


def dec_congruence(pb: ProofBuilder, src: Dec, dst: Dec, low: int, high: int) -> int:
    """``src |- dst`` from ``src.low |- dst.low`` and ``src.high |- dst.high``.

    Both decision nodes must test the same literal. Side formulas of the two
    premises are carried to the conclusion.
    """
    q = src.lit
    if dst.lit != q:
        raise PreconditionError(f"{src} and {dst} test different literals")
    first = pb.dec_left(low, pb.identity_literal(q), src)
    second = pb.dec_left(pb.identity_literal(q), high, src)
    return pb.dec_right(first, second, dst)


def or_congruence(pb: ProofBuilder, src: Or, dst: Or, left: int, right: int) -> int:
    return pb.or_left(pb.or_right(left, dst), pb.or_right(right, dst), src)


def and_congruence(pb: ProofBuilder, src: And, dst: And, left: int, right: int) -> int:
    return pb.and_left(pb.and_right(left, right, dst), src)


def collapse_right(pb: ProofBuilder, i: int, f: Formula) -> int:
    """Assemble the disjunction ``f`` in the succedent out of its operands."""
    if not isinstance(f, Or):
        return pb.ensure(i, right=[f])
    i = collapse_right(pb, i, f.left)
    i = collapse_right(pb, i, f.right)
    return pb.or_right(i, f)


def collapse_left(pb: ProofBuilder, i: int, f: Formula) -> int:
    """Assemble the conjunction ``f`` in the antecedent out of its operands."""
    if not isinstance(f, And):
        return pb.ensure(i, left=[f])
    i = collapse_left(pb, i, f.left)
    i = collapse_left(pb, i, f.right)
    return pb.and_left(i, f)


def or_cases(pb: ProofBuilder, f: Formula, case: Callable[[Formula], int]) -> int:
    """``or-l`` down the disjunction ``f``; ``case`` proves each operand on the left."""
    if not isinstance(f, Or):
        return case(f)
    return pb.or_left(or_cases(pb, f.left, case), or_cases(pb, f.right, case), f)


def initial(pb: ProofBuilder, left: Sequence[Formula], right: Sequence[Formula]) -> Optional[int]:
    """An initial sequent among the literals of ``left |- right``, if there is one."""
    lits_left = [f for f in left if isinstance(f, Lit)]
    lits_right = [f for f in right if isinstance(f, Lit)]
    for p in lits_left:
        if p in lits_right:
            return pb.identity_literal(p)
    seen = set(lits_left)
    for p in lits_left:
        if p.complement() in seen:
            return pb.axiom(left=[p, p.complement()])
    seen = set(lits_right)
    for p in lits_right:
        if p.complement() in seen:
            return pb.axiom(right=[p, p.complement()])
    return None


# Identity and negation for DT formulas
def negation(pb: ProofBuilder, f: Formula) -> int:
    """``|- f, ~f`` with ``~f`` the DT complement."""
    key = ("negation", f)
    if key in pb.cache:
        return pb.cache[key]
    if isinstance(f, Lit):
        out = pb.axiom(right=[f, f.complement()])
    else:
        neg = negate_dt(f)
        p = f.lit
        first = pb.dec_right(negation(pb, f.low), pb.identity_literal(p), neg)
        second = pb.dec_right(pb.identity_literal(p), negation(pb, f.high), neg)
        out = pb.dec_right(first, second, f)
    pb.cache[key] = out
    return out


def contradiction(pb: ProofBuilder, f: Formula) -> int:
    """``f, ~f |-``."""
    key = ("contradiction", f)
    if key in pb.cache:
        return pb.cache[key]
    if isinstance(f, Lit):
        out = pb.axiom(left=[f, f.complement()])
    else:
        neg = negate_dt(f)
        p = f.lit
        first = pb.dec_left(contradiction(pb, f.low), pb.identity_literal(p), neg)
        second = pb.dec_left(pb.identity_literal(p), contradiction(pb, f.high), neg)
        out = pb.dec_left(first, second, f)
    pb.cache[key] = out
    return out


def identity_sequent(variant: str, a: Formula, p: Optional[Lit] = None, b: Optional[Formula] = None) -> Sequent:
    if variant == "a":
        return Sequent.of([a], [a])
    if variant == "b":
        return Sequent.of([], [a, negate_dt(a)])
    if variant == "c":
        return Sequent.of([a, negate_dt(a)], [])
    if p is None or b is None:
        raise PreconditionError(f"variant {variant} needs a decision literal and a second formula")
    dec = Dec(a, p, b)
    return {
        "d": Sequent.of([a], [p, dec]),
        "e": Sequent.of([p, b], [dec]),
        "f": Sequent.of([dec], [a, p]),
        "g": Sequent.of([dec, p], [b]),
    }[variant]


def identity_step(pb: ProofBuilder, variant: str, a: Formula, p: Optional[Lit] = None, b: Optional[Formula] = None) -> int:
    if variant == "a":
        return identity(pb, a)
    if variant == "b":
        return negation(pb, a)
    if variant == "c":
        return contradiction(pb, a)
    dec = Dec(a, p, b)
    if variant == "d":
        return pb.dec_right(identity(pb, a), pb.identity_literal(p), dec)
    if variant == "e":
        return pb.dec_right(pb.identity_literal(p), identity(pb, b), dec)
    if variant == "f":
        return pb.dec_left(identity(pb, a), pb.identity_literal(p), dec)
    return pb.dec_left(pb.identity_literal(p), identity(pb, b), dec)


def prop_identity(
    a: Formula,
    variant: str = "a",
    p: Optional[Lit] = None,
    b: Optional[Formula] = None,
    mode: str = MODE_TREE,
) -> Proof:
    """Cut-free proofs of the identity sequents of a DT formula.

    ``a``: ``A |- A``; ``b``: ``|- A, ~A``; ``c``: ``A, ~A |-``; with a literal
    ``p`` and a second formula ``B``, ``d``: ``A |- p, (A ? p : B)``; ``e``:
    ``p, B |- (A ? p : B)``; ``f``: ``(A ? p : B) |- A, p``; ``g``:
    ``(A ? p : B), p |- B``.
    """
    if variant not in IDENTITY_VARIANTS:
        raise PreconditionError(f"unknown identity variant {variant!r}")
    formulas = [a] if b is None else [a, b]
    for f in formulas:
        if CLASS_DT not in classify(f):
            raise PreconditionError(f"identity sequents are stated for DT formulas, got {f}")
    target = identity_sequent(variant, a, p, b)
    pb = ProofBuilder(System(SYSTEM_LDT), mode)
    return _done(pb, identity_step(pb, variant, a, p, b), target, f"identity ({variant})")


# Conj and Disj
def _split(ps: Sequence[Lit], qs: Sequence[Lit]) -> Tuple[List[Lit], List[Lit]]:
    ps, qs = list(ps), list(qs)
    if not ps or not qs:
        raise PreconditionError("both literal lists must be nonempty")
    return ps, qs


def conjdisj_sequent(ps: Sequence[Lit], qs: Sequence[Lit], variant: str) -> Sequent:
    ps, qs = _split(ps, qs)
    return {
        "a": Sequent.of([conj(ps + qs)], [conj(ps)]),
        "b": Sequent.of([conj(ps + qs)], [conj(qs)]),
        "c": Sequent.of([conj(ps), conj(qs)], [conj(ps + qs)]),
        "d": Sequent.of([disj(ps)], [disj(ps + qs)]),
        "e": Sequent.of([disj(qs)], [disj(ps + qs)]),
        "f": Sequent.of([disj(ps + qs)], [disj(ps), disj(qs)]),
    }[variant]


def conjdisj_step(pb: ProofBuilder, ps: Sequence[Lit], qs: Sequence[Lit], variant: str) -> int:
    ps, qs = _split(ps, qs)
    p, rest = ps[0], ps[1:]
    ax = pb.identity_literal
    if variant == "a":
        if not rest:
            return pb.dec_left(ax(p), ax(p), Dec(p, p, conj(qs)))
        src, dst = Dec(p, p, conj(rest + qs)), Dec(p, p, conj(rest))
        return dec_congruence(pb, src, dst, ax(p), conjdisj_step(pb, rest, qs, "a"))
    if variant == "b":
        tail = conjdisj_step(pb, rest, qs, "b") if rest else identity(pb, conj(qs))
        return pb.dec_left(ax(p), tail, Dec(p, p, conj(rest + qs)))
    if variant == "c":
        if not rest:
            return pb.dec_right(ax(p), identity(pb, conj(qs)), Dec(p, p, conj(qs)))
        src, dst = Dec(p, p, conj(rest)), Dec(p, p, conj(rest + qs))
        return dec_congruence(pb, src, dst, ax(p), conjdisj_step(pb, rest, qs, "c"))
    if variant == "d":
        if not rest:
            return pb.dec_right(ax(p), ax(p), Dec(disj(qs), p, p))
        src, dst = Dec(disj(rest), p, p), Dec(disj(rest + qs), p, p)
        return dec_congruence(pb, src, dst, conjdisj_step(pb, rest, qs, "d"), ax(p))
    if variant == "e":
        head = conjdisj_step(pb, rest, qs, "e") if rest else identity(pb, disj(qs))
        return pb.dec_right(head, ax(p), Dec(disj(rest + qs), p, p))
    if not rest:
        return pb.dec_left(identity(pb, disj(qs)), ax(p), Dec(disj(qs), p, p))
    src, dst = Dec(disj(rest + qs), p, p), Dec(disj(rest), p, p)
    return dec_congruence(pb, src, dst, conjdisj_step(pb, rest, qs, "f"), ax(p))


def prop_conjdisj(ps: Sequence[Lit], qs: Sequence[Lit], variant: str = "a", mode: str = MODE_TREE) -> Proof:
    """Cut-free LDT proofs relating ``Conj``/``Disj`` of ``ps``, ``qs`` and ``ps + qs``."""
    if variant not in CONJDISJ_VARIANTS:
        raise PreconditionError(f"unknown Conj/Disj variant {variant!r}")
    target = conjdisj_sequent(ps, qs, variant)
    pb = ProofBuilder(System(SYSTEM_LDT), mode)
    return _done(pb, conjdisj_step(pb, ps, qs, variant), target, f"conj/disj ({variant})")


# Normal forms of NDT formulas
def ndtnf_sequent(variant: str, a: Formula, p: Optional[Lit], b: Formula) -> Sequent:
    if variant in "abcd":
        if p is None:
            raise PreconditionError(f"variant {variant} needs a decision literal")
        whole = nf(Dec(a, p, b))
        return {
            "a": Sequent.of([nf(a)], [p, whole]),
            "b": Sequent.of([p, nf(b)], [whole]),
            "c": Sequent.of([whole], [nf(a), p]),
            "d": Sequent.of([p, whole], [nf(b)]),
        }[variant]
    whole = nf(Or(a, b))
    return {
        "e": Sequent.of([nf(a)], [whole]),
        "f": Sequent.of([nf(b)], [whole]),
        "g": Sequent.of([whole], [nf(a), nf(b)]),
    }[variant]


def ndtnf_step(pb: ProofBuilder, variant: str, a: Formula, p: Optional[Lit], b: Formula) -> int:
    ax = pb.identity_literal
    if variant in "efg":
        nfa, nfb = nf(a), nf(b)
        whole = Or(nfa, nfb)
        if variant == "e":
            return pb.or_right(identity(pb, nfa), whole)
        if variant == "f":
            return pb.or_right(identity(pb, nfb), whole)
        return pb.or_left(identity(pb, nfa), identity(pb, nfb), whole)
    n = p.complement()
    whole = nf(Dec(a, p, b))
    if variant == "a":

        def case(d: Formula) -> int:
            i = pb.dec_right(pb.axiom(right=[p, n]), identity(pb, d), Dec(n, n, d))
            return collapse_right(pb, i, whole)

        return or_cases(pb, nf(a), case)
    if variant == "b":

        def case(d: Formula) -> int:
            i = pb.dec_right(ax(p), identity(pb, d), Dec(p, p, d))
            return collapse_right(pb, i, whole)

        return or_cases(pb, nf(b), case)
    target = nf(a) if variant == "c" else nf(b)

    def case(leaf: Formula) -> int:
        d = leaf.high
        if variant == "c":
            if leaf.lit == n:
                i = pb.dec_left(ax(n), identity(pb, d), leaf)
                return pb.ensure(collapse_right(pb, i, target), right=[p])
            return pb.ensure(pb.dec_left(ax(p), ax(p), leaf), right=[target])
        if leaf.lit == n:
            i = pb.dec_left(pb.axiom(left=[p, n]), pb.axiom(left=[p, n]), leaf)
            return pb.ensure(i, right=[target])
        i = pb.dec_left(ax(p), identity(pb, d), leaf)
        return pb.ensure(collapse_right(pb, i, target), left=[p])

    return or_cases(pb, whole, case)


def prop_ndtnf(
    a: Formula,
    variant: str = "a",
    p: Optional[Lit] = None,
    b: Optional[Formula] = None,
    mode: str = MODE_TREE,
) -> Proof:
    """Cut-free LNDT proofs that ``NF`` commutes with decisions and disjunctions."""
    if variant not in NDTNF_VARIANTS:
        raise PreconditionError(f"unknown normal form variant {variant!r}")
    if b is None:
        raise PreconditionError("the normal form statements need a second formula")
    for f in (a, b):
        if CLASS_NDT not in classify(f):
            raise PreconditionError(f"normal forms are defined for NDT formulas, got {f}")
    target = ndtnf_sequent(variant, a, p, b)
    pb = ProofBuilder(System(SYSTEM_LNDT), mode)
    return _done(pb, ndtnf_step(pb, variant, a, p, b), target, f"normal form ({variant})")


# Clauses imply terms
def cls_tms_sequent(a: Formula) -> Sequent:
    return Sequent.of([c.formula() for c in cls(a)], [t.formula() for t in tms(a)])


def _prefixed(items, p: Lit, kind) -> List[Formula]:
    return [kind(p, x.formula()) for x in items]


def cls_tms_tree(pb: ProofBuilder, a: Formula) -> int:
    """Tree proof of ``Cls(a) |- Tms(a)`` with atomic cuts only."""
    if isinstance(a, Lit):
        return pb.identity_literal(a)
    p = a.lit
    n = p.complement()
    low_cls, high_cls = cls(a.low), cls(a.high)
    low_tms, high_tms = tms(a.low), tms(a.high)

    zero = cls_tms_tree(pb, a.low)
    for c in low_cls:
        zero = pb.or_left(pb.identity_literal(p), zero, Or(p, c.formula()))
    for t in low_tms:
        zero = pb.and_right(pb.axiom(right=[p, n]), zero, And(n, t.formula()))
    zero = pb.fit(zero, Sequent.of(_prefixed(low_cls, p, Or), _prefixed(low_tms, n, And) + [p]))

    one = cls_tms_tree(pb, a.high)
    for c in high_cls:
        one = pb.or_left(pb.axiom(left=[p, n]), one, Or(n, c.formula()))
    for t in high_tms:
        one = pb.and_right(pb.identity_literal(p), one, And(p, t.formula()))
    one = pb.fit(one, Sequent.of([p] + _prefixed(high_cls, n, Or), _prefixed(high_tms, p, And)))
    return pb.cut(zero, one, p)


def cls_tms_dag(pb: ProofBuilder, a: Formula) -> int:
    """Cut-free dag proof of ``Cls(a) |- Tms(a)``, one shared derivation per subformula."""
    key = ("cls-tms", a)
    if key in pb.cache:
        return pb.cache[key]
    if isinstance(a, Lit):
        out = pb.identity_literal(a)
        pb.cache[key] = out
        return out
    p = a.lit
    n = p.complement()
    low_cls, high_cls = cls(a.low), cls(a.high)
    low_tms, high_tms = tms(a.low), tms(a.high)
    low_proof = cls_tms_dag(pb, a.low)
    high_proof = cls_tms_dag(pb, a.high)

    # Cls'(low) |- Tms(low), p
    ready_p = low_proof
    for c in low_cls:
        ready_p = pb.or_left(pb.identity_literal(p), ready_p, Or(p, c.formula()))
    # Cls'(high) |- Tms'(high), ~p
    ready_n = high_proof
    for c in high_cls:
        ready_n = pb.or_left(pb.identity_literal(n), ready_n, Or(n, c.formula()))
    for t in high_tms:
        ready_n = pb.and_right(pb.axiom(right=[p, n]), ready_n, And(p, t.formula()))
    # p, Cls'(high) |- Tms(high)
    under_p = high_proof
    for c in high_cls:
        under_p = pb.or_left(pb.axiom(left=[p, n]), under_p, Or(n, c.formula()))

    out = low_proof
    for c in low_cls:
        out = pb.or_left(under_p, out, Or(p, c.formula()))
    for t in high_tms:
        out = pb.and_right(ready_p, out, And(p, t.formula()))
    for t in low_tms:
        out = pb.and_right(ready_n, out, And(n, t.formula()))
    out = pb.fit(out, cls_tms_sequent(a))
    pb.cache[key] = out
    return out


def prop_cls_tms(a: Formula, mode: str = "tree-atomic-cut") -> Proof:
    """1-LK proof of ``Cls(a) |- Tms(a)``.

    ``tree-atomic-cut`` gives a tree proof whose cuts are on literals;
    ``dag-cutfree`` gives a cut-free dag proof.
    """
    if CLASS_DT not in classify(a):
        raise PreconditionError(f"Cls needs a DT formula, got {a}")
    system = System(SYSTEM_DLK, 1)
    if mode == "tree-atomic-cut":
        pb = ProofBuilder(system, MODE_TREE)
        root = cls_tms_tree(pb, a)
    elif mode == "dag-cutfree":
        pb = ProofBuilder(system, MODE_DAG)
        root = cls_tms_dag(pb, a)
    else:
        raise PreconditionError(f"unknown mode {mode!r} for Cls |- Tms")
    return _done(pb, root, cls_tms_sequent(a), f"Cls |- Tms ({mode})")


def term_implies_clause(pb: ProofBuilder, term: Formula, clause: Formula) -> int:
    """``term |- clause`` for a conjunction and a disjunction of literals."""
    ts, cs = and_leaves(term), or_leaves(clause)
    i = initial(pb, ts, cs)
    if i is None:
        raise PreconditionError(f"{term} does not imply {clause} literally")
    i = collapse_left(pb, i, term)
    return collapse_right(pb, i, clause)


def prop_sigma_pi(a: Formula, term: int, clause: int) -> Proof:
    """Cut-free tree LK proof of ``F |- D`` for term ``F`` and clause ``D`` of ``a``."""
    if CLASS_DT not in classify(a):
        raise PreconditionError(f"Cls needs a DT formula, got {a}")
    terms, clauses = tms(a), cls(a)
    try:
        f, d = terms[term].formula(), clauses[clause].formula()
    except IndexError:
        raise PreconditionError(f"{a} has {len(terms)} terms and {len(clauses)} clauses") from None
    pb = ProofBuilder(System(SYSTEM_DLK, 1), MODE_TREE)
    return _done(pb, term_implies_clause(pb, f, d), Sequent.of([f], [d]), "term |- clause")


# Substitution and renaming lemmas
_ANDOR_MODE = {"a": "zero", "b": "zero", "c": "zero", "d": "one", "e": "one", "f": "one"}


def andor_sequent(variant: str, a: Formula, primed: Formula, b: Formula) -> Sequent:
    return {
        "a": Sequent.of([b], [primed]),
        "b": Sequent.of([a], [primed]),
        "c": Sequent.of([primed], [a, b]),
        "d": Sequent.of([primed], [b]),
        "e": Sequent.of([primed], [a]),
        "f": Sequent.of([a, b], [primed]),
    }[variant]


class SubstitutionClaims:
    """One of the six substitution claims, derived for every subformula at once."""

    def __init__(self, pb: ProofBuilder, variant: str, sub):
        self.pb = pb
        self.variant = variant
        self.sub = sub
        self.b = sub.b

    def primed(self, c: Formula) -> Formula:
        return self.sub(c)

    def __call__(self, c: Formula) -> int:
        return _cached(self.pb, ("andor", self.variant, self.b, c), lambda: self._derive(c))

    def _derive(self, c: Formula) -> int:
        pb, v, b = self.pb, self.variant, self.b
        cp = self.primed(c)
        if isinstance(c, Lit):
            ax = pb.identity_literal
            return {
                "a": lambda: pb.dec_right(identity(pb, b), ax(c), cp),
                "b": lambda: pb.dec_right(ax(c), ax(c), cp),
                "c": lambda: pb.dec_left(identity(pb, b), ax(c), cp),
                "d": lambda: pb.dec_left(ax(c), identity(pb, b), cp),
                "e": lambda: pb.dec_left(ax(c), ax(c), cp),
                "f": lambda: pb.dec_right(ax(c), identity(pb, b), cp),
            }[v]()
        if isinstance(c, Ext):
            body = pb.axioms.definition(c.name)
            body_p = pb.axioms.definition(cp.name)
            inner = self(body)
            if v == "a":
                return pb.cut(inner, pb.ext_axiom(body_p, cp), body_p)
            if v == "d":
                return pb.cut(pb.ext_axiom(cp, body_p), inner, body_p)
            if v in "bf":
                step = pb.cut(pb.ext_axiom(c, body), inner, body)
                return pb.cut(step, pb.ext_axiom(body_p, cp), body_p)
            step = pb.cut(pb.ext_axiom(cp, body_p), inner, body_p)
            return pb.cut(step, pb.ext_axiom(body, c), body)
        left, right = c.children()
        if v == "a":
            if isinstance(c, Or):
                return pb.or_right(self(left), cp)
            return pb.dec_right(self(left), self(right), cp)
        if v == "d":
            if isinstance(c, Or):
                return pb.or_left(self(left), self(right), cp)
            return pb.dec_left(self(left), self(right), cp)
        src, dst = (c, cp) if v in "bf" else (cp, c)
        if isinstance(c, Or):
            return or_congruence(pb, src, dst, self(left), self(right))
        return dec_congruence(pb, src, dst, self(left), self(right))


def lemma_andor(a: Formula, b: Formula, axioms: AxiomSet = EMPTY, variant: str = "a") -> Proof:
    """Dag proofs relating ``a``, ``b`` and ``a[0/b]`` (``a``-``c``) or ``a[1/b]`` (``d``-``f``).

    The proof carries the primed axioms it uses; only extension cuts occur.
    """
    if variant not in ANDOR_VARIANTS:
        raise PreconditionError(f"unknown substitution variant {variant!r}")
    if not b.is_atomic:
        raise PreconditionError(f"the substituted formula must be a literal or extension variable, got {b}")
    if And in a.connectives:
        raise PreconditionError(f"{a} is not an eNDT formula")
    sub, primed_axioms = make_substitution(a, axioms, _ANDOR_MODE[variant], b)
    used = axioms.closure([a, b]).union(primed_axioms)
    pb = ProofBuilder(extended_system([a, *(body for _, body in used)]), MODE_DAG, used)
    root = SubstitutionClaims(pb, variant, sub)(a)
    return _done(pb, root, andor_sequent(variant, a, sub(a), b), f"substitution ({variant})")


def lemma_rename(a: Formula, axioms: AxiomSet, suffix: Optional[str] = None, backward: bool = False) -> Proof:
    """``a |- a*`` (or ``a* |- a``) for the copy ``a*`` under renamed extension variables."""
    if And in a.connectives:
        raise PreconditionError(f"{a} is not an eNDT formula")
    suffix = suffix or fresh_suffix("rename", a)
    renamed, new_axioms = rename_extvars(a, axioms, suffix)
    mapping = {name: fresh_name(name, suffix) for name in axioms.dependencies(a.ext_names)}
    used = axioms.closure([a]).union(new_axioms)
    pb = ProofBuilder(extended_system([a, *(body for _, body in used)]), MODE_DAG, used)

    def claim(c: Formula) -> int:
        key = ("rename", backward, c)
        if key in pb.cache:
            return pb.cache[key]
        if not c.ext_names:
            out = identity(pb, c)
        elif isinstance(c, Ext):
            star = Ext(mapping[c.name])
            body, body_s = used.definition(c.name), used.definition(star.name)
            inner = claim(body)
            if backward:
                step = pb.cut(pb.ext_axiom(star, body_s), inner, body_s)
                out = pb.cut(step, pb.ext_axiom(body, c), body)
            else:
                step = pb.cut(pb.ext_axiom(c, body), inner, body)
                out = pb.cut(step, pb.ext_axiom(body_s, star), body_s)
        else:
            cs = rename_ext(c, mapping)
            src, dst = (cs, c) if backward else (c, cs)
            left, right = c.children()
            if isinstance(c, Dec):
                out = dec_congruence(pb, src, dst, claim(left), claim(right))
            else:
                out = or_congruence(pb, src, dst, claim(left), claim(right))
        pb.cache[key] = out
        return out

    target = Sequent.of([renamed], [a]) if backward else Sequent.of([a], [renamed])
    return _done(pb, claim(a), target, "renaming")


# Cut-free completeness
def _search(pb: ProofBuilder, left: Tuple[Formula, ...], right: Tuple[Formula, ...]) -> int:
    for k, f in enumerate(left):
        if f.is_atomic:
            continue
        rest = left[:k] + left[k + 1:]
        if isinstance(f, Dec):
            zero = _search(pb, rest + (f.low,), right + (f.lit,))
            one = _search(pb, rest + (f.lit, f.high), right)
            return pb.dec_left(zero, one, f)
        if isinstance(f, Or):
            return pb.or_left(_search(pb, rest + (f.left,), right), _search(pb, rest + (f.right,), right), f)
        return pb.and_left(_search(pb, rest + (f.left, f.right), right), f)
    for k, f in enumerate(right):
        if f.is_atomic:
            continue
        rest = right[:k] + right[k + 1:]
        if isinstance(f, Dec):
            zero = _search(pb, left, rest + (f.low, f.lit))
            one = _search(pb, left + (f.lit,), rest + (f.high,))
            return pb.dec_right(zero, one, f)
        if isinstance(f, Or):
            return pb.or_right(_search(pb, left, rest + (f.left, f.right)), f)
        return pb.and_right(_search(pb, left, rest + (f.left,)), _search(pb, left, rest + (f.right,)), f)
    i = initial(pb, left, right)
    if i is None:
        raise RuleError(f"{Sequent.of(left, right)} has no initial subsequent")
    return pb.weaken_to(i, Sequent.of(left, right))


def prove_cutfree(s: Sequent, system: System, max_vars: Optional[int] = None) -> Proof:
    """Cut-free tree proof of a valid sequent by inverting the logical rules.

    The leftmost non-atomic formula is decomposed first, antecedent before
    succedent. Proofs are exponential in the worst case.
    """
    for f in s.formulas():
        if f.ext_names:
            raise PreconditionError("cut-free search does not handle extension variables")
        if not system.admits(f):
            raise PreconditionError(f"{f} is not a formula of {system}")
    result = validity(s) if max_vars is None else validity(s, max_vars=max_vars)
    if not result.valid:
        raise InvalidSequentError(s, result.counterexample)
    pb = ProofBuilder(system, MODE_TREE)
    root = _search(pb, tuple(s.antecedent), tuple(s.succedent))
    proof = pb.finish(root)
    logger.debug("cut-free proof of %s in %d steps", s, len(proof))
    return proof


# Input families for measurements
def balanced_dt(leaves: int, prefix: str = "x") -> Formula:
    """A DT formula with ``leaves`` leaves and decisions on fresh variables per level."""
    if leaves < 1:
        raise PreconditionError("a DT formula has at least one leaf")
    counter = iter(range(leaves))

    def go(n: int, level: int) -> Formula:
        if n == 1:
            k = next(counter)
            return Lit(f"{prefix}{k % 5}", k % 2 == 0)
        half = n // 2
        return Dec(go(half, level + 1), Lit(f"d{level}"), go(n - half, level + 1))

    return go(leaves, 0)
