import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import dt_formulas, edt_formulas, literal_lists, literals, ndt_formulas
from dtproof.const import CLASS_DT, MODE_DAG
from dtproof.constructions import cls, make_substitution, tms
from dtproof.exceptions import InvalidSequentError, PreconditionError
from dtproof.formula import Dec, Ext, Lit, Or, System, classify
from dtproof.generators import (
    ANDOR_VARIANTS,
    CONJDISJ_VARIANTS,
    IDENTITY_VARIANTS,
    NDTNF_VARIANTS,
    _ANDOR_MODE,
    andor_sequent,
    balanced_dt,
    cls_tms_sequent,
    conjdisj_sequent,
    identity_sequent,
    lemma_andor,
    lemma_rename,
    ndtnf_sequent,
    prop_cls_tms,
    prop_conjdisj,
    prop_identity,
    prop_ndtnf,
    prop_sigma_pi,
    prove_cutfree,
    system_for,
)
from dtproof.proof import check, stats
from dtproof.semantics import is_valid
from dtproof.sequent import Sequent

p, q, r = Lit("p"), Lit("q"), Lit("r")


def assert_cutfree_tree(proof):
    assert check(proof).ok, check(proof).reason
    s = stats(proof)
    assert s.cut_free and s.is_tree


@given(dt_formulas, st.sampled_from(IDENTITY_VARIANTS), literals, dt_formulas)
@settings(max_examples=60, deadline=None)
def test_identity_sequents(a, variant, lit, b):
    proof = prop_identity(a, variant, lit, b)
    assert_cutfree_tree(proof)
    assert proof.endsequent == identity_sequent(variant, a, lit, b)
    assert str(proof.system) == "LDT"


@given(literal_lists, literal_lists, st.sampled_from(CONJDISJ_VARIANTS))
@settings(max_examples=60, deadline=None)
def test_conj_disj(ps, qs, variant):
    proof = prop_conjdisj(ps, qs, variant)
    assert_cutfree_tree(proof)
    assert proof.endsequent == conjdisj_sequent(ps, qs, variant)


@given(ndt_formulas, st.sampled_from(NDTNF_VARIANTS), literals, ndt_formulas)
@settings(max_examples=60, deadline=None)
def test_normal_forms(a, variant, lit, b):
    proof = prop_ndtnf(a, variant, lit, b)
    assert_cutfree_tree(proof)
    assert proof.endsequent == ndtnf_sequent(variant, a, lit, b)


@given(dt_formulas)
@settings(max_examples=50, deadline=None)
def test_clauses_imply_terms(a):
    tree = prop_cls_tms(a, "tree-atomic-cut")
    assert check(tree).ok
    s = stats(tree)
    assert s.is_tree and s.atomic_cuts_only
    assert s.max_formula_depth <= 1
    dag = prop_cls_tms(a, "dag-cutfree")
    assert check(dag).ok
    assert stats(dag).cut_free
    assert tree.endsequent == dag.endsequent == cls_tms_sequent(a)


@given(dt_formulas, st.data())
@settings(max_examples=50, deadline=None)
def test_term_implies_clause(a, data):
    term = data.draw(st.integers(0, len(tms(a)) - 1))
    clause = data.draw(st.integers(0, len(cls(a)) - 1))
    proof = prop_sigma_pi(a, term, clause)
    assert_cutfree_tree(proof)
    assert proof.endsequent == Sequent.of([tms(a)[term].formula()], [cls(a)[clause].formula()])


@given(edt_formulas(disjunctions=True), literals, st.sampled_from(ANDOR_VARIANTS))
@settings(max_examples=60, deadline=None)
def test_substitution_lemmas(case, b, variant):
    a, axioms = case
    proof = lemma_andor(a, b, axioms, variant)
    assert check(proof).ok, check(proof).reason
    assert stats(proof).extension_cuts_only
    sub, _ = make_substitution(a, axioms, _ANDOR_MODE[variant], b)
    assert proof.endsequent == andor_sequent(variant, a, sub(a), b)
    assert is_valid(proof.endsequent, proof.axioms)


@given(edt_formulas(disjunctions=True), st.booleans())
@settings(max_examples=60, deadline=None)
def test_renaming_lemma(case, backward):
    a, axioms = case
    proof = lemma_rename(a, axioms, backward=backward)
    assert check(proof).ok, check(proof).reason
    assert stats(proof).extension_cuts_only
    assert is_valid(proof.endsequent, proof.axioms)
    side = proof.endsequent.succedent if backward else proof.endsequent.antecedent
    assert side == (a,)


@given(ndt_formulas)
@settings(max_examples=60, deadline=None)
def test_cutfree_search(f):
    proof = prove_cutfree(Sequent.of([f], [f]), system_for([f]))
    assert_cutfree_tree(proof)


def test_cutfree_search_in_lk():
    s = Sequent.parse("(p & (q | r)) |- (p & q), (p & r)")
    proof = prove_cutfree(s, System.parse("LK"))
    assert_cutfree_tree(proof)
    assert proof.endsequent == s


@pytest.mark.parametrize("text", ["|- p, ~p", "|- ~p, p", "p, ~p |-", "~q, q |-", "q |- q"])
def test_cutfree_initial_sequents_keep_their_order(text):
    proof = prove_cutfree(Sequent.parse(text), System.parse("LDT"))
    assert len(proof) == 1
    assert str(proof.endsequent) == text


def test_cutfree_search_rejects_invalid():
    with pytest.raises(InvalidSequentError) as err:
        prove_cutfree(Sequent.parse("p |- q"), System.parse("LDT"))
    assert err.value.counterexample == {"p": 1, "q": 0}
    with pytest.raises(PreconditionError):
        prove_cutfree(Sequent.parse("$e |- $e"), System.parse("eLDT"))
    with pytest.raises(PreconditionError):
        prove_cutfree(Sequent.parse("|- (p | ~p)"), System.parse("LDT"))


def test_dag_mode_is_smaller_on_shared_subformulas():
    shared = Dec(p, q, r)
    a = Dec(shared, Lit("s"), shared)
    tree = prop_identity(a)
    dag = prop_identity(a, mode=MODE_DAG)
    assert check(dag).ok
    assert len(dag) < len(tree)


def test_bad_arguments():
    with pytest.raises(PreconditionError):
        prop_identity(p, "z")
    with pytest.raises(PreconditionError):
        prop_identity(p, "d")
    with pytest.raises(PreconditionError):
        prop_identity(Or(p, q))
    with pytest.raises(PreconditionError):
        prop_conjdisj([], [p])
    with pytest.raises(PreconditionError):
        prop_ndtnf(p, "a", None, q)
    with pytest.raises(PreconditionError):
        prop_cls_tms(p, "forest")
    with pytest.raises(PreconditionError):
        prop_sigma_pi(Dec(q, p, r), 5, 0)
    with pytest.raises(PreconditionError):
        lemma_andor(p, Or(p, q))


def test_system_for():
    assert str(system_for([Dec(p, q, r)])) == "LDT"
    assert str(system_for([Or(p, q)])) == "LNDT"
    assert str(system_for([Or(Ext("e"), q)])) == "eLNDT"
    assert str(system_for([Ext("e")])) == "eLDT"


def test_balanced_dt():
    f = balanced_dt(6)
    assert f.leaf_size == 6
    assert CLASS_DT in classify(f)
    with pytest.raises(PreconditionError):
        balanced_dt(0)
