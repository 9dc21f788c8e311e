from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import dt_formulas, literals
from dtproof.builder import ProofBuilder
from dtproof.const import MODE_DAG, MODE_TREE
from dtproof.exceptions import CheckFailure, SizeCapExceeded
from dtproof.formula import Lit, System
from dtproof.generators import prop_identity
from dtproof.proof import Proof, check, compact, stats, to_tree
from dtproof.proofio import load_proof
from dtproof.semantics import is_valid
from dtproof.sequent import Sequent

p, q = Lit("p"), Lit("q")


@pytest.fixture
def identity(data_dir):
    return load_proof(data_dir / "identity_ldt.proof")


def shared_cut(mode):
    pb = ProofBuilder(System.parse("LDT"), mode)
    a = pb.identity_literal(p)
    left = pb.weaken(a, right=[q])
    right = pb.weaken(a, left=[q])
    pb.cut(left, right, q)
    return pb.finish()


def test_bundled_proof_checks(identity):
    assert check(identity).ok
    s = stats(identity)
    assert s.steps == 15
    assert s.is_tree and s.cut_free
    assert identity.endsequent == Sequent.parse("(q ? p : r) |- (q ? p : r)")


def test_rejection_names_the_lowest_bad_step(identity):
    steps = list(identity.steps)
    steps[5] = replace(steps[5], sequent=Sequent.parse("p, r |- q, q"))
    steps[9] = replace(steps[9], sequent=Sequent.parse("p |- q"))
    report = check(replace(identity, steps=tuple(steps)))
    assert not report.ok
    assert report.step == 5
    with pytest.raises(CheckFailure) as err:
        report.raise_for_failure()
    assert err.value.step == 5


def test_rules_outside_the_system(identity):
    report = check(identity.with_system(System.parse("LK")))
    assert not report.ok and report.step == 6


def test_empty_and_unknown_mode(identity):
    assert not check(Proof(System.parse("LDT"), MODE_TREE, ())).ok
    assert not check(replace(identity, mode="forest")).ok


def test_tree_mode_forbids_reuse():
    dag = shared_cut(MODE_DAG)
    assert check(dag).ok
    assert not stats(dag).is_tree
    report = check(dag.with_system(dag.system, MODE_TREE))
    assert not report.ok
    assert "used twice" in report.reason


def test_to_tree_duplicates_shared_steps():
    dag = shared_cut(MODE_DAG)
    tree = to_tree(dag)
    assert check(tree).ok
    assert stats(tree).is_tree
    assert len(tree) == len(dag) + 1
    assert tree.endsequent == dag.endsequent
    with pytest.raises(SizeCapExceeded):
        to_tree(dag, cap=len(dag))


def test_compact_drops_unused_steps():
    dag = shared_cut(MODE_DAG)
    padded = Proof(dag.system, dag.mode, (dag.steps[0],) + tuple(
        replace(step, premises=tuple(j + 1 for j in step.premises)) for step in dag.steps
    ))
    assert check(padded).ok
    assert compact(padded) == dag


def test_cut_statistics():
    s = stats(shared_cut(MODE_TREE))
    assert s.cut_count == 1 and s.atomic_cut_count == 1
    assert s.atomic_cuts_only and not s.cut_free
    assert not s.extension_cuts_only
    assert s.as_dict()["cut_count"] == 1


@given(dt_formulas, st.sampled_from("abc"), literals, st.data())
@settings(max_examples=200, deadline=None)
def test_mutations_never_prove_invalid_sequents(a, variant, lit, data):
    proof = prop_identity(a, variant)
    k = data.draw(st.integers(0, len(proof) - 1))
    s = proof.steps[k].sequent
    side = data.draw(st.sampled_from([c for c in ("antecedent", "succedent") if getattr(s, c)]))
    cedent = list(getattr(s, side))
    cedent[data.draw(st.integers(0, len(cedent) - 1))] = lit
    steps = list(proof.steps)
    steps[k] = replace(steps[k], sequent=replace(s, **{side: tuple(cedent)}))
    mutated = replace(proof, steps=tuple(steps))
    if check(mutated).ok:
        assert is_valid(mutated.endsequent)
