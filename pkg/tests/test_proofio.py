import pytest

from dtproof.axioms import AxiomSet
from dtproof.builder import ProofBuilder
from dtproof.exceptions import ProofFormatError
from dtproof.formula import Dec, Ext, Lit, System
from dtproof.proof import check
from dtproof.proofio import load_proof, read_proof, save_proof, write_proof


def test_write_then_read_keeps_the_proof(data_dir):
    proof = load_proof(data_dir / "identity_ldt.proof")
    assert read_proof(write_proof(proof)) == proof
    stripped = read_proof(write_proof(proof, notes=False))
    assert all(step.note is None for step in stripped.steps)


def test_inline_axioms(tmp_path):
    axioms = AxiomSet.parse("$e := (p ? q : r)")
    pb = ProofBuilder(System.parse("eLDT"), axioms=axioms)
    pb.ext_axiom(Dec(Lit("p"), Lit("q"), Lit("r")), Ext("e"))
    proof = pb.finish()
    text = write_proof(proof)
    assert "$e := (p ? q : r)" in text
    path = tmp_path / "ext.proof"
    save_proof(proof, path)
    again = load_proof(path)
    assert again == proof
    assert check(again).ok


def test_axioms_file_is_resolved_next_to_the_proof(tmp_path):
    (tmp_path / "defs.ax").write_text("$e := (p ? q : r)\n")
    (tmp_path / "x.proof").write_text("system: eLDT\naxioms: defs.ax\n0: $e |- (p ? q : r) ; ext\n")
    proof = load_proof(tmp_path / "x.proof")
    assert proof.axioms.names == ["e"]
    assert check(proof).ok


@pytest.mark.parametrize(
    "text, line",
    [
        ("0: p |- p ; ax\n", None),
        ("system: LDT\n", None),
        ("system: LDT\n1: p |- p ; ax\n", 2),
        ("system: LDT\n0: p |- p ; ax\n1: p |- p, q ; w-r(q) 1\n", 3),
        ("system: LDT\n0: p |- p ; frob\n", 2),
        ("system: LDT\nmode: forest\n0: p |- p ; ax\n", 2),
        ("system: LDT\n0: p |- (p ; ax\n", 2),
        ("system: QK\n0: p |- p ; ax\n", 1),
        ("system: LDT\nthis is not a step\n", 2),
    ],
)
def test_format_errors(text, line):
    with pytest.raises(ProofFormatError) as err:
        read_proof(text)
    assert err.value.line == line
