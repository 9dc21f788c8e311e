import json

import pytest

from dtproof.cli import main
from dtproof.const import EXIT_CHECK_FAILED, EXIT_IO_ERROR, EXIT_OK
from dtproof.proof import check
from dtproof.proofio import load_proof


@pytest.fixture
def identity_path(data_dir):
    return str(data_dir / "identity_ldt.proof")


def run_json(capsys, argv):
    code = main(["--json", *argv])
    return code, json.loads(capsys.readouterr().out)


def test_check(capsys, identity_path):
    assert main(["check", identity_path]) == EXIT_OK
    assert "ok: 15 steps" in capsys.readouterr().out


def test_check_json_with_oracle(capsys, identity_path):
    code, report = run_json(capsys, ["check", "--oracle", identity_path])
    assert code == EXIT_OK
    assert set(report) == {"schema", "command", "inputs", "outcome", "stats", "timing"}
    assert report["outcome"] == "ok"
    assert report["stats"]["valid"] is True
    assert report["stats"]["cut_count"] == 0


def test_check_oracle_bound(capsys, identity_path):
    code, report = run_json(capsys, ["--max-vars", "1", "check", "--oracle", identity_path])
    assert code == EXIT_OK
    assert report["stats"]["valid"] is None


def test_rejected_proof(capsys, tmp_path, identity_path):
    text = open(identity_path).read().replace("5: p, r |- q, p ;", "5: p, r |- q, q ;")
    broken = tmp_path / "broken.proof"
    broken.write_text(text)
    assert main(["check", str(broken)]) == EXIT_CHECK_FAILED
    assert "step 5" in capsys.readouterr().err


def test_missing_file(capsys, tmp_path):
    assert main(["check", str(tmp_path / "nowhere.proof")]) == EXIT_IO_ERROR
    assert capsys.readouterr().err.startswith("error:")


def test_bad_settings(capsys, identity_path):
    assert main(["--max-vars", "0", "check", identity_path]) == EXIT_IO_ERROR


def test_gen_cutfree(capsys):
    assert main(["gen", "cutfree", "--sequent", "|- p, ~p"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "system: LDT" in out
    assert "|- p, ~p ; ax" in out


def test_gen_invalid_parameters(capsys):
    assert main(["gen", "identity", "--formula", "(p |"]) == EXIT_IO_ERROR
    assert main(["gen", "identity", "--formula", "(p | q)"]) == EXIT_IO_ERROR


def test_gen_then_translate(capsys, tmp_path):
    proof_path = tmp_path / "conj.proof"
    argv = ["gen", "conjdisj", "--ps", "p, q", "--qs", "r", "--variant", "c", "-o", str(proof_path)]
    assert main(argv) == EXIT_OK
    assert check(load_proof(proof_path)).ok
    out_path = tmp_path / "out.proof"
    assert main(["translate", str(proof_path), "--to", "dLK(1)", "-o", str(out_path)]) == EXIT_OK
    translated = load_proof(out_path)
    assert str(translated.system) == "dLK(1)"
    assert check(translated).ok


def test_translate_same_system(capsys, identity_path):
    assert main(["translate", identity_path, "--to", "LDT"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "system: LDT" in out
    assert "nothing to do" in out


def test_translate_json(capsys, identity_path):
    code, report = run_json(capsys, ["translate", identity_path, "--to", "LK"])
    assert code == EXIT_OK
    assert report["stats"]["route"] == ["elndt-to-lk"]
    assert "exponent" in report["stats"]["simulations"][0]


def test_translate_composite_route(capsys, tmp_path):
    proof_path = tmp_path / "clstms.proof"
    assert main(["gen", "clstms", "--formula", "(q ? p : r)", "-o", str(proof_path)]) == EXIT_OK
    capsys.readouterr()
    code, report = run_json(capsys, ["translate", str(proof_path), "--to", "dLK(2)"])
    assert code == EXIT_OK
    assert report["stats"]["route"] == ["1lk-to-ldt", "lndt-to-2lk"]


def test_translate_without_route(capsys, identity_path):
    assert main(["translate", identity_path, "--to", "eLNDT"]) == EXIT_IO_ERROR
    assert "no translation" in capsys.readouterr().err


def test_translate_wrong_source(capsys, identity_path):
    assert main(["translate", identity_path, "--from", "LNDT", "--to", "LDT"]) == EXIT_IO_ERROR


def test_bp_eval(capsys, data_dir):
    path = str(data_dir / "majority4.bp")
    assert main(["bp", "eval", path, "--assign", "w=1,x=1,y=0,z=0"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1"
    assert main(["bp", "eval", path, "--assign", "w=1,x=0,y=0,z=0"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "0"


def test_bp_compare(capsys, data_dir):
    path = str(data_dir / "majority4.bp")
    code, report = run_json(capsys, ["bp", "iso", path, path])
    assert report["stats"]["equal"] is True
    code, report = run_json(capsys, ["bp", "obdd", path, "--order", "w,x,y,z"])
    assert report["stats"]["obdd"] is True
    assert main(["bp", "iso", path]) == EXIT_IO_ERROR


def test_bp_to_edt(capsys, data_dir):
    assert main(["bp", "to-edt", str(data_dir / "majority4.bp")]) == EXIT_OK
    out = capsys.readouterr().out
    assert "$e31 := (0 ? z : 1)" in out
    assert "formula: ($e10 ? w : $e11)" in out


def test_eval_and_classify(capsys, data_dir):
    axioms = str(data_dir / "majority4.ax")
    assert main(["eval", "($e10 ? w : $e11)", "--axioms", axioms, "--assign", "w=0,x=1,y=1,z=0"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1"
    assert main(["classify", "(q ? p : r)"]) == EXIT_OK
    assert capsys.readouterr().out.split() == ["DT", "NDT", "eDT", "eNDT"]
    assert main(["eval", "(p | q)", "--assign", "p=0"]) == EXIT_IO_ERROR


def test_bench(capsys):
    code, report = run_json(capsys, ["bench", "ldt-to-1lk", "--sizes", "2,4"])
    assert code == EXIT_OK
    rows = report["stats"]["rows"]
    assert [row["n"] for row in rows] == [2, 4]
    assert report["stats"]["slope"] is not None
    assert main(["bench", "elndt-to-lk", "--sizes", "2"]) == EXIT_OK
    assert "output_size" in capsys.readouterr().out


def test_error_report_keeps_the_arguments(capsys, identity_path):
    code, report = run_json(capsys, ["translate", identity_path, "--to", "eLNDT"])
    assert code == EXIT_IO_ERROR
    assert report["outcome"] == "error"
    assert report["inputs"]["proof"] == identity_path
    assert report["inputs"]["target"] == "eLNDT"
    assert "no translation" in report["stats"]["error"]


def test_json_report_carries_the_output(capsys, tmp_path):
    code, report = run_json(capsys, ["gen", "cutfree", "--sequent", "|- p, ~p"])
    assert code == EXIT_OK
    assert report["stats"]["output_text"].startswith("system: LDT")
    proof_path = tmp_path / "out.proof"
    code, report = run_json(capsys, ["gen", "cutfree", "--sequent", "|- p, ~p", "-o", str(proof_path)])
    assert "output_text" not in report["stats"]
    assert report["inputs"]["output"] == str(proof_path)
    assert str(load_proof(proof_path).endsequent) == "|- p, ~p"
