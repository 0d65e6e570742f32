import json
import shutil
import subprocess

import pytest

from algebroid.cli import main

from .conftest import FIXTURES


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def fx(name):
    return FIXTURES / (name + ".json")


def test_check_clean_family(capsys):
    code, out, _ = run(capsys, "check", fx("sl2-family-l1"))
    assert code == 0 and "PASS  axioms: 0 violations" in out


@pytest.mark.parametrize("name", ["mutant-family-l1-brk-0-1-2", "mutant-family-l1-mul-1-1-0",
                                  "tca-mutant-family-l1-pair1-0-1-0"])
def test_check_mutants_exit_1_with_witness(capsys, name):
    code, out, _ = run(capsys, "check", fx(name))
    fails = [l for l in out.splitlines() if l.startswith("FAIL") and " at (" in l]
    assert code == 1 and fails


def test_check_violation_line_uses_labels(capsys):
    _, out, _ = run(capsys, "check", fx("mutant-family-l1-brk-0-1-2"))
    assert "FAIL  [u,a.v]=pi(u)(a).v+a.[u,v]: at (e, a0, f)" in out


def test_check_truncated_exits_2_with_position(capsys, tmp_path):
    p = tmp_path / "t.json"
    p.write_text(fx("sl2-family-l1").read_text()[:200])
    code, _, err = run(capsys, "check", p)
    assert code == 2 and "t.json:" in err


def test_check_kind_mismatch_and_missing_file(capsys, tmp_path):
    assert run(capsys, "check", fx("sl2-family-l1"), "--kind", "tca")[0] == 2
    assert run(capsys, "check", tmp_path / "none.json")[0] == 2


@pytest.mark.parametrize("name", ["comm-dual-numbers", "leibniz-sl2-V3", "tca-lie-pair-sl2-V3"])
def test_check_other_kinds(capsys, name):
    code, out, _ = run(capsys, "check", fx(name))
    assert code == 0 and "FAIL" not in out


def test_check_tca_prints_module_characterization(capsys):
    _, out, _ = run(capsys, "check", fx("tca-family-l1"))
    assert "PASS  C0C1-iii-symmetric" in out


def test_check_json_shape(capsys):
    code, out, _ = run(capsys, "check", fx("mutant-family-l1-pair-2-2-0"), "--json")
    doc = json.loads(out)
    assert code == 1 and doc["fixture"] == "mutant-family-l1-pair-2-2-0"
    bad = [c for c in doc["checks"] if not c["pass"]]
    assert bad and all("witness" in c for c in bad[1:])


def test_invariants_family(capsys):
    code, out, _ = run(capsys, "invariants", fx("sl2-family-l1"))
    assert code == 0
    assert out.splitlines()[-1] == "rad = 0; Ann = dA = Leib (dim 2); Ker d = span{1}; A local"
    code, out, _ = run(capsys, "invariants", fx("sl2-family-l3"), "--json")
    assert json.loads(out)["subspaces"]["Leib"]["dim"] == 6


def test_invariants_sl2_over_C(capsys):
    _, out, _ = run(capsys, "invariants", fx("sl2-over-C"))
    assert "Ker d = A" in out and "Leib = 0" in out


def test_invariants_rejects_invalid_and_wrong_kind(capsys):
    assert run(capsys, "invariants", fx("mutant-family-l1-pair-2-2-0"))[0] == 1
    assert run(capsys, "invariants", fx("tca-family-l1"))[0] == 2


def test_family_emit_and_verify(capsys, tmp_path):
    out_file = tmp_path / "f2.json"
    assert run(capsys, "family", "--l", 2, "--emit", "-o", out_file)[0] == 0
    assert run(capsys, "check", out_file)[0] == 0
    code, out, _ = run(capsys, "family", "--l", 1, "--verify")
    assert code == 0 and "FAIL" not in out
    assert run(capsys, "family", "--l", 0, "--verify")[0] == 2
    assert run(capsys, "family", "--l", 1)[0] == 2


def test_family_emit_stdout_matches_corpus(capsys):
    _, out, _ = run(capsys, "family", "--l", 3, "--emit")
    assert out == fx("sl2-family-l3").read_text()


@pytest.mark.parametrize("name,args,verdict", [
    ("sl2-family-l1", ["--levi", "e,f,h"], "IndecomposableNonSimple via Thm 1.2(i)"),
    ("sl2-family-l1", [], "IndecomposableNonSimple via Thm 1.2(i)"),
    ("sl2-family-l2", [], "IndecomposableNonSimple via Thm 1.2(ii)"),
    ("sl2-family-l1", ["--levi", "1,0,0,0,0;0,1,0,0,0;0,0,1,0,0"], "IndecomposableNonSimple via Thm 1.2(i)"),
    ("sl2-over-C", [], "NoVerdict: clause (a) fails"),
    ("mutant-family-l1-brk-0-1-2", [], "NoVerdict: not a vertex algebroid"),
])
def test_criteria(capsys, name, args, verdict):
    code, out, _ = run(capsys, "criteria", fx(name), *args)
    assert code == 0 and out.splitlines()[-1].startswith("verdict: " + verdict)


def test_criteria_json_and_bad_levi(capsys):
    code, out, _ = run(capsys, "criteria", fx("sl2-family-l1"), "--json")
    doc = json.loads(out)
    assert doc["verdict"].endswith("Thm 1.2(i)") and doc["fixture"] == "sl2-family-l1"
    assert {"id", "pass"} <= set(doc["checks"][0])
    assert run(capsys, "criteria", fx("sl2-family-l1"), "--levi", "x,y")[0] == 2


@pytest.mark.parametrize("args,verdict", [(["--variant", "unit"], "INFEASIBLE"),
                                          (["--variant", "nil"], "INFEASIBLE"),
                                          (["--reference"], "FEASIBLE")])
def test_probe(capsys, args, verdict):
    code, out, _ = run(capsys, "probe", *args)
    assert code == 0 and out.splitlines()[-1] == verdict
    code, out, _ = run(capsys, "probe", *args, "--json")
    assert json.loads(out)["verdict"] == verdict


def test_usage_errors_exit_2(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "probe", "--variant", "other")[0] == 2
    assert run(capsys, "--help")[0] == 0


@pytest.mark.skipif(shutil.which("algebroid") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["algebroid", "probe", "--variant", "nil"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip().endswith("INFEASIBLE")
