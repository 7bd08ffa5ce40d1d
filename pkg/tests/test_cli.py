"""Command-line interface: exit codes, output formats, report content."""

import json

import numpy as np
import pytest

import whakit as wk
from whakit import whafile
from whakit.cli import EX_AXIOM, EX_NOFILE, EX_OK, EX_STAGE, EX_USAGE, analyze_wha, main

PHI = (1 + np.sqrt(5)) / 2


@pytest.fixture()
def z3_file(z3, tmp_path):
    path = tmp_path / "z3.wha.json"
    whafile.save(z3, path)
    return str(path)


@pytest.fixture()
def m23_file(m23, tmp_path):
    path = tmp_path / "m23.wha.json"
    whafile.save(m23, path)
    return str(path)


def test_validate_good_file(z3_file, capsys):
    assert main(["validate", z3_file]) == EX_OK
    out = capsys.readouterr().out
    assert "OK" in out
    assert "coassociativity" in out


def test_validate_json_format(z3_file, capsys):
    assert main(["validate", z3_file, "--format", "json"]) == EX_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] is True
    assert doc["dim"] == 3
    names = [c["name"] for c in doc["checks"]]
    assert "antipode agrees with solved antipode" in names


def test_validate_broken_file_names_the_axiom(z3, tmp_path, capsys):
    broken = wk.perturb(z3, field="comultiplication", magnitude=1e-3, seed=2)
    path = tmp_path / "broken.wha.json"
    whafile.save(broken, path)
    assert main(["validate", str(path)]) == EX_AXIOM
    out = capsys.readouterr().out
    assert "FAILED" in out
    assert "FAIL" in out


def test_missing_file(capsys):
    assert main(["validate", "/nonexistent/nope.wha.json"]) == EX_NOFILE
    assert "no such file" in capsys.readouterr().err


def test_schema_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"schema_version": 1}')
    assert main(["validate", str(path)]) == EX_STAGE


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["validate"])  # missing path
    assert exc.value.code == EX_USAGE


def test_generate_requires_size_when_family(capsys):
    assert main(["generate", "cyclic"]) == EX_USAGE
    assert main(["generate", "sweedler-h4", "3"]) == EX_USAGE


def test_generate_and_validate_round_trip(tmp_path, capsys):
    out = str(tmp_path / "s3.wha.json")
    assert main(["generate", "symmetric", "3", "-o", out]) == EX_OK
    assert main(["validate", out]) == EX_OK


def test_generate_writes_provenance(tmp_path):
    out = tmp_path / "z4.wha.json"
    assert main(["generate", "cyclic", "4", "-o", str(out)]) == EX_OK
    doc = json.loads(out.read_text())
    assert doc["metadata"]["provenance"] == "whakit generate cyclic 4"


def test_dualize(z3_file, tmp_path, capsys):
    out = str(tmp_path / "dual.wha.json")
    assert main(["dualize", z3_file, "-o", out]) == EX_OK
    d = whafile.load(out)
    z3 = whafile.load(z3_file)
    assert np.linalg.norm(d.algebra.c - wk.dual_wha(z3).algebra.c) < 1e-12


def test_analyze_text_output(m23_file, capsys):
    assert main(["analyze", m23_file]) == EX_OK
    out = capsys.readouterr().out
    for section in ("== axioms ==", "== structure ==", "== haar ==", "== grouplike ==", "== sectors ==", "== index =="):
        assert section in out
    assert "delta = 6.8541020" in out


def test_analyze_json_content(m23_file, capsys):
    assert main(["analyze", m23_file, "--format", "json"]) == EX_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] is True
    st = doc["stages"]
    assert st["structure"]["dims"] == {"A": 13, "A_L": 2, "A_R": 2, "Z_L": 1, "Z_R": 1, "hypercenter": 1}
    assert st["structure"]["flags"]["weak_kac"] is False
    assert st["sectors"]["delta"] == pytest.approx(2 + 3 * PHI, abs=1e-6)
    assert st["sectors"]["d_vector"] == pytest.approx([1.0, PHI], abs=1e-6)
    assert st["index"]["markov_index"] == pytest.approx(2 + 3 * PHI, abs=1e-6)
    assert st["index"]["haar_index"] == pytest.approx(5 + np.sqrt(5), abs=1e-6)


def test_analyze_reports_typed_absences_for_h4(h4, tmp_path, capsys):
    path = tmp_path / "h4.wha.json"
    whafile.save(h4, path)
    assert main(["analyze", str(path), "--format", "json"]) == EX_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] is True
    for stage in ("haar", "grouplike", "sectors", "index"):
        assert doc["stages"][stage]["absent"] == "NoHaar"
    assert doc["stages"]["structure"]["flags"]["semisimple"] is False


def test_analyze_per_component_index(tmp_path, capsys):
    w = wk.groupoid_wha(wk.disjoint_union(wk.pair_groupoid(2), wk.cyclic_group(2)))
    path = tmp_path / "du.wha.json"
    whafile.save(w, path)
    assert main(["analyze", str(path), "--format", "json"]) == EX_OK
    doc = json.loads(capsys.readouterr().out)
    comps = doc["stages"]["index"]["components"]
    assert sorted(c["dim"] for c in comps) == [2, 4]
    for c in comps:
        assert c["markov_index"] == pytest.approx(2.0, abs=1e-6)


def test_analyze_on_perturbed_file_fails_axioms(z3, tmp_path, capsys):
    broken = wk.perturb(z3, field="structure_constants", magnitude=1e-3, seed=3)
    path = tmp_path / "b.wha.json"
    whafile.save(broken, path)
    assert main(["analyze", str(path)]) == EX_AXIOM
    assert "remaining stages skipped" in capsys.readouterr().out


def test_crossprod_translation(capsys):
    assert main(["crossprod", "translation", "3", "--format", "json"]) == EX_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["crossed_dim"] == 9
    assert doc["expected_dim"] == 9
    assert doc["block_sizes"] == [3]
    assert doc["galois_bijective"] is True
    assert doc["regular"] is False
    assert any("(ii)" in c for c in doc["failing_clauses"])


def test_crossprod_translation_usage_error(capsys):
    assert main(["crossprod", "translation", "nonsense"]) == EX_USAGE


def test_crossprod_dual_regular(tmp_path, capsys):
    p2 = wk.pair_groupoid_wha(2)
    path = tmp_path / "p2.wha.json"
    whafile.save(p2, path)
    assert main(["crossprod", "dual-regular", str(path), "--format", "json"]) == EX_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["crossed_dim"] == 8
    assert doc["block_sizes"] == [2, 2]
    assert doc["regular"] is True
    assert doc["failing_clauses"] == []


def test_crossprod_smash(z3_file, capsys):
    assert main(["crossprod", "smash", z3_file, "--format", "json"]) == EX_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["crossed_dim"] == 9
    assert doc["block_sizes"] == [3]


def test_output_flag_writes_file_instead_of_stdout(z3_file, tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["validate", z3_file, "--format", "json", "-o", str(out)]) == EX_OK
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["ok"] is True


def test_analyze_wha_is_reusable_in_memory(z3):
    doc = analyze_wha(z3)
    assert doc["ok"] is True
    assert doc["stages"]["sectors"]["delta"] == pytest.approx(3.0, abs=1e-9)
    assert doc["stages"]["haar"]["criterion"] is True
