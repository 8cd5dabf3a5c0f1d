from __future__ import annotations

import json
import subprocess
import sys

import pytest

from spexlab.canonical import canonical_form
from spexlab.cli import run
from spexlab.constructions import friendship, matching, star, turan
from spexlab.graph6 import decode


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_census_example(capsys, validate):
    code, out, _ = call(capsys, "census", "--forbid", "K3", "--n", "5", "--mode", "full")
    assert code == 0
    doc = json.loads(out)
    validate(doc)
    assert doc["ex"] == 6 and doc["consistent"] is True


def test_decomp_bowtie(capsys, validate):
    code, out, _ = call(capsys, "decomp", "--forbid", friendship(2).to_graph6())
    assert code == 0
    doc = json.loads(out)
    validate(doc)
    assert set(doc["members"]) == {canonical_form(matching(2)).decode(), canonical_form(star(3)).decode()}
    assert (doc["beta"], doc["gamma"], doc["matching"]) == (1, 1, 2)


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["census", "--badflag"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err
    assert run(["census", "--forbid", "nosuchgraph", "--n", "4"]) == 2
    assert run(["decomp", "--forbid", "K2"]) == 2


def test_capacity_exit(capsys):
    assert run(["census", "--forbid", "K3", "--n", "9", "--mode", "full"]) == 3
    assert "capacity" in capsys.readouterr().err


def test_spectral(capsys, validate):
    code, out, _ = call(capsys, "spectral", "K2,3")
    doc = json.loads(out)
    validate(doc)
    assert abs(doc["rho"] - 6 ** 0.5) < 1e-10 and len(doc["perron"]) == 5
    assert call(capsys, "spectral", "--exact-compare", "C4", "K1,4")[1] == "EQ\n"
    assert call(capsys, "spectral", "--exact-compare", "P3", "K3")[1] == "LT\n"
    assert call(capsys, "spectral", "--exact-compare", "K3", "P3")[1] == "GT\n"


def test_construct_and_critical(capsys, validate):
    code, out, _ = call(capsys, "construct", "turan:n=6,p=3")
    doc = json.loads(out)
    validate(doc)
    assert doc["graph6"] == canonical_form(turan(6, 3)).decode()
    assert decode(doc["graph6"]).num_edges() == 12
    code, out, _ = call(capsys, "critical", "--forbid", "petersen", "--order")
    doc = json.loads(out)
    validate(doc)
    assert doc["order"] == 3
    code, out, _ = call(capsys, "critical", "--forbid", "friendship:k=2", "--q", "2")
    doc = json.loads(out)
    assert doc["report"]["verdict"] is False and doc["report"]["condition_i"]["subset"] == [0]


def test_verify(capsys, validate):
    code, out, err = call(capsys, "verify", "--forbid", "K3", "--n", "6")
    assert code == 0
    doc = json.loads(out)
    validate(doc)
    assert doc["matching_good"]["passed"] and "consistent" in err


def test_family_file(tmp_path, capsys):
    f = tmp_path / "fam.g6"
    f.write_text("# triangle and square\nBw\nCr\n")
    code, out, _ = call(capsys, "census", "--forbid", f"@{f}", "--n", "5")
    assert code == 0 and json.loads(out)["ex"] == 5
    assert run(["census", "--forbid", f"@{tmp_path / 'missing'}", "--n", "5"]) == 2


def test_report_and_manifest(tmp_path, capsys, monkeypatch, validate):
    monkeypatch.setenv("SPEXLAB_CACHE", str(tmp_path))
    for n in range(4, 7):
        assert call(capsys, "census", "--forbid", "K3", "--n", str(n))[0] == 0
    code, out, _ = call(capsys, "report", str(tmp_path), "--json")
    doc = json.loads(out)
    validate(doc)
    assert [r["n"] for r in doc["rows"]] == [4, 5, 6]
    assert all(r["prediction"] == "T_2(n)" and r["match"] == "yes" for r in doc["rows"])
    code, out, _ = call(capsys, "report", str(tmp_path))
    assert code == 0 and out.splitlines()[0].startswith("forbidden")
    lines = (tmp_path / "manifests.jsonl").read_text().splitlines()
    assert len(lines) >= 3
    for line in lines:
        validate(json.loads(line))


def test_report_strict_and_empty(tmp_path, capsys):
    code, out, _ = call(capsys, "report")
    assert code == 0 and len(out.splitlines()) == 1
    call(capsys, "-o", str(tmp_path / "census-a.json"), "census", "--forbid", "K3", "--n", "5")
    rec = json.loads((tmp_path / "census-a.json").read_text())
    rec["spex_graphs"] = [canonical_form(star(5)).decode()]
    (tmp_path / "census-a.json").write_text(json.dumps(rec))
    code, out, _ = call(capsys, "report", str(tmp_path), "--strict")
    assert code == 1 and "false" in out
    assert call(capsys, "report", str(tmp_path))[0] == 0


def test_byte_identical_runs(capsys, monkeypatch):
    a = call(capsys, "census", "--forbid", "C4", "--n", "6")[1]
    monkeypatch.setenv("SPEXLAB_WORKERS", "2")
    b = call(capsys, "census", "--forbid", "C4", "--n", "6")[1]
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spexlab", "construct", "petersen"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["edges"] == 15


def test_floats_have_17_digits(capsys):
    out = call(capsys, "spectral", "K2,3")[1]
    assert '"rho": 2.4494897427831779' in out
