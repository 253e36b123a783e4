import csv
import io
import json

import pytest

from signless.cli import main


def run_cli(capsysbinary, *argv):
    code = main(list(argv))
    out, err = capsysbinary.readouterr()
    return code, out.decode(), err.decode()


def test_eval_k3(tmp_path, capsysbinary):
    p = tmp_path / "k3.g6"
    p.write_text("Bw\n")
    code, out, _ = run_cli(capsysbinary, "eval", str(p))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    eq5 = [r for r in rows if r["bound"] == "EQ5" and r["k"] == "1"]
    assert eq5 and eq5[0]["equality"] == "true"
    # the failed diagnostic is reported but does not change the exit code
    assert any(r["bound"] == "EQ26" and r["holds"] == "false" for r in rows)


def test_eval_reports_failures(tmp_path, capsysbinary):
    p = tmp_path / "p4.txt"
    p.write_text("4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = run_cli(capsysbinary, "eval", str(p), "--format", "edges", "--out", "jsonl")
    assert code == 1
    rows = [json.loads(x) for x in out.splitlines()]
    bad = [r for r in rows if not r["holds"]]
    assert {r["bound"] for r in bad} == {"EQ9"}


def test_eval_errors(tmp_path, capsysbinary):
    p = tmp_path / "bad.g6"
    p.write_text("Bw\nnot graph6 !\n")
    code, _, err = run_cli(capsysbinary, "eval", str(p))
    assert code == 2 and f"{p}:2" in err
    code, _, err = run_cli(capsysbinary, "eval", str(tmp_path / "missing.g6"))
    assert code == 2
    code, _, _ = run_cli(capsysbinary, "eval", str(p), "--alpha", "x")
    assert code == 2


def test_eval_empty_file(tmp_path, capsysbinary):
    p = tmp_path / "empty.g6"
    p.write_text("")
    code, out, _ = run_cli(capsysbinary, "eval", str(p))
    assert code == 0 and out.count("\n") == 1
    code, out, _ = run_cli(capsysbinary, "eval", str(p), "--out", "jsonl")
    assert code == 0 and out == ""


def test_eval_grid_flags(tmp_path, capsysbinary):
    p = tmp_path / "c5.g6"
    p.write_text("Dhc\n")
    code, out, _ = run_cli(capsysbinary, "eval", str(p), "--alpha", "1/2,1", "--k", "2",
                           "--real-k", "0", "--tol", "1e-9", "--out", "jsonl")
    assert code == 0
    rows = [json.loads(x) for x in out.splitlines()]
    assert {r["alpha"] for r in rows if r["alpha"] is not None} == {0.5}
    assert {r["k"] for r in rows if r["bound"] in ("EQ5", "EQ10")} == {2}
    assert {r["k"] for r in rows if r["bound"] == "EQ17"} == {0}


@pytest.mark.parametrize("n, count", [(3, 4), (4, 38)])
def test_enumerate_counts(capsysbinary, n, count):
    code, out, _ = run_cli(capsysbinary, "enumerate", "--n", str(n), "--connected-only")
    assert out.startswith(f"graphs evaluated: {count}\n")
    assert code in (0, 1)


def test_enumerate_limits(capsysbinary):
    assert run_cli(capsysbinary, "enumerate", "--n", "8")[0] == 2
    assert run_cli(capsysbinary, "enumerate", "--n", "1")[0] == 2


def test_enumerate_report_file(tmp_path, capsysbinary):
    rep = tmp_path / "r.csv"
    code, out, _ = run_cli(capsysbinary, "enumerate", "--n", "3", "--report", str(rep))
    rows = list(csv.DictReader(rep.open()))
    assert {r["graph"] for r in rows} == {f"n3:{mask}" for mask in range(8)}
    assert "graphs evaluated: 8" in out


def test_enumerate_env_tolerance(monkeypatch, capsysbinary):
    monkeypatch.setenv("SIGNLESS_TOL", "0.5")
    _, loose, _ = run_cli(capsysbinary, "enumerate", "--n", "4", "--connected-only")
    hits_loose = int(loose.split("equality hits: ")[1].split()[0])
    monkeypatch.delenv("SIGNLESS_TOL")
    _, strict, _ = run_cli(capsysbinary, "enumerate", "--n", "4", "--connected-only")
    hits_strict = int(strict.split("equality hits: ")[1].split()[0])
    assert hits_loose > hits_strict
    # an explicit flag wins over the environment
    monkeypatch.setenv("SIGNLESS_TOL", "0.5")
    _, flagged, _ = run_cli(capsysbinary, "enumerate", "--n", "4", "--connected-only", "--tol", "1e-9")
    assert flagged == strict


@pytest.mark.parametrize("name, rng", [("complete", "3:8"), ("star", "4:8"), ("empty", "3:6"),
                                        ("complete_bipartite", "3:5")])
def test_family_expectations_met(capsysbinary, name, rng):
    code, out, err = run_cli(capsysbinary, "family", name, "--n", rng)
    assert "NOT MET" not in err
    assert err.count(": ok") > 0
    assert code == 0


def test_family_complete_lines(capsysbinary):
    _, _, err = run_cli(capsysbinary, "family", "complete", "--n", "3:8")
    for n in range(3, 9):
        assert f"complete({n}): EQ5 k=1 equality: ok" in err
        assert f"complete({n}): EQ12 alpha=-1 k=1 equality: ok" in err


def test_family_odd_cycles(capsysbinary):
    code, _, err = run_cli(capsysbinary, "family", "cycle", "--n", "5")
    assert "cycle(5): tree_products passes: ok" in err
    # EQ12 fails on odd cycles at negative alpha
    assert code == 1


def test_family_errors(capsysbinary):
    assert run_cli(capsysbinary, "family", "petersen", "--n", "5")[0] == 2
    assert run_cli(capsysbinary, "family", "double_star", "--n", "5")[0] == 2
    assert run_cli(capsysbinary, "family", "cycle", "--n", "a:b")[0] == 2
