from __future__ import annotations

import json
import subprocess
import sys

import pytest

from hookforge.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, render, result_body, run_corpus, RunConfig


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_bessenrodt_json(capsys):
    code, out, _ = run(capsys, "verify", "bessenrodt", "--lambda", "8,4,3,2,2", "--bound", "12", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert set(doc) == {"meta", "result"}
    assert doc["result"]["check"] == "bessenrodt" and doc["result"]["pass"] is True
    assert doc["result"]["lambda"] == [8, 4, 3, 2, 2]


def test_non_thin_refused(capsys):
    code, _, err = run(capsys, "verify", "tectonic", "--lambda", "12,10,8,8,8,8,8,8,1,1,1", "--box", "40")
    assert code == EXIT_USAGE
    assert "x1+x2 = 8 > x3 = 2" in err


def test_thin_tectonic(capsys):
    code, out, _ = run(capsys, "verify", "tectonic", "--lambda", "3,1,1")
    assert code == EXIT_OK and json.loads(out)["result"]["pass"]


@pytest.mark.parametrize(
    "argv,flag",
    [
        (("verify", "gansner", "--lambda", "2,1"), "--cap"),
        (("verify", "hookstrip", "--d", "3"), "--ell"),
        (("verify", "bessenrodt"), "--lambda"),
        (("corpus",), "--max-size"),
        (("enumerate", "rpp", "--lambda", "2"), "--cap"),
    ],
)
def test_missing_parameter_named(capsys, argv, flag):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and flag in err


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "gansner", "--lambda", "1,2", "--cap", "3"),
        ("verify", "gansner", "--lambda", "1", "--cap", "-1"),
        ("verify", "nonsense"),
        ("verify", "hookstrip", "--d", "2", "--ell", "3"),
        ("verify", "bessenrodt", "--lambda", "3,2", "--bound", "2"),
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_failure_exit_code(monkeypatch, capsys):
    from hookforge import cli
    from hookforge.report import Report

    monkeypatch.setitem(cli.CHECKS, "gansner", (("lam", "cap"), lambda c: Report("gansner", {}, False)))
    assert run(capsys, "verify", "gansner", "--lambda", "1", "--cap", "2")[0] == EXIT_FAIL


def test_tsv_and_output_file(tmp_path, capsys):
    path = tmp_path / "out.tsv"
    code, out, _ = run(capsys, "series", "emit", "--lambda", "1", "--cap", "3", "--format", "tsv", "--output", str(path))
    assert code == EXIT_OK and out == ""
    text = path.read_text(encoding="utf-8")
    assert result_body(text, "tsv") == "1\t1\nq[0]\t1\nq[0]^2\t1\nq[0]^3\t1\n"
    assert text.startswith("# ")


def test_series_emit_external(capsys):
    code, out, _ = run(capsys, "series", "emit", "--lambda", "", "--cap", "2", "--side", "external", "--format", "tsv")
    assert code == EXIT_OK
    # hooks of the empty partition of length <= 2: q0, q-1 q0, q0 q1
    assert result_body(out, "tsv") == "1\t1\nq[0]\t1\nq[-1]*q[0]\t1\nq[0]*q[1]\t1\nq[0]^2\t1\n"


def test_enumerate_commands(capsys):
    code, out, _ = run(capsys, "enumerate", "partitions", "--d", "4")
    assert [r["lambda"] for r in json.loads(out)["result"]] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    code, out, _ = run(capsys, "enumerate", "rpp", "--lambda", "1", "--cap", "3")
    assert len(json.loads(out)["result"]) == 4
    code, out, _ = run(capsys, "enumerate", "spp", "--lambda", "", "--cap", "3")
    assert len(json.loads(out)["result"]) == 1 + 1 + 3 + 6
    code, out, _ = run(capsys, "enumerate", "hooks", "--lambda", "1", "--bound", "2")
    rows = json.loads(out)["result"]
    assert sum(r["side"] == "internal" for r in rows) == 1
    assert sum(r["side"] == "external" for r in rows) == 4
    code, out, _ = run(capsys, "enumerate", "fock", "--d", "2", "--ell", "1", "--format", "tsv")
    body = result_body(out, "tsv").splitlines()
    assert body[0] == "direction\tsource\ttarget\tmonomial"
    assert len(body) == 5


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"lambda": "2,1", "cap": 4, "format": "tsv"}))
    code, out, _ = run(capsys, "verify", "gansner", "--config", str(cfg))
    assert code == EXIT_OK and "cap\t4" in out
    code, out, _ = run(capsys, "verify", "gansner", "--config", str(cfg), "--cap", "5")
    assert "cap\t5" in out
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"colour": 1}))
    assert run(capsys, "verify", "gansner", "--config", str(bad))[0] == EXIT_USAGE


def test_jobs_env(monkeypatch, capsys):
    monkeypatch.setenv("HOOKFORGE_JOBS", "2")
    code, out, _ = run(capsys, "verify", "hookstrip", "--d", "3", "--ell", "2")
    assert code == EXIT_OK and json.loads(out)["meta"]["jobs"] == 2
    monkeypatch.setenv("HOOKFORGE_JOBS", "zero")
    assert run(capsys, "verify", "hookstrip", "--d", "3", "--ell", "2")[0] == EXIT_USAGE


def test_corpus_is_deterministic_and_parallel_invariant():
    serial = run_corpus(4, 4, 1)
    parallel = run_corpus(4, 4, 2)
    assert serial == parallel and serial["pass"]
    cfg = RunConfig(command="corpus", format="json")
    a = render(cfg, serial, {"elapsed_seconds": 1.0})
    b = render(cfg, parallel, {"elapsed_seconds": 2.0})
    assert a != b and result_body(a, "json") == result_body(b, "json")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hookforge", "verify", "fock", "--d", "2", "--ell", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["polynomial"] == "q[-1] + q[1]"
