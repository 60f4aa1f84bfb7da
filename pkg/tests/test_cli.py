import json

import pytest

from hgideals.cli import main
from hgideals.hypergraph import model_C


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def summary(out):
    return out.strip().splitlines()[-1]


def test_delta(capsys):
    code, out, _ = run(capsys, "delta", "--k", "2", "--l", "5")
    assert code == 0 and "edges=25" in summary(out)
    code, out, _ = run(capsys, "delta", "--k", "2", "--l", "3", "--format", "json")
    assert len(json.loads(out.rsplit("\n", 2)[0])["edges"]) == 5


def test_delta_bad_params(capsys):
    code, out, err = run(capsys, "delta", "--k", "1", "--l", "3")
    assert code == 2 and err and summary(out).startswith("RESULT status=error")


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--k", "2", "--l", "5")
    assert code == 0 and "total=171" in summary(out) and "classes=6" in summary(out)
    assert out.splitlines()[0].startswith("Type of ideal")
    code, out, _ = run(capsys, "census", "--k", "3", "--l", "5")
    assert code == 2


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities")
    assert code == 0 and "passed=19 failed=0" in summary(out)
    code, out, _ = run(capsys, "verify", "--suite", "incidence")
    assert code == 0 and "checks=3" in summary(out)
    code, out, _ = run(capsys, "verify", "--suite", "gb", "--k", "2", "--l", "4")
    assert code == 0 and "failed=0" in summary(out)


def test_budget_exceeded_exit(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "gb", "--k", "2", "--l", "4", "--budget-pairs", "1")
    assert code == 3 and "budget-exceeded" in summary(out)


def test_reports_are_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code, out, _ = run(capsys, "verify", "--suite", "sampling", "--k", "2", "--l", "4",
                           "--seed", "3", "--format", "json", "--out", str(path))
        assert code == 0 and out.count("\n") == 1
    assert a.read_bytes() == b.read_bytes()


def test_ci(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(model_C(3, 2, 5).to_json()))
    code, out, _ = run(capsys, "ci", str(path))
    assert code == 0 and "delta=2x5" in summary(out) and "census --k 2 --l 5" in out
    path.write_text(json.dumps({"row": "X", "columns": ["Y"], "cardinalities": {"X": 4, "Y": 4, "H": 2},
                                "hidden": ["H"], "statements": [{"left": "X", "right": ["Y"], "given": ["H"]}]}))
    code, out, _ = run(capsys, "ci", str(path), "--format", "json")
    assert code == 0 and "delta=none" in summary(out)
    path.write_text("{broken")
    code, out, _ = run(capsys, "ci", str(path))
    assert code == 2


def test_argparse_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2
