import csv
import io
import json

import pytest

from truncpascal import cli
from truncpascal.harness import EquivalenceReport
from truncpascal.matrix import matrix_from_json
from truncpascal.pascal import truncated


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_matrix_invertible(capsys):
    code, out, _ = run(capsys, "matrix", "--r", "0,1,2", "--x", "1,2,5")
    assert code == 0
    assert "det         = 6" in out and "invertible  = true" in out


def test_matrix_singular_json(capsys):
    code, out, _ = run(capsys, "matrix", "--r", "1,3,4", "--x", "1,2,5", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["det"] == "0" and data["invertible"] is False and data["dominates"] is False
    assert data["zero_block_witness"] == 1
    assert matrix_from_json(data["matrix"]) == truncated([1, 3, 4], [1, 2, 5])


def test_matrix_extended(capsys):
    code, out, _ = run(capsys, "matrix", "--r", "0,2,4,7", "--x", "1,2,5,8", "--extended", "--json")
    data = json.loads(out)
    assert data["n"] == 8 and data["complement"] == [0, 3, 4, 6, 7]
    ext = matrix_from_json(data["extended"])
    assert ext.shape == (9, 9)
    assert data["extended_det"] == data["det"] == "40"


def test_matrix_rectangular(capsys):
    code, out, _ = run(capsys, "matrix", "--r", "0,1", "--x", "1,2,5")
    assert code == 0 and "rectangular" in out


@pytest.mark.parametrize("argv", [
    ["matrix", "--r", "2,1", "--x", "1,2"],
    ["matrix", "--r", "a", "--x", "1"],
    ["matrix", "--r", "0,1", "--x", "0,5", "--n", "3", "--extended"],
    ["polya", "01/1"],
    ["polya", "0a/11"],
    ["decompose", "11/11"],
])
def test_bad_input_exits_nonzero(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code != 0 and err


def test_polya_command(capsys):
    code, out, _ = run(capsys, "polya", "010100/101101", "--json")
    data = json.loads(out)
    assert data["M"] == [1, 2, 3, 5, 5, 6] and data["polya"] is True
    _, out, _ = run(capsys, "polya", "010011/011010")
    assert "M         = [0, 2, 3, 3, 5, 6]" in out and "not Pólya" in out
    _, out, _ = run(capsys, "polya", "000/111", "--json")
    data = json.loads(out)
    assert data["identity"] and data["polya"]


@pytest.mark.parametrize("text,e1,e2", [
    ("0001000/1110111", [[0] * 7, [1] * 7], [[0, 0, 0, 1, 0, 0, 0], [1, 1, 1, 0, 1, 1, 1]]),
    ("1000110/1110010", [[0, 0, 0, 0, 1, 1, 0], [1, 1, 1, 1, 0, 1, 0]],
     [[1, 0, 0, 0, 0, 0, 0], [1, 1, 1, 0, 1, 1, 1]]),
    ("000/111", [[0, 0, 0], [1, 1, 1]], [[0, 0, 0], [1, 1, 1]]),
])
def test_decompose_command(capsys, text, e1, e2):
    code, out, _ = run(capsys, "decompose", text, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["E1"] == e1 and data["E2"] == e2 and data["violations"] == []


def test_verify_all(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "all", "4", "--output", str(path))
    assert code == 0 and out.count("PASS") == 3
    data = json.loads(path.read_text())
    reports = [EquivalenceReport.from_dict(r) for r in data["reports"]]
    assert [r.scope for r in reports] == ["main", "polya", "decompose"]
    assert all(r.ok for r in reports)


def test_verify_json_and_failure_exit(capsys):
    code, out, _ = run(capsys, "verify", "sumdot", "3", "--json")
    data = json.loads(out)
    assert code == 1 and data["ok"] is False
    assert data["reports"][0]["counterexamples_total"] == 4


def test_verify_cap(capsys):
    code, _, err = run(capsys, "verify", "main", "99")
    assert code == 2 and "cap" in err


def test_jobs_env_default(monkeypatch):
    monkeypatch.setenv(cli.JOBS_ENV, "3")
    args = cli.build_parser().parse_args(["verify", "main", "2"])
    assert args.jobs == 3


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "1")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 5
    assert rows[0] == {"r": "0", "x": "0", "det": "1", "dominates": "1", "polya": "1"}
    assert {"r": "1", "x": "0", "det": "0", "dominates": "0", "polya": "0"} in rows
