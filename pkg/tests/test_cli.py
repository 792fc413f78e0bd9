import json

import pytest

from overrank.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "10")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,pbar" and lines[-1] == "10,232" and len(lines) == 12


def test_validate(capsys):
    code, out, err = run(capsys, "validate", "--nmax", "20")
    assert code == 0 and "mismatches: 0" in err
    code, out, _ = run(capsys, "validate", "--nmax", "20", "--format", "json")
    assert json.loads(out)["notes"] == ["mismatches: 0"]


def test_transforms(capsys):
    code, out, _ = run(capsys, "transforms", "--which", "theta", "--tol", "1e-9")
    assert code == 0 and len(out.splitlines()) == 21


def test_dissect_row(capsys):
    code, out, _ = run(capsys, "dissect", "--nmax", "3")
    assert out.splitlines()[-1] == "3,0,3,4"


def test_table_routes_agree(capsys):
    _, a, _ = run(capsys, "table", "--nmax", "8", "--route", "brute")
    _, b, _ = run(capsys, "table", "--nmax", "8")
    assert a == b


def test_exit_status_on_failure(capsys):
    code, _, _ = run(capsys, "limit", "--z", "0.49", "--delta", "2", "--steps", "3")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--bogus"],
        ["dissect", "--c", "4"],
        ["dissect", "--a", "5"],
        ["limit", "--z", "1/2"],
        ["limit", "--z", "abc"],
        ["transforms", "--tol", "0"],
        ["tauberian", "--ray", "2"],
        ["validate", "--nmax", "61"],
        [],
    ],
)
def test_flag_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_engine_error(capsys):
    code, _, err = run(capsys, "tauberian", "--eps", "0.01")
    assert code == 3 and "TailBoundError" in err


def test_io_error(capsys, tmp_path):
    assert run(capsys, "count", "--n", "3", "--out", str(tmp_path / "missing" / "x.csv"))[0] == 4


def test_output_file_and_determinism(capsys, tmp_path):
    path = tmp_path / "scan.json"
    args = ["scan", "--kind", "cross", "--nmax", "120", "--format", "json", "--out", str(path)]
    assert run(capsys, *args)[0] == 0
    first = path.read_bytes()
    assert run(capsys, *args, "--threads", "3")[0] == 0
    assert path.read_bytes() == first
    data = json.loads(first)
    assert data["params"]["invocation"] == {"command": "scan", "a": 0, "c": 3, "kind": "cross", "nmax": 120}
    assert data["threshold_found"] == 19


def test_fraction_flags(capsys):
    code, out, _ = run(capsys, "limit", "--z", "1/3", "--format", "json")
    assert code == 0
    assert json.loads(out)["params"]["z"] == pytest.approx(1 / 3)
