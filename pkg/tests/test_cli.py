import json
import subprocess
import sys
from pathlib import Path

import pytest

from skewschur.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_text(capsys):
    assert run(capsys, "expand", "2,1/1", "--vars", "2") == (0, "(2):1 (1,1):1\n", "")


def test_expand_trivial(capsys):
    code, out, _ = run(capsys, "expand", "1/", "--vars", "1")
    assert (code, out) == (0, "(1):1\n")


def test_expand_json_golden(capsys):
    code, out, _ = run(capsys, "expand", "3,2,1/2,1", "--vars", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 3
    assert {"partition": [2, 1], "coefficient": 2} in data
    assert data == json.loads((GOLDEN / "expand_321_21.json").read_text())


def test_expand_zero_polynomial(capsys):
    code, out, _ = run(capsys, "expand", "3,3,3", "--vars", "2")
    assert (code, out) == (0, "0\n")


def test_classify_exit_codes(capsys):
    code, out, _ = run(capsys, "classify", "5,4,1,1/2,1,1", "--vars", "3")
    assert code == 1 and "multiplicity_free: False" in out
    code, out, _ = run(capsys, "classify", "2,1/1", "--vars", "2")
    assert code == 0 and "multiplicity_free: True" in out


def test_classify_json_golden(capsys):
    code, out, _ = run(capsys, "classify", "5,4,1,1/2,1,1", "--vars", "3", "--json")
    assert code == 1
    assert json.loads(out) == json.loads((GOLDEN / "classify_5411_211.json").read_text())


def test_classify_witness(capsys):
    code, out, _ = run(capsys, "classify", "3,2,1/2,1", "--vars", "2", "--witness")
    assert code == 1
    assert out.count("witness ") == 2
    code, out, _ = run(capsys, "classify", "3,2,1/2,1", "--vars", "2", "--witness", "--json")
    tableaux = json.loads(out)["witness"]
    assert len(tableaux) == 2 and tableaux[0] != tableaux[1]
    for t in tableaux:
        letters = sorted(int(x) for x in t.split() if x != ".")
        assert letters == [1, 1, 2]


def test_witness_command(capsys):
    code, out, _ = run(capsys, "witness", "3,2,1/2,1", "-n", "2")
    assert code == 1 and out.startswith("witness 1:")
    code, out, _ = run(capsys, "witness", "2,1/1", "-n", "2")
    assert (code, out) == (0, "multiplicity-free\n")


def test_default_vars_is_row_count(capsys):
    # (3,2,1)/(2,1) has three rows, so (1,1,1) is kept.
    code, out, _ = run(capsys, "expand", "3,2,1/2,1")
    assert out == "(3):1 (2,1):2 (1,1,1):1\n"


def test_minvars(capsys):
    assert run(capsys, "minvars", "3,2,1/2,1")[:2] == (0, "2\n")
    assert run(capsys, "minvars", "2,1/1")[:2] == (0, "inf\n")
    code, _, err = run(capsys, "minvars", "3,3,1/1")
    assert code == 2 and "tight" in err


@pytest.mark.parametrize("argv", [
    ["expand", "1,2"],
    ["expand", "2,2/3"],
    ["classify", "abc"],
    ["classify", "2,1", "--vars", "-1"],
    ["verify", "--max-width", "0", "--max-length", "1", "--max-n", "1"],
    ["nonsense"],
])
def test_bad_input_exits_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_verify_tiny(capsys):
    code, out, _ = run(capsys, "verify", "--max-width", "1", "--max-length", "1", "--max-n", "1")
    report = json.loads(out)
    assert code == 0
    assert report["counts"] == {"shapes": 1, "pairs": 1, "mismatches": 0}


def test_verify_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--max-width", "2", "--max-length", "2", "--max-n", "3", "--out", str(target))
    assert code == 0
    assert target.read_text() == out


def test_verify_io_error(tmp_path, capsys):
    code, _, err = run(capsys, "verify", "--max-width", "1", "--max-length", "1", "--max-n", "1",
                       "--out", str(tmp_path / "missing" / "r.json"))
    assert code == 4 and "cannot write" in err


def test_verify_deterministic_across_jobs(capsys):
    args = ["verify", "--max-width", "3", "--max-length", "3", "--max-n", "4"]
    _, one, _ = run(capsys, *args, "--jobs", "1")
    _, two, _ = run(capsys, *args, "--jobs", "2")
    assert one == two


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "skewschur", "expand", "2,1/1", "--vars", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "(2):1 (1,1):1\n"
