import io
from pathlib import Path

import pytest

from homga import algfile
from homga.cli import main

MALFORMED = sorted((Path(__file__).parent / "malformed").glob("*.json"))


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_validate_valid_and_invalid():
    code, text = run("validate", "dual")
    assert code == 0 and text.splitlines()[-1].endswith("valid")
    code, text = run("validate", "perturbed-dual-yau2")
    assert code == 1
    assert "FAIL" in text and "first at (" in text


def test_validate_from_file(tmp_path):
    path = tmp_path / "a.json"
    algfile.save(algfile.load(algfile.shipped("bimodule")), path)
    assert run("validate", str(path))[0] == 0
    code, text = run("validate", str(path), "--format", "tsv")
    assert all(len(line.split("\t")) == 3 for line in text.splitlines())


@pytest.mark.parametrize("path", MALFORMED, ids=lambda p: p.stem)
@pytest.mark.parametrize("command", ["validate", "cohomology", "verify"])
def test_malformed_inputs_exit_2(path, command, capsys):
    code, text = run(command, str(path))
    assert code == 2 and text == ""
    assert "error:" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["verify", "dual", "--identity", "nonsense"],
    ["trees", "9"],
    ["trees", "-1"],
    ["trees", "3", "--r0", "1,1"],
    ["trees", "3", "--ri", "a,b"],
    ["cohomology", "skew"],
    ["validate", "no-such-example"],
    ["verify", "--trials", "-1"],
    ["cohomology", "dual", "--max-degree", "0"],
    ["frobnicate"],
    [],
])
def test_input_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2


def test_cohomology_table_dual():
    code, text = run("cohomology", "dual", "--format", "tsv")
    assert code == 0
    rows = [line.split("\t") for line in text.splitlines() if line[:1].isdigit()]
    assert [(r[0], r[3]) for r in rows] == [("2", "1"), ("3", "1"), ("4", "1")]
    assert "dimZ^1=1" in text


def test_cohomology_representatives():
    code, text = run("cohomology", "dual", "--max-degree", "2", "--representatives")
    assert code == 0 and "# H^2 class 1" in text and "f(e" in text


def test_cohomology_diagonal_dialgebra_has_subcomplex_table():
    code, text = run("cohomology", "diag-dual", "--max-degree", "2")
    assert code == 0 and "constant-in-tree" in text


def test_trees_labels():
    code, text = run("trees", "3", "--labels")
    lines = text.splitlines()
    assert lines[0] == "count  5"
    assert [l.split()[1] for l in lines[1:]] == ["[123]", "[213]", "[131]", "[312]", "[321]"]


def test_trees_counts():
    for n, c in [(0, 1), (1, 1), (4, 14), (5, 42)]:
        assert run("trees", str(n))[1].splitlines()[0] == f"count  {c}"


def test_trees_bullets_and_faces():
    code, text = run("trees", "2", "--bullets", "--faces", "--format", "tsv")
    row = text.splitlines()[1].split("\t")
    assert row[1] == "[12]"
    assert row[3] == "bullets 0:⊢ 1:⊢ 2:⊢"
    assert row[2].startswith("faces d0=[1]")


def test_trees_r_maps():
    code, text = run("trees", "3", "--r0", "1,2", "--ri", "1,2")
    assert code == 0 and "R0=" in text and "R1=" in text and "R2=" in text


def test_verify_single_identity_is_deterministic():
    argv = ("verify", "dual-yau2", "--identity", "pre-jacobi", "--format", "tsv", "--seed", "3")
    a, b = run(*argv), run(*argv)
    assert a == b and a[0] == 0
    assert a[1].splitlines()[0].split("\t")[:4] == ["pre-jacobi", "dual-yau2", "PASS", "50"]


def test_verify_reports_violation():
    code, text = run("verify", "perturbed-dual-yau2", "--identity", "mu-square")
    assert code == 1 and "witness:" in text and "basis=" in text


def test_verify_invalid_algebra_stops_at_validation():
    code, text = run("verify", "skew")
    assert code == 1
    assert text.splitlines()[0].startswith("FAIL  validate")
