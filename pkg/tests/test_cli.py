import json
import re
from pathlib import Path

import pytest

from arcalg.cli import main

GOLDEN = Path(__file__).parent / "golden"
RATIONAL = re.compile(r"^-?\d+/\d+$")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_mult_example(capsys):
    code, out, _ = run(capsys, "mult", "--n", "1", "--left", "a|b|1", "--right", "b|a|1")
    assert code == 0
    assert out.strip() == "a|a|X⊗1"


def test_mult_zero_and_sign_labels(capsys):
    code, out, _ = run(capsys, "mult", "--n", "1", "--left", "b|a|1", "--right", "a|b|1")
    assert (code, out.strip()) == (0, "0")
    code, out, _ = run(capsys, "mult", "--n", "1", "--left=-+|+-|1", "--right=+-|-+|1")
    assert (code, out.strip()) == (0, "-+|-+|X⊗1")


def test_mult_json(capsys):
    code, out, _ = run(capsys, "mult", "--n", "1", "--left", "a|b|1", "--right", "b|a|1", "--json")
    data = json.loads(out)
    assert data["product"] == {"a|a|X⊗1": "1/1"}


@pytest.mark.parametrize("left", ["a|z|1", "a|b", "a|a|Y", "a|a|X⊗X", "a|a|1⊗X"])
def test_mult_bad_labels(capsys, left):
    code, _, err = run(capsys, "mult", "--n", "1", "--left", left, "--right", "a|a|1")
    assert code == 1 and "error" in err


def test_enum_json(capsys):
    code, out, _ = run(capsys, "enum", "--n", "2", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["sequences"]) == 6
    first = data["sequences"][0]
    assert set(first) == {"sequence", "young", "cup_sequence", "extended"}
    assert sum(r["cup_sequence"] for r in data["sequences"]) == 2


def test_enum_ascii_has_same_exit_code(capsys):
    assert run(capsys, "enum", "--n", "2")[0] == run(capsys, "enum", "--n", "2", "--json")[0] == 0


def test_check_relations(capsys):
    code, out, _ = run(capsys, "check-relations", "--n", "2")
    assert code == 0
    assert re.search(r"^v\s+1920\s+0$", out, re.M)
    code, out, _ = run(capsys, "check-relations", "--n", "2", "--json")
    data = json.loads(out)
    assert data["v"] == {"instances": 1920, "failures": []}


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("ARCALG_THREADS", "2")
    assert run(capsys, "check-relations", "--n", "1")[0] == 0
    monkeypatch.setenv("ARCALG_THREADS", "many")
    assert run_exit(capsys, "check-relations", "--n", "1") == 1


def run_exit(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


def test_argument_errors(capsys):
    assert run_exit(capsys, "enum", "--n", "2", "--bogus") == 1
    assert run_exit(capsys, "frobnicate") == 1
    assert run_exit(capsys, "enum", "--n", "0") == 1
    assert run_exit(capsys, "enum", "--n", "5") == 1
    assert run_exit(capsys, "enum", "--n", "2", "--threads", "0") == 1


def test_usage_goes_to_stderr(capsys):
    with pytest.raises(SystemExit):
        main(["enum", "--bogus"])
    out, err = capsys.readouterr()
    assert out == "" and "usage" in err


def test_force_lifts_the_cap(capsys):
    code, out, _ = run(capsys, "enum", "--n", "5", "--force", "--json")
    assert code == 0 and len(json.loads(out)["sequences"]) == 252


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--n", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["total"] == 47 and data["symmetric"]
    assert len(data["table"]) == 6


def test_center(capsys):
    code, out, _ = run(capsys, "center", "--n", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["dim"] == 6 and data["top"] == {"degree": 4, "dim": 2}
    for vec in data["basis"]:
        assert all(RATIONAL.match(v) for v in vec.values())
    code, out, _ = run(capsys, "center", "--n", "2", "--algebra", "H", "--json")
    assert code == 0 and json.loads(out)["commutator_quotient_dim"] == 6


def test_tanisaki(capsys):
    code, out, _ = run(capsys, "tanisaki", "--mu", "2,2", "--json")
    data = json.loads(out)
    assert code == 0
    assert {"generators", "hilbert", "total", "top"} <= set(data)
    assert data["hilbert"] == [1, 3, 2] and data["total"] == 6 and data["top"] == 2


def test_tanisaki_errors(capsys):
    code, out, _ = run(capsys, "tanisaki", "--mu", "2,2", "--cutoff", "1", "--points", "0")
    assert code == 2 and "nonzero tail" in out
    assert run(capsys, "tanisaki", "--mu", "2,x")[0] == 1
    assert run(capsys, "tanisaki", "--mu", "0")[0] == 1


def test_render_golden(capsys):
    code, out, _ = run(capsys, "render", "--n", "1", "--top=-+", "--bottom=-+")
    assert code == 0 and out == (GOLDEN / "glued_n1_nested.txt").read_text()
    code, out, _ = run(capsys, "render", "--n", "2", "--top=-++-", "--bottom=++--", "--json")
    data = json.loads(out)
    assert "R" in data["colors"] and data["picture"] + "\n" == (GOLDEN / "glued_n2_red.txt").read_text()


def test_render_cups(capsys):
    code, out, _ = run(capsys, "render", "--n", "2", "--cups", "[[1,4],[2,3]]")
    assert code == 0 and out == (GOLDEN / "cups_nested.txt").read_text()
    code, out, _ = run(capsys, "render", "--n", "2", "--cups", "[[1,2],[3,4]]", "--bottom", "[[1,4],[2,3]]")
    assert code == 0 and out == (GOLDEN / "cups_adjacent_glued.txt").read_text()
    assert run(capsys, "render", "--n", "2", "--cups", "[[1,3],[2,4]]")[0] == 1
    assert run(capsys, "render", "--n", "2")[0] == 1


def test_corner_check(capsys):
    code, out, _ = run(capsys, "corner-check", "--n", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["corner_dim"] == data["h_dim"] == 12
