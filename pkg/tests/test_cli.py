import io
import json
import subprocess
import sys

import pytest

from enriques.cli import main


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


def test_dual():
    assert run(["dual", "n=6;chi=e3"]) == (0, "n=6;chi=e2,e3,e4,v2,v4\n")


def test_invariants():
    code, out = run(["invariants", "n=6;chi=e3"])
    assert code == 0
    assert out == '{"n":6,"chi":"e3","m":[4,4,2,2,1,1],"m0":4,"milnor":28}\n'


def test_stdin_key():
    assert run(["dual", "-"], stdin="n=6;chi=e3\n") == (0, "n=6;chi=e2,e3,e4,v2,v4\n")


def test_apply_op():
    assert run(["apply-op", "n=6;chi=e4", "--kind", "straighten", "--pos", "3"]) == (
        0, "n=6;chi=e3,e4,v3\n")
    assert run(["apply-op", "-", "--kind", "break", "--pos", "3"], stdin="n=6;chi=e3,e4") == (
        0, "n=6;chi=e3,e4,v3\n")


def test_enumerate_json_lines():
    code, out = run(["enumerate", "5"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 8
    assert [r["chi"] for r in rows] == sorted(r["chi"] for r in rows)
    assert list(rows[0]) == ["n", "chi", "m", "m0", "milnor"]


def test_extremal():
    code, out = run(["extremal", "6"])
    lines = out.splitlines()
    assert code == 0 and [l.split()[0] for l in lines] == ["alpha", "omega", "pi"]
    assert '"m0":8' in lines[1] and '"milnor":84' in lines[1]
    code, out = run(["extremal", "3"])
    assert [l.split()[0] for l in out.splitlines()] == ["alpha", "omega"]


def test_self_duals():
    code, out = run(["self-duals", "6"])
    assert code == 0 and len(out.splitlines()) == 3


def test_hasse_dot(tmp_path):
    path = tmp_path / "e5.dot"
    code, out = run(["hasse", "5", "--dot", str(path)])
    assert code == 0
    text = path.read_text()
    assert text.count("->") == len(
        json.loads(run(["hasse", "5", "--json"])[1])["edges"])
    path2 = tmp_path / "again.dot"
    run(["hasse", "5", "--dot", str(path2)])
    assert path2.read_bytes() == path.read_bytes()


def test_hasse_bound_is_usage_error(capsys):
    code, _ = run(["hasse", "9", "--max-n", "8"])
    assert code == 2
    assert "bound" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["dual", "n=4;chi=v2"],
        ["dual", "garbage"],
        ["apply-op", "n=6;chi=e3", "--kind", "break", "--pos", "2"],
        ["enumerate", "2"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    code, out = run(argv)
    assert code == 2 and out == ""
    assert capsys.readouterr().err.startswith("enriques: ")


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["apply-op", "n=6;chi=", "--kind", "bend", "--pos", "2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_verify_small_bound():
    code, out = run(["verify", "--max-n", "6", "--samples", "200", "--json"])
    report = json.loads(out)
    assert code == 0
    assert [r["claim"] for r in report] == [f"C{i:02d}" for i in range(1, 14)]
    assert all(r["passed"] for r in report)


def test_console_script_is_deterministic():
    cmd = [sys.executable, "-m", "enriques.cli", "enumerate", "6"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.count(b"\n") == 21
