import json
import subprocess
import sys

import pytest

from balanced.cli import main

P4 = '{"n":4,"edges":[[0,1],[1,2],[2,3]]}'
C8_BASICS = '[["1/2",0,0,0,"1/2",0,0,0],[0,0,"1/2",0,0,0,"1/2",0],[0,0,0,"1/2",0,0,0,"1/2"]]'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def doc(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.json"
    path.write_text(P4)
    return str(path)


def test_check(capsys, p4_file):
    d = doc(capsys, "check", "--graph", p4_file, "--measure", '["1/2","0","0","1/2"]')
    assert d["balanced"] is True and d["max_cost"] == "3/2"
    d = doc(capsys, "check", "--graph", p4_file, "--measure", '["1/4","1/4","1/4","1/4"]')
    assert d["balanced"] is False and d["violations"]


def test_measure_from_file(capsys, tmp_path):
    m = tmp_path / "m.json"
    m.write_text('["1/2","0","1/2","0"]')
    assert doc(capsys, "energy", "--gen", "cycle 4", "--measure", str(m)) == {"energy": "1"}


def test_enumerate_join_family(capsys):
    d = doc(capsys, "enumerate", "--gen", "join-family --l 0 --k 2")
    assert d["count"] == 3 and d["n"] == 6
    assert d["basics"][0] == {"mu": ["1/3", "1/3", "1/3", "0", "0", "0"], "support": [0, 1, 2], "max_set": [0, 1, 2]}


def test_enumerate_dot(capsys):
    code, out = run(capsys, "enumerate", "--gen", "cycle 8", "--format", "dot")
    assert code == 0 and out.startswith("graph compatibility {") and out.count("--") == 6


def test_gen_formats(capsys, tmp_path):
    assert doc(capsys, "gen", "path", "3") == {"n": 3, "edges": [[0, 1], [1, 2]]}
    code, out = run(capsys, "gen", "--format", "csv", "cycle", "3")
    assert out == "3\n0 1\n0 2\n1 2\n"
    h = tmp_path / "h.json"
    h.write_text('{"n":2,"edges":[]}')
    d = doc(capsys, "gen", "gh", "--input", str(h))
    assert d["n"] == 6
    assert doc(capsys, "gen", "example14")["n"] == 14
    assert doc(capsys, "gen", "c4c4")["n"] == 16


def test_distances_csv(capsys):
    code, out = run(capsys, "distances", "--gen", "path 3", "--format", "csv")
    assert out == "0,1,2\n1,0,1\n2,1,0\n"


def test_decompose(capsys):
    d = doc(capsys, "decompose", "--gen", "cycle 4", "--measure", '["1/4","1/4","1/4","1/4"]')
    assert d["verified"] is True and d["chain_length"] == 1
    assert {p["coeff"] for p in d["parts"]} == {"1/2"}


def test_extrapolate(capsys):
    d = doc(capsys, "extrapolate", "--gen", "cycle 4", "--mu", '["1/2",0,"1/2",0]', "--nu", '["1/4","1/4","1/4","1/4"]')
    assert d["R"] == "2" and d["lambda_R"] == ["0", "1/2", "0", "1/2"]
    assert d["binding"] == [{"kind": "support", "vertex": 0}, {"kind": "support", "vertex": 2}]


def test_hull(capsys):
    d = doc(capsys, "hull", "--gen", "cycle 8", "--measure", '[0,"1/2",0,0,0,"1/2",0,0]', "--basics", C8_BASICS)
    assert d["member"] is False and set(d["separator"]) == {"w", "beta"}
    d = doc(capsys, "hull", "--gen", "cycle 4", "--measure", '["1/4","1/4","1/4","1/4"]')
    assert d == {"member": True, "coefficients": ["1/2", "1/2"]}


def test_compat(capsys):
    d = doc(capsys, "compat", "--gen", "cycle 8", "--measures", C8_BASICS)
    assert d == {"compatible": True}
    d = doc(capsys, "compat", "--gen", "join-family --l 0 --k 3")
    assert d["count"] == 7 and d["edges"] == [] and len(d["components"]) == 7


def test_greedy(capsys):
    d = doc(capsys, "greedy", "--gen", "path 4", "--steps", "3", "--eps", "0")
    assert d["added"] == [3, 0, 3] and d["eps_balanced"] is True


def test_output_file(capsys, tmp_path):
    out = tmp_path / "o.json"
    code, text = run(capsys, "energy", "--gen", "cycle 4", "--measure", '["1",0,0,0]', "--out", str(out))
    assert code == 0 and text == "" and json.loads(out.read_text()) == {"energy": "0"}


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--gen", "path 3", "--measure", '["1/2","1/2"]'],
        ["check", "--gen", "path 3", "--measure", '["1/2","1/3","0"]'],
        ["check", "--gen", "path 3", "--measure", "[0.5, 0, 0.5]"],
        ["check", "--gen", "path 3", "--measure", "[oops"],
        ["check", "--gen", "path 3", "--measure", "/nonexistent/file.json"],
        ["check", "--graph", "/nonexistent/graph.json", "--measure", "[1]"],
        ["decompose", "--gen", "path 3", "--measure", '["1/3","1/3","1/3"]'],
        ["extrapolate", "--gen", "complete 2", "--mu", '["1/2","1/2"]', "--nu", '["1/2","1/2"]'],
        ["enumerate", "--gen", "path 20"],
        ["gen", "join-family", "--l", "0", "--k", "1"],
    ],
)
def test_domain_errors_exit_1(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 1
    assert "error" in json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["check", "--gen", "path 3"],
        ["check", "--gen", "wheel 5", "--measure", "[1]"],
        ["check", "--measure", "[1]"],
        ["enumerate", "--gen", "path 3", "--format", "csv"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_determinism(capsys):
    argv = ["enumerate", "--gen", "cycle 6"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_verify_command(capsys):
    code, out = run(capsys, "verify-paper")
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 12
    d = doc(capsys, "verify-paper", "--format", "json")
    assert d["all_passed"] is True


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "balanced.cli", "energy", "--gen", "cycle 4",
                          "--measure", '["1/2",0,"1/2",0]'], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout) == {"energy": "1"}
