import json
import subprocess
import sys

import pytest

from wreath_hecke.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--group", "cyclic:2", "--p", "2", "--max", "5")
    report = json.loads(out)
    assert code == 0 and report["schema_version"] == 1
    assert report["result"]["series"] == [1, 1, 1, 2, 2, 3]


def test_cyclo_dim(capsys):
    code, out, _ = run(capsys, "cyclo", "dim", "--group", "cyclic:2", "--n", "2", "--p", "3",
                       "--weight", "Lambda0")
    assert code == 0 and json.loads(out)["result"]["dim"] == 8
    code, out, _ = run(capsys, "cyclo", "dim", "--group", "cyclic:2", "--n", "2", "--p", "3",
                       "--weight", '{"lambda": {"0": 1, "2": 1}}')
    assert code == 0 and json.loads(out)["result"]["dim"] == 32


def test_crystal_depth_zero_is_single_node(capsys):
    code, out, _ = run(capsys, "crystal", "graph", "--p", "2", "--depth", "0", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph") and out.count("[label=") == 1


def test_crystal_graph_json(capsys):
    code, out, _ = run(capsys, "crystal", "graph", "--p", "3", "--group", "cyclic:2",
                       "--weight", "Lambda0", "--depth", "2")
    res = json.loads(out)["result"]
    assert res["counts"] == [1, 2, 5]
    assert {"from", "to", "i", "k"} == set(res["edges"][0])


def test_hecke_mul(capsys, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps([{"alpha": [0, 0], "g": [0, 0], "w": [2, 1], "coeff": 1}]))
    b.write_text(json.dumps([{"alpha": [1, 0], "g": [0, 0], "w": [1, 2], "coeff": 1}]))
    code, out, _ = run(capsys, "hecke", "mul", str(a), str(b), "--n", "2", "--group", "cyclic:2",
                       "--p", "3")
    prod = json.loads(out)["result"]["product"]
    # s1 x1 = x2 s1 - t12
    assert {"alpha": [0, 1], "g": [0, 0], "w": [2, 1], "coeff": [1]} in prod
    assert {"alpha": [0, 0], "g": [0, 0], "w": [1, 2], "coeff": [2]} in prod


@pytest.mark.parametrize("argv", [
    ["classes", "--group", "symmetric:3", "--p", "2", "--n", "3", "--brute"],
    ["jm", "--group", "cyclic:2", "--n", "3", "--p", "2"],
    ["hecke", "relations", "--group", "cyclic:2", "--n", "2", "--p", "3"],
    ["hecke", "pbw", "--group", "cyclic:2", "--n", "2", "--p", "3", "--pairs", "20"],
    ["center", "--group", "cyclic:2", "--n", "2", "--p", "3", "--candidates", "10"],
    ["scalars", "--group", "symmetric:3", "--p", "5"],
    ["cyclo", "iso", "--group", "cyclic:2", "--n", "2", "--p", "3"],
    ["branch", "--group", "cyclic:2", "--p", "3", "--n", "2"],
    ["branch", "--group", "trivial", "--p", "2", "--n", "3", "--crystal"],
    ["crystal", "check", "--p", "3", "--depth", "6"],
])
def test_commands_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out
    assert json.loads(out)["pass"] is True


def test_usage_errors_are_machine_readable(capsys):
    code, _, err = run(capsys, "series", "--group", "cyclic:2", "--p", "4")
    assert code == 2 and json.loads(err)["error"] == "usage"
    code, _, err = run(capsys, "nonsense")
    assert code == 2 and json.loads(err)["error"] == "usage"
    code, _, err = run(capsys, "cyclo", "dim", "--group", "cyclic:2", "--p", "3", "--weight", "{")
    assert code == 2


def test_parameter_errors(capsys):
    code, _, err = run(capsys, "branch", "--group", "cyclic:2", "--p", "2", "--n", "2")
    assert code == 3 and "divides" in json.loads(err)["message"]


def test_output_is_deterministic(tmp_path):
    outs = []
    for j in range(2):
        path = tmp_path / f"r{j}.json"
        subprocess.run([sys.executable, "-m", "wreath_hecke", "--out", str(path), "center",
                        "--group", "symmetric:3", "--n", "2", "--p", "5", "--candidates", "8",
                        "--seed", "7"], check=True)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
