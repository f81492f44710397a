import io
import json
import re
import subprocess
import sys

import pytest

from conftest import D4, five_factor_path, five_factor_rc, two_factor_path, two_factor_rc
from rcbij import wire
from rcbij.bijection import phi_inv
from rcbij.cli import crystal_dot, main
from rcbij.crystal_tableaux import column, path
from rcbij.rigged_config import enumerate_all
from rcbij.root_data import DynkinSpec


def run(monkeypatch, capsys, argv, data=None):
    if data is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(data if isinstance(data, str) else json.dumps(data)))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rc2path_fixture(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["rc2path"], wire.rc_to_json(five_factor_rc()))
    assert code == 0
    assert json.loads(out) == wire.path_to_json(five_factor_path())


def test_rc2path_human(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["rc2path", "--human"], wire.rc_to_json(two_factor_rc()))
    assert code == 0
    assert out.strip() == "[1,5/3b,1b] (x) [1,5b/4,3b/5,1b]"


def test_empty_configuration_gives_ones(monkeypatch, capsys):
    data = {"type": "D", "n": 4, "shape": [[2, 1], [1, 2]], "nu": []}
    code, out, _ = run(monkeypatch, capsys, ["rc2path", "--human"], data)
    assert code == 0 and out.strip() == "[1/2] (x) [1,1]"


def test_path2rc_fixture(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["path2rc"], wire.path_to_json(two_factor_path()))
    assert code == 0
    assert json.loads(out) == wire.rc_to_json(two_factor_rc())


@pytest.mark.parametrize("k", [0, 17, 101, 230])
def test_cli_roundtrip(monkeypatch, capsys, tmp_path, k):
    rc = enumerate_all(D4, ((2, 1), (1, 1)))[k]
    src = tmp_path / "rc.json"
    src.write_text(json.dumps(wire.rc_to_json(rc)))
    code, out, _ = run(monkeypatch, capsys, ["rc2path", "--input", str(src)])
    assert code == 0
    code, back, _ = run(monkeypatch, capsys, ["path2rc"], out)
    assert code == 0 and wire.rc_from_json(json.loads(back)) == rc


def test_op_on_configuration(monkeypatch, capsys):
    two = wire.rc_to_json(phi_inv(path(D4, column(2))))
    code, out, _ = run(monkeypatch, capsys, ["op", "--side", "rc", "--op", "f", "--index", "2"], two)
    assert code == 0
    assert wire.rc_from_json(json.loads(out)) == phi_inv(path(D4, column(3)))


def test_op_on_highest_is_null(monkeypatch, capsys):
    data = wire.rc_to_json(five_factor_rc())
    for i in range(1, 6):
        code, out, _ = run(monkeypatch, capsys, ["op", "--side", "rc", "--op", "e", "--index", str(i)], data)
        assert code == 0 and out.strip() == "null"


def test_op_chain_then_null(monkeypatch, capsys):
    a2 = DynkinSpec("A", 2)
    data = json.dumps(wire.path_to_json(path(a2, *[column(x) for x in [1, 2, 3, 1, 1, 2, 1, 1]])))
    for _ in range(3):
        code, data, _ = run(monkeypatch, capsys, ["op", "--op", "f", "--index", "1"], data)
        assert code == 0 and data.strip() != "null"
    code, out, _ = run(monkeypatch, capsys, ["op", "--op", "f", "--index", "1"], data)
    assert out.strip() == "null"


def _edges(dot):
    labels = dict(re.findall(r'^  (v\d+) \[label="([^"]*)"\]', dot, re.M))
    return {(labels[a], labels[b], int(i)) for a, b, i in re.findall(r'(v\d+) -> (v\d+) \[label="(\d)"\]', dot)}


def test_graph_fork():
    edges = _edges(crystal_dot(DynkinSpec("D", 5), ((1, 1),)))
    want = {("[1]", "[2]", 1), ("[2]", "[3]", 2), ("[3]", "[4]", 3), ("[4]", "[5]", 4), ("[4]", "[5b]", 5),
            ("[5]", "[4b]", 5), ("[5b]", "[4b]", 4), ("[4b]", "[3b]", 3), ("[3b]", "[2b]", 2), ("[2b]", "[1b]", 1)}
    assert edges == want


def test_graph_chain(monkeypatch, capsys, tmp_path):
    out = tmp_path / "g.dot"
    code, _, _ = run(monkeypatch, capsys, ["graph", "--type", "A", "--rank", "2", "--shape", "1,1", "--dot-out", str(out)])
    assert code == 0
    assert _edges(out.read_text()) == {("[1]", "[2]", 1), ("[2]", "[3]", 2)}


def test_graph_counts_match_enumeration():
    for side in ("path", "rc"):
        dot = crystal_dot(D4, ((2, 1),), side)
        assert len(re.findall(r"^  v\d+ \[", dot, re.M)) == 29
        rcs = enumerate_all(D4, ((2, 1),))
        assert len(re.findall(r"->", dot)) == _count_edges(rcs)


def _count_edges(rcs):
    from rcbij.rigged_config import rc_op
    return sum(1 for rc in rcs for i in D4.nodes if rc_op(rc, i, "f") is not None)


def test_graph_is_deterministic():
    assert crystal_dot(D4, ((1, 1), (1, 1))) == crystal_dot(D4, ((1, 1), (1, 1)))


def test_verify_single_shape(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["verify", "--suite", "bijection", "--type", "D", "--rank", "4", "--shape", "2,1:1,1"])
    assert code == 0 and json.loads(out)["passed"]


def test_verify_corrupted_pairs(monkeypatch, capsys):
    pairs = [{"rc": wire.rc_to_json(two_factor_rc()), "path": wire.path_to_json(two_factor_path())},
             {"rc": wire.rc_to_json(two_factor_rc()), "path": wire.path_to_json(five_factor_path())}]
    code, out, _ = run(monkeypatch, capsys, ["verify", "--suite", "pairs"], pairs)
    assert code == 1
    failure = json.loads(out)["reports"][0]["failures"][0]
    # the stored input replays through rc2path
    code, replay, _ = run(monkeypatch, capsys, ["rc2path"], failure["input"])
    assert code == 0 and json.loads(replay) == failure["got"]


def test_enumerate_highest(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["enumerate", "--side", "rc", "--highest", "--type", "D", "--rank", "4", "--shape", "1,1:1,1:1,1"])
    assert code == 0 and len(out.splitlines()) == 7
    code, out, _ = run(monkeypatch, capsys, ["enumerate", "--highest", "--type", "D", "--rank", "4", "--shape", "1,1:1,1:1,1"])
    assert code == 0 and len(out.splitlines()) == 7


def test_rmatrix(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["rmatrix", "--human"], wire.path_to_json(two_factor_path()))
    assert code == 0 and out.strip() == "[1,4/5,2b/3b,1b] (x) [2,5b/5,3b]"


@pytest.mark.parametrize("argv,data,code", [
    (["rc2path"], "{not json", 2),
    (["rc2path"], {"type": "D", "n": 4, "shape": [[1, 1]], "nu": [[[1, 0]], [], [], []]}, 3),
    (["rc2path"], {"type": "D", "n": 4, "shape": [[9, 1]], "nu": []}, 2),
    (["path2rc"], {"type": "D", "n": 4, "factors": [{"r": 2, "s": 1, "cols": [[-1, 1]]}]}, 3),
    (["path2rc"], {"type": "D", "n": 4, "factors": [{"r": 1, "s": 1, "cols": [[7]]}]}, 2),
    (["op", "--op", "f", "--index", "9"], {"type": "D", "n": 4, "factors": []}, 2),
    (["enumerate", "--type", "D", "--rank", "4", "--shape", "x"], None, 2),
    (["graph", "--type", "D", "--rank", "4"], None, 2),
    (["verify", "--suite", "nope", "--type", "D", "--rank", "4", "--shape", "1,1"], None, 2),
    (["frobnicate"], None, 2),
])
def test_exit_codes(monkeypatch, capsys, argv, data, code):
    assert run(monkeypatch, capsys, argv, data)[0] == code


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rcbij", "rc2path", "--human"],
                          input=json.dumps({"type": "A", "n": 2, "shape": [[1, 1]], "nu": []}),
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "[1]"
