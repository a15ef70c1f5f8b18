"""Command-line surface: outputs, exit codes, determinism."""

import json

import pytest

from positroid_lab import fixtures
from positroid_lab.cli import main
from positroid_lab.trop import HeightVector


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cell_from_perm(capsys):
    code, out = run(capsys, "cell", "--perm", "(3,1,4,2)", "--sample", "3",
                    "--seed", "5")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 3
    assert [1, 2] in data["positroid"]
    assert len(data["samples"]) == 3
    for rec in data["samples"]:
        assert rec["plucker"]["coords"]["3,4"] == "0/1"


def test_cell_loop_only(capsys):
    code, out = run(capsys, "cell", "--perm", "(1_)")
    assert code == 0
    assert json.loads(out)["dimension"] == 0


def test_cell_rerun_bit_identical(capsys):
    _, out1 = run(capsys, "cell", "--perm", "(3,1,4,2)", "--sample", "2", "--seed", "9")
    _, out2 = run(capsys, "cell", "--perm", "(3,1,4,2)", "--sample", "2", "--seed", "9")
    assert out1 == out2


def test_cell_graph_matchings(capsys, tmp_path):
    path = tmp_path / "g1.json"
    path.write_text(json.dumps(fixtures.g1().to_json()))
    code, out = run(capsys, "cell", "--graph", str(path), "--matchings")
    assert code == 0
    data = json.loads(out)
    assert data["trip_permutation"] == "(3,1,4,2)"
    assert len(data["matchings"]) == 5


def test_cell_graph_dot_and_tikz(capsys, tmp_path):
    path = tmp_path / "g1.json"
    path.write_text(json.dumps(fixtures.g1().to_json()))
    code, out = run(capsys, "cell", "--graph", str(path), "--format", "dot")
    assert code == 0 and out.startswith("graph")
    code, out = run(capsys, "cell", "--graph", str(path), "--format", "tikz")
    assert code == 0 and "tikzpicture" in out


def test_tilings_hypersimplex(capsys):
    code, out = run(capsys, "tilings", "--space", "hypersimplex", "--k", "1",
                    "--n", "4")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 2


def test_tilings_amplituhedron_with_audit(capsys):
    code, out = run(capsys, "tilings", "--space", "amplituhedron", "--k", "1",
                    "--n", "4", "--z", "vandermonde:0,1,2,3", "--samples", "5")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 2 and all(data["audited"])


def test_tilings_verify_good_and_bad(capsys, tmp_path):
    good = {"space": "hypersimplex", "k": 1, "n": 4,
            "tiles": [{"perm": "(3,1,4,2)"}, {"perm": "(2,4,1,3)"}]}
    bad = {"space": "hypersimplex", "k": 1, "n": 4,
           "tiles": [{"perm": "(3,1,4,2)"}]}
    p1 = tmp_path / "good.json"
    p1.write_text(json.dumps(good))
    p2 = tmp_path / "bad.json"
    p2.write_text(json.dumps(bad))
    code, out = run(capsys, "tilings", "--verify", str(p1))
    assert code == 0 and json.loads(out)["valid"]
    code, out = run(capsys, "tilings", "--verify", str(p2))
    assert code == 1
    assert json.loads(out)["violations"]


def test_tilings_t_dual_conversion(capsys, tmp_path):
    data = {"space": "hypersimplex", "k": 1, "n": 4,
            "tiles": [{"perm": "(3,1,4,2)"}, {"perm": "(2,4,1,3)"}]}
    p = tmp_path / "t.json"
    p.write_text(json.dumps(data))
    code, out = run(capsys, "tilings", "--t-dual", str(p))
    assert code == 0
    got = json.loads(out)
    assert got["space"] == "amplituhedron"
    assert set(got["tiles"]) == {"(2,3,1,4_)", "(3,2_,4,1)"}


def test_trop_positive_and_violation(capsys, tmp_path):
    p = tmp_path / "h.json"
    p.write_text(json.dumps(HeightVector.make(2, 4, {(1, 2): 1}).to_json()))
    code, out = run(capsys, "trop", "--heights", str(p))
    assert code == 0
    data = json.loads(out)
    assert data["positive_tropical"] and data["finest"]
    assert len(data["cells"]) == 2
    p2 = tmp_path / "hbad.json"
    p2.write_text(json.dumps(HeightVector.make(2, 4, [0, 1, 0, 0, 1, 0]).to_json()))
    code, out = run(capsys, "trop", "--heights", str(p2))
    assert code == 1
    assert json.loads(out)["violation"]["quad"] == [1, 2, 3, 4]


def test_amp_sample(capsys):
    code, out = run(capsys, "amp", "sample", "--n", "4", "--k", "1", "--m", "2",
                    "--cell", "(2,3,1,4_)", "--count", "2",
                    "--z", "vandermonde:0,1,2,3", "--seed", "2")
    assert code == 0
    data = json.loads(out)
    assert len(data["samples"]) == 2
    for rec in data["samples"]:
        assert "twistors" in rec and "sign_stratum" in rec


def test_amp_verify_tiling(capsys, tmp_path):
    data = {"space": "amplituhedron", "k": 1, "n": 4,
            "tiles": [{"black_polygons": [[1, 2, 3]]},
                      {"black_polygons": [[1, 3, 4]]}]}
    p = tmp_path / "amp.json"
    p.write_text(json.dumps(data))
    code, out = run(capsys, "amp", "verify-tiling", "--file", str(p),
                    "--z", "vandermonde:0,1,2,3", "--samples", "5")
    assert code == 0 and json.loads(out)["valid"]


def test_input_errors_exit_2(capsys, tmp_path):
    code, _ = run(capsys, "cell", "--perm", "(banana)")
    assert code == 2
    code, _ = run(capsys, "trop", "--heights", str(tmp_path / "missing.json"))
    assert code == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    code, _ = run(capsys, "trop", "--heights", str(broken))
    assert code == 2


def test_round_trip_emitted_json(capsys):
    _, out = run(capsys, "cell", "--perm", "(3,1,4,2)", "--sample", "1", "--seed", "1")
    data = json.loads(out)
    from positroid_lab.grassmann import PluckerVector

    P = PluckerVector.from_json(data["samples"][0]["plucker"])
    assert P.to_json() == data["samples"][0]["plucker"]
