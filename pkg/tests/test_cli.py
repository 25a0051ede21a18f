import json
import subprocess
import sys

import pytest

from clusterfp import cli
from clusterfp.exchange import CartanType
from clusterfp.qtorus import QC

B4_DOC = {"cartan_type": "B", "rank": 4, "arrows": [[1, 2], [3, 2], [3, 4]]}
B4_MATRIX = [[0, -1, 0, 0], [1, 0, 1, 0], [0, -1, 0, -1], [0, 0, 2, 0]]


def write_doc(tmp_path, doc, name="in.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_parse_input_arrow_form():
    B, t = cli.parse_input(B4_DOC)
    assert B == B4_MATRIX
    assert (t.family, t.rank) == ("B", 4)


def test_parse_input_matrix_form():
    B, t = cli.parse_input({"matrix": [[0, -1], [1, 0]]})
    assert (t.family, t.rank) == ("A", 2)
    assert B == [[0, -1], [1, 0]]


def test_parse_input_relabels_to_canonical():
    # A_3 star ordering 2-1-3 becomes the canonical path 1-2-3
    scrambled = [[0, 1, -1], [-1, 0, 0], [1, 0, 0]]
    B, t = cli.parse_input({"matrix": scrambled})
    assert t == CartanType("A", 3)
    assert sorted(abs(B[i][j]) for i in range(3) for j in range(i + 1, 3)) == [0, 1, 1]
    assert B[0][1] != 0 and B[1][2] != 0 and B[0][2] == 0


def test_parse_input_rejects_junk():
    for doc in (
        [],
        {"matrix": []},
        {"matrix": [[0, "x"], [1, 0]]},
        {"cartan_type": "E", "rank": 8, "arrows": []},
        {"cartan_type": "A", "rank": 0, "arrows": []},
        {"cartan_type": "A", "rank": 2, "arrows": [[1, 3]]},
        {"other": 1},
    ):
        with pytest.raises((ValueError, cli.ClusterError)):
            cli.parse_input(doc)


def test_denominator_validation_lists_all_roots():
    with pytest.raises(ValueError) as exc:
        cli.parse_denominator("2,1", CartanType("A", 2))
    msg = str(exc.value)
    assert "0,1; 1,0; 1,1" in msg and "3 valid" in msg


def test_classical_text_golden(tmp_path, capsys):
    path = write_doc(tmp_path, B4_DOC)
    code = cli.main(["classical", "--input", path, "--denom", "0,1,1,0", "--format", "text"])
    assert code == 0
    assert capsys.readouterr().out == "u2*u3 + u2 + 1\n"


def test_classical_oracle_method_agrees(tmp_path, capsys):
    path = write_doc(tmp_path, B4_DOC)
    outs = []
    for method in ("closed", "oracle"):
        assert cli.main(["classical", "--input", path, "--denom", "1,2,2,2", "--method", method]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0].replace('"method":"closed"', '"method":"oracle"') == outs[1]


def test_quantum_text_golden(tmp_path, capsys):
    path = write_doc(tmp_path, B4_DOC)
    code = cli.main(
        ["quantum", "--input", path, "--denom", "0,1,0,0", "--d-scale", "2", "--format", "text"]
    )
    assert code == 0
    assert capsys.readouterr().out == "q^2*Z2 + 1\n"


def test_quantum_json_v_pairs(tmp_path, capsys):
    path = write_doc(tmp_path, B4_DOC)
    assert cli.main(["quantum", "--input", path, "--denom", "0,1,1,2", "--d-scale", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    terms = {tuple(t["e"]): t["coeff"] for t in doc["F"]["terms"]}
    assert terms[(0, 1, 0, 1)] == {"v": [[6, 1], [10, 1]]}
    assert doc["d_scale"] == 2 and doc["type"] == "B"


def test_qc_json_sorted():
    assert cli.qc_json(QC({10: 1, 6: 1})) == {"v": [[6, 1], [10, 1]]}


def test_gvector_both_methods(tmp_path, capsys):
    path = write_doc(tmp_path, {"matrix": [[0, -1], [1, 0]]})
    assert cli.main(["gvector", "--input", path, "--denom", "1,1", "--format", "text"]) == 0
    assert capsys.readouterr().out == "(0, -1)\n"
    assert cli.main(["gvector", "--input", path, "--denom", "1,1", "--method", "oracle"]) == 0
    assert json.loads(capsys.readouterr().out)["g"] == [0, -1]


def test_enumerate_json_sorted_and_deterministic(tmp_path, capsys):
    path = write_doc(tmp_path, {"matrix": [[0, -1], [1, 0]]})
    assert cli.main(["enumerate", "--input", path]) == 0
    first = capsys.readouterr().out
    assert cli.main(["enumerate", "--input", path]) == 0
    assert capsys.readouterr().out == first
    rows = json.loads(first)
    assert [r["d"] for r in rows] == [[0, 1], [1, 0], [1, 1]]
    assert rows[2]["path"] == [1, 2]
    assert first.endswith("\n")


def test_empty_table_renders_bracket_pair():
    assert cli.table_text([]) == "[]"
    assert cli.table_latex([]) == "[]"


def test_latex_polynomial(tmp_path, capsys):
    path = write_doc(tmp_path, B4_DOC)
    assert cli.main(["classical", "--input", path, "--denom", "0,1,2,2", "--format", "latex"]) == 0
    out = capsys.readouterr().out
    assert "u_2u_3^{2}u_4^{2}" in out and "2u_2u_3u_4" in out


def test_exit_1_on_bad_inputs(tmp_path, capsys):
    path = write_doc(tmp_path, B4_DOC)
    bad = write_doc(tmp_path, {"cartan_type": "A", "rank": 3, "arrows": [[1, 2]]}, "bad.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{nope")
    cases = [
        ["classical", "--input", path, "--denom", "9,9,9,9"],
        ["classical", "--input", bad, "--denom", "1,0,0"],
        ["classical", "--input", str(broken), "--denom", "1,0,0,0"],
        ["classical", "--input", str(tmp_path / "missing.json"), "--denom", "1,0,0,0"],
        ["quantum", "--input", path, "--denom", "0,1,0,0", "--d-scale", "0"],
        ["quantum", "--input", path, "--denom", "0,1,0,0", "--d-scale", "2", "--method", "oracle"],
    ]
    for argv in cases:
        assert cli.main(argv) == 1, argv
        capsys.readouterr()


def test_usage_errors_exit_1_not_2(capsys):
    assert cli.main([]) == 1
    assert cli.main(["classical"]) == 1
    assert cli.main(["verify", "--suite", "bogus"]) == 1
    assert cli.main(["quantum", "--input", "x", "--denom", "1", "--d-scale", "two"]) == 1
    capsys.readouterr()


def test_verify_small_suite_passes(capsys):
    assert cli.main(["verify", "--suite", "formulas", "--max-rank", "2", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out


def test_verify_json_report(capsys):
    assert cli.main(["verify", "--suite", "quantum", "--max-rank", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["failures"] == [] and doc["minimal_counterexample"] is None
    assert doc["suites"][0]["suite"] == "quantum" and doc["total_cases"] > 0


def test_verify_mismatch_exits_2(monkeypatch, capsys):
    fake = {
        "suites": [{"suite": "formulas", "cases": 1}],
        "total_cases": 1,
        "failures": [
            {
                "type": "B",
                "rank": 2,
                "orientation": [[1, 2]],
                "d": [1, 1],
                "e": [1, 0],
                "detail": "coefficient differs",
            }
        ],
        "minimal_counterexample": None,
    }
    fake["minimal_counterexample"] = fake["failures"][0]
    monkeypatch.setattr(cli, "run_suite", lambda name, max_rank: fake)
    assert cli.main(["verify", "--suite", "formulas", "--format", "text"]) == 2
    out = capsys.readouterr().out
    assert "type=B rank=2" in out and "d=[1, 1] e=[1, 0]" in out


def test_module_entry_point(tmp_path):
    path = write_doc(tmp_path, {"matrix": [[0, -1], [1, 0]]})
    res = subprocess.run(
        [sys.executable, "-m", "clusterfp", "classical", "--input", path,
         "--denom", "1,1", "--format", "text"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert res.stdout == "u1*u2 + u2 + 1\n"
