import json

from splinereg.cli import main
from splinereg.geometry import ce1_complex, one_edge_complex


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_regularity_command(capsys):
    code, out, _ = run(capsys, "regularity", "--a", "3", "--b", "4", "--r", "8")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "spline-reg/1"
    assert data["exact_regularity"] == 14
    assert data["lower_bound"] == 14 and data["upper_bound"] == 15


def test_regularity_33_r5(capsys):
    code, out, _ = run(capsys, "regularity", "--a", "3", "--b", "3", "--r", "5")
    assert code == 0
    assert json.loads(out)["exact_regularity"] == 10


def test_regularity_rejects_a2(capsys):
    code, _, err = run(capsys, "regularity", "--a", "2", "--b", "3", "--r", "1")
    assert code != 0
    assert "InvalidSlopeCount" in err


def test_regularity_with_oracle(capsys):
    code, out, _ = run(capsys, "regularity", "--a", "3", "--b", "4", "--r", "6", "--oracle")
    assert code == 0
    assert json.loads(out)["betti_confirms_syzygies"] is True


def test_deterministic_output(capsys):
    _, out1, _ = run(capsys, "regularity", "--a", "4", "--b", "5", "--r", "7")
    _, out2, _ = run(capsys, "regularity", "--a", "4", "--b", "5", "--r", "7")
    assert out1 == out2


def test_caps_enforced(capsys):
    code, _, err = run(capsys, "regularity", "--a", "3", "--b", "3", "--r", "40")
    assert code != 0 and "cap" in err
    code, _, _ = run(
        capsys, "regularity", "--a", "3", "--b", "3", "--r", "25", "--unsafe-no-cap"
    )
    assert code == 0


def test_staircase_r0(capsys):
    code, out, _ = run(capsys, "staircase", "--r", "0", "--s", "2")
    assert code == 0
    assert json.loads(out)["initial_ideal"] == ["x", "z"]


def test_staircase_r8_s3(capsys):
    code, out, _ = run(capsys, "staircase", "--r", "8", "--s", "3")
    data = json.loads(out)
    assert data["lambda"] == [13, 11, 10, 8, 7, 5, 4, 2, 1]


def test_staircase_full(capsys):
    code, out, _ = run(
        capsys, "staircase", "--r", "8", "--a", "3", "--b", "4", "--emit-graph"
    )
    assert code == 0
    data = json.loads(out)
    assert data["in_q"] == ["x^4", "x^3 z^2", "y^3", "y^2 z", "y z^2", "z^4"]
    assert sorted(e["lcm"] for e in data["buchberger_graph"]["edges"]) == sorted(
        ["x^4 z^2", "x^3 z^4", "y^3 z", "y^2 z^2", "y z^4",
         "x^4 y^3", "x^4 y^2 z", "x^3 y z^2"]
    )
    assert data["syz3"] == ["x^4 y^3 z", "x^4 y^2 z^2", "x^3 y z^4"]


def test_sweep_33(capsys):
    code, out, _ = run(capsys, "sweep", "--a", "3..3", "--b", "3..3", "--r", "1..12")
    assert code == 0
    data = json.loads(out)
    assert [row["exact"] for row in data["rows"]] == [2 * r for r in range(1, 13)]
    assert data["violations"] == []


def test_sweep_full_grid_no_violations(capsys):
    code, out, _ = run(capsys, "sweep", "--a", "3..8", "--b", "3..8", "--r", "1..12")
    assert code == 0
    data = json.loads(out)
    assert data["violations"] == []
    assert data["summary"].endswith("0 violations")


def test_sweep_empty_range_is_usage_error(capsys):
    code, _, err = run(capsys, "sweep", "--a", "5..3", "--b", "3..3", "--r", "1..2")
    assert code != 0


def test_betti_command(capsys):
    code, out, _ = run(capsys, "betti", "--a", "3", "--b", "4", "--r", "8")
    assert code == 0
    data = json.loads(out)
    assert data["closed_forms_match_oracle"] is True
    assert len(data["betti"]["1"]) == 8 and len(data["betti"]["2"]) == 3


def test_analyze_one_edge(tmp_path, capsys):
    path = tmp_path / "one33.json"
    path.write_text(one_edge_complex(3, 3).to_json())
    code, out, _ = run(capsys, "analyze", str(path), "--r", "2")
    assert code == 0
    data = json.loads(out)
    assert data["regularity"]["exact_regularity"] == 4
    assert data["regularity"]["routes"]["chain_oracle"] == 4


def test_analyze_ce1_path_bounds(tmp_path, capsys):
    path = tmp_path / "ce1.json"
    path.write_text(ce1_complex().to_json())
    code, out, _ = run(capsys, "analyze", str(path), "--r", "1", "--oracle")
    assert code == 0
    data = json.loads(out)
    assert data["path_bounds"]["oracle_within_bounds"] is True


def test_analyze_spline_dims(tmp_path, capsys):
    path = tmp_path / "one33.json"
    path.write_text(one_edge_complex(3, 3).to_json())
    code, out, _ = run(capsys, "analyze", str(path), "--r", "1", "--d", "3", "--oracle")
    data = json.loads(out)
    dims = data["spline_dimensions"]
    assert all(row["agree"] for row in dims)
    assert dims[0]["dim_formula"] == 1


def test_analyze_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{this is not json")
    code, _, err = run(capsys, "analyze", str(path), "--r", "1")
    assert code != 0
    assert "ParseError" in err


def test_table_format(capsys):
    code, out, _ = run(
        capsys, "regularity", "--a", "3", "--b", "3", "--r", "2", "--format", "table"
    )
    assert code == 0
    assert "exact_regularity: 4" in out
