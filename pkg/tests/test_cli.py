"""Command-line interface: outputs, determinism, exit codes."""

import json

import pytest

from greenseq.cli import main


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.json"
    path.write_text('{"type": "typeA", "orientation": "<>"}\n')
    return str(path)


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text('{"type": "nakayama", "cyclic": false, "kupisch": [2, 1]}\n')
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog(capsys, example_file):
    code, out, _ = run(capsys, "catalog", example_file)
    assert code == 0
    data = json.loads(out)
    assert len(data["modules"]) == 6
    assert all(m["brick"] for m in data["modules"])


def test_bricks_count(capsys, example_file):
    code, out, _ = run(capsys, "bricks", example_file)
    assert code == 0
    assert json.loads(out)["count"] == 6


def test_mgs_listing(capsys, a2_file):
    code, out, _ = run(capsys, "mgs", a2_file)
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 2
    assert data["sequences"][0]["bricks"] == ["1", "2"]
    assert data["sequences"][1]["descriptors"] == ["U(2,1)", "U(1,2)", "U(1,1)"]


def test_classes_listing(capsys, example_file):
    code, out, _ = run(capsys, "classes", example_file)
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 6
    keys = {tuple(c["summand_key"]) for c in data["classes"]}
    assert ("12", "2", "32", "12[1]", "2[1]", "32[1]") in keys


def test_poset_dot(capsys, example_file):
    code, out, _ = run(capsys, "poset", example_file, "--order", "summand")
    assert code == 0
    assert out.startswith("digraph hasse {")
    assert out.count("->") == 6
    assert out.count("label=") == 6


def test_poset_dot_identical_for_equal_orders(capsys, example_file):
    _, out_s, _ = run(capsys, "poset", example_file, "--order", "summand")
    _, out_h, _ = run(capsys, "poset", example_file, "--order", "hn")
    assert out_s == out_h


def test_poset_json_roundtrip(capsys, example_file):
    code, out, _ = run(capsys, "poset", example_file, "--order", "pentagon",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["covers"]) == 6
    assert json.dumps(data, indent=2, sort_keys=True) + "\n" == out


def test_poset_output_file(capsys, tmp_path, example_file):
    target = tmp_path / "poset.dot"
    code, out, _ = run(capsys, "poset", example_file, "--order", "summand",
                       "-o", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("digraph hasse {")


def test_brick_order_refusal(capsys, example_file):
    code, _, err = run(capsys, "poset", example_file, "--order", "brick")
    assert code == 2
    assert "1<-2->3" in err and "antisymmetry" in err


def test_hn_by_brick_list(capsys, a2_file):
    code, out, _ = run(capsys, "hn", a2_file, "--mgs", "1,2",
                       "--module", "U(1,2)")
    assert code == 0
    data = json.loads(out)
    assert data["stable_factors"] == [["1", 1], ["2", 1]]
    assert [l["brick"] for l in data["layers"]] == ["1", "2"]


def test_hn_single_layer(capsys, a2_file):
    code, out, _ = run(capsys, "hn", a2_file, "--mgs", "2,12,1",
                       "--module", "12")
    assert code == 0
    data = json.loads(out)
    assert data["layers"] == [
        {"brick": "12", "factor": "12", "multiplicity": 1, "position": 2}]


def test_hn_example_golden(capsys, example_file):
    code, out, _ = run(capsys, "hn", example_file,
                       "--mgs", "2,12,1,32,3", "--module", "132")
    assert code == 0
    assert json.loads(out)["stable_factors"] == [["1", 1], ["32", 1]]


def test_hn_sum_expression(capsys, a2_file):
    code, out, _ = run(capsys, "hn", a2_file, "--mgs", "0",
                       "--module", "U(2,1)+U(1,2)")
    assert code == 0
    data = json.loads(out)
    assert data["module"] == "12+2"
    assert data["stable_factors"] == [["1", 1], ["2", 2]]


def test_hn_invalid_brick_list_explains(capsys, a2_file):
    code, _, err = run(capsys, "hn", a2_file, "--mgs", "2,1", "--module", "12")
    assert code == 2
    assert "12" in err and "inserted" in err


def test_verify_suites_pass(capsys, example_file, a2_file):
    for suite in ("theoremA", "theoremB", "lemmas"):
        code, out, _ = run(capsys, "verify", example_file, "--suite", suite)
        assert code == 0
        assert json.loads(out)["passed"] is True
    code, out, _ = run(capsys, "verify", a2_file, "--suite", "theoremC")
    assert code == 0
    code, out, _ = run(capsys, "verify", a2_file, "--suite", "all")
    assert code == 0


def test_verify_theorem_c_refused_off_nakayama(capsys, example_file):
    code, _, err = run(capsys, "verify", example_file, "--suite", "theoremC")
    assert code == 2
    assert "Nakayama" in err


def test_parse_error_reports_position(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"type": "typeA",\n  "orientation": }\n')
    code, _, err = run(capsys, "catalog", str(path))
    assert code == 2
    assert "line 2" in err and "column" in err


def test_unknown_key_rejected(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"type": "typeA", "orientation": "<", "quiver": "A2"}\n')
    code, _, err = run(capsys, "catalog", str(path))
    assert code == 2
    assert "unknown keys" in err


def test_gate_error_is_usage_exit(capsys, example_file):
    code, _, err = run(capsys, "--brick-gate", "2", "mgs", example_file)
    assert code == 2
    assert "gate" in err


def test_deterministic_output(capsys, example_file):
    _, out1, _ = run(capsys, "classes", example_file)
    _, out2, _ = run(capsys, "classes", example_file)
    assert out1 == out2


def test_json_roundtrip_identity(capsys, example_file):
    for argv in (["catalog", example_file], ["mgs", example_file],
                 ["classes", example_file]):
        _, out, _ = run(capsys, *argv)
        assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out


def test_parallel_flag_same_output(capsys, example_file):
    _, out1, _ = run(capsys, "mgs", example_file)
    _, out2, _ = run(capsys, "--parallel", "4", "mgs", example_file)
    assert out1 == out2


def test_exact_flag_same_output(capsys, example_file):
    _, out1, _ = run(capsys, "bricks", example_file)
    _, out2, _ = run(capsys, "--exact", "bricks", example_file)
    assert out1 == out2


def test_hn_by_raw_id(capsys, a2_file):
    code, out, _ = run(capsys, "hn", a2_file, "--mgs", "0", "--module", "#1")
    assert code == 0
    assert json.loads(out)["module"] == "12"


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "catalog", "/nonexistent/algebra.json")
    assert code == 2
    assert "cannot read" in err


def test_bad_module_expression(capsys, a2_file):
    code, _, err = run(capsys, "hn", a2_file, "--mgs", "0", "--module", "U(9,9)")
    assert code == 2
    assert "U(9,9)" in err


def test_failed_check_maps_to_exit_one(capsys, a2_file, monkeypatch):
    from greenseq import cli
    from greenseq.verify import CheckResult

    monkeypatch.setattr(cli.verify_mod, "run_suite",
                        lambda *a, **k: [CheckResult("synthetic", False, {})])
    code, out, _ = run(capsys, "verify", a2_file, "--suite", "lemmas")
    assert code == 1
    assert json.loads(out)["passed"] is False
