"""CLI behavior: formats, exit codes, determinism, schema round-trip."""

import csv
import io
import json
from pathlib import Path

import jsonschema
import pytest

from secclasses import acceptance
from secclasses.cli import main

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "schemas" / "report.v1.json")
    .read_text())


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return code, payload, err


def test_vey_q1(capsys):
    code, out, _ = run(capsys, "vey", "--q", "1")
    assert code == 0
    assert "y1*c1" in out and "3" in out


def test_vey_rigid_only_includes_degree_11_class(capsys):
    code, payload, _ = run_json(capsys, "vey", "--q", "4", "--rigid-only")
    assert code == 0
    classes = {c["class"]: c for c in payload["results"]["classes"]}
    assert "y2*c2^2" in classes
    assert classes["y2*c2^2"]["degree"] == 11
    assert all(c["rigid"] for c in classes.values())


def test_vey_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["vey", "--q", "0"])
    assert exc.value.code == 2


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cohomology_q1(capsys):
    code, payload, _ = run_json(capsys, "cohomology", "--q", "1")
    assert code == 0
    assert payload["results"]["dims"] == {"0": 1, "3": 1}


def test_cohomology_framed_matches_vey_counts(capsys):
    code, payload, _ = run_json(capsys, "cohomology", "--q", "2", "--framed")
    assert code == 0
    assert payload["results"]["dims"] == {"0": 1, "5": 2, "7": 1, "8": 2}


def test_cohomology_budget_exit_3(capsys):
    code, out, err = run(capsys, "cohomology", "--q", "12")
    assert code == 3
    assert "budget" in err


def test_cohomology_representatives(capsys):
    code, payload, _ = run_json(capsys, "cohomology", "--q", "1",
                                "--representatives")
    deg3 = [row for row in payload["results"]["by_degree"] if row["degree"] == 3]
    assert deg3[0]["representatives"] == ["y1*c1"]


def test_pontrjagin_q6_block(capsys):
    code, payload, _ = run_json(capsys, "pontrjagin", "--q", "6")
    assert code == 0
    results = payload["results"]
    assert results["passed"] is True
    block8 = next(b for b in results["blocks"] if b["degree"] == 8)
    assert block8["matrix"] == [["2", "0"], ["1", "1"]]
    assert block8["rank"] == 2
    assert "normaliz" in results["normalization"]


def test_pontrjagin_q2(capsys):
    code, payload, _ = run_json(capsys, "pontrjagin", "--q", "2")
    assert code == 0
    assert payload["results"]["blocks"][0]["matrix"] == [["1"]]


def test_pontrjagin_q10_passes(capsys):
    code, payload, _ = run_json(capsys, "pontrjagin", "--q", "10")
    assert code == 0
    assert payload["results"]["passed"] is True


def test_pontrjagin_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["pontrjagin", "--q", "1"])
    assert exc.value.code == 2


def test_frame_2k(capsys):
    code, payload, _ = run_json(capsys, "frame", "--case", "2k", "--k", "2")
    assert code == 0
    results = payload["results"]
    assert results["passed"] is True
    assert len([c for c in results["classes"] if c["nonzero"]]) == 1


def test_frame_4k2(capsys):
    code, payload, _ = run_json(capsys, "frame", "--case", "4k2", "--k", "2")
    assert code == 0
    results = payload["results"]
    assert results["passed"] is True
    names = {c["class"]: c for c in results["classes"]}
    assert names["y4*c4"]["nonzero"] is True
    assert names["y2*c2^3"]["expected_zero"] is True
    assert names["y2*c2^3"]["nonzero"] is False


def test_frame_guard_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frame", "--case", "2k", "--k", "1"])
    assert exc.value.code == 2


def test_frame_budget_exit_3(capsys):
    code, out, err = run(capsys, "frame", "--case", "2k", "--k", "3",
                         "--max-dim", "10")
    assert code == 3
    assert "budget" in err


def test_catalog_q4_dim11(capsys):
    code, payload, _ = run_json(capsys, "catalog", "--q", "4", "--dim", "11")
    assert code == 0
    results = payload["results"]
    assert [c["class"] for c in results["classes"]] == ["y2*c2^2"]
    assert results["family_rank"] == 1


def test_catalog_q6_dim15_two_classes(capsys):
    code, payload, _ = run_json(capsys, "catalog", "--q", "6", "--dim", "15")
    assert code == 0
    results = payload["results"]
    assert results["family_rank"] == 2
    assert sorted(c["class"] for c in results["classes"]) == \
        ["y2*c2^3", "y4*c4"]


def test_catalog_empty(capsys):
    code, payload, _ = run_json(capsys, "catalog", "--q", "6", "--dim", "14")
    assert code == 0
    assert payload["results"]["classes"] == []
    assert payload["results"]["family_rank"] == 0


def test_catalog_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["catalog", "--q", "5", "--dim", "11"])
    assert exc.value.code == 2


def test_determinism_byte_identical(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run(capsys, "pontrjagin", "--q", "6", "--format", "json")
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    for _ in range(2):
        code, out, _ = run(capsys, "vey", "--q", "3")
        outputs.append(out)
    assert outputs[2] == outputs[3]


def test_csv_output_parses(capsys):
    code, out, _ = run(capsys, "vey", "--q", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["class"] for r in rows] == \
        ["y1*c1^2", "y1*c2", "y1*y2*c1^2", "y1*y2*c2", "y2*c2"]


def test_no_floats_in_json(capsys):
    code, out, _ = run(capsys, "pontrjagin", "--q", "8", "--format", "json")

    def walk(node):
        if isinstance(node, float):
            raise AssertionError("float in report")
        if isinstance(node, dict):
            for v in node.values():
                walk(v)
        if isinstance(node, list):
            for v in node:
                walk(v)

    walk(json.loads(out))


def test_selftest_contract(capsys):
    # exit 0 iff all acceptance criteria pass; failing criteria are named
    code, out, _ = run(capsys, "selftest")
    results = acceptance.run_all()
    all_pass = all(ok for _, ok, _ in results)
    assert (code == 0) == all_pass
    for name, ok, _ in results:
        marker = "PASS" if ok else "FAIL"
        assert f"{marker}  {name}" in out
