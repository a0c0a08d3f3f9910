import json
import subprocess
import sys

import pytest

from bvhh.cli import EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, main
from bvhh.report import SCHEMA_VERSION


def structured(capsys, *argv):
    code = main([*argv, "--format", "structured"])
    return code, json.loads(capsys.readouterr().out)


@pytest.mark.parametrize(
    "algebra, N, dims",
    [
        ("dual_numbers_f2", 6, [2] * 7),
        ("m2_f3", 3, [1, 0, 0, 0]),
        ("ground_field", 3, [1, 0, 0, 0]),
        ("dual_numbers_q", 4, [2, 1, 1, 1, 1]),
    ],
)
def test_hh_dims(capsys, algebra, N, dims):
    code, doc = structured(capsys, "hh", "--algebra", algebra, "--max-degree", str(N))
    assert code == EXIT_OK
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["dims"] == dims
    assert [r["cohomological_degree"] for r in doc["degrees"]] == list(range(N + 1))


def test_cyclic_ground_field(capsys):
    code, doc = structured(capsys, "cyclic", "--algebra", "ground_field", "--variant", "cyclic")
    assert code == EXIT_OK
    assert doc["dims"] == [1, 0, 1, 0, 1]
    assert doc["all_stabilized"]


def test_cyclic_unstable_is_not_fatal(capsys):
    code, doc = structured(capsys, "cyclic", "--algebra", "dual_numbers_f2", "--max-degree", "1")
    assert code == EXIT_OK
    assert not doc["all_stabilized"]


def test_bv_named_oracles(capsys):
    code, doc = structured(capsys, "bv", "--algebra", "dual_numbers_f2", "--trials", "10")
    assert code == EXIT_OK and doc["failures"] == 0
    assert doc["named_classes"]["eta"]["delta"] == [1, 0]
    assert doc["named_classes"]["xi"]["delta"] == [0, 0]
    br = {(b["left"], b["right"]): b["coords"] for b in doc["named_brackets"]}
    assert br[("xi", "eta")] == doc["named_classes"]["xi"]["coords"]


def test_table_output(capsys):
    assert main(["hh", "--algebra", "ground_field_f2", "--max-degree", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "dims: [1, 0, 0]" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["hh", "--algebra", "no_such_algebra"],
        ["hh", "--algebra", "ground_field", "--max-degree", "-2"],
        ["hh", "--algebra", "ground_field", "--bogus"],
        ["verify", "--suite", "nonsense"],
        ["cyclic", "--algebra", "ground_field", "--u-trunc", "-1"],
    ],
)
def test_input_errors_exit_3(capsys, argv):
    with pytest.raises(SystemExit) as e:
        sys.exit(main(argv))
    assert e.value.code == EXIT_INPUT


def test_bv_without_pairing_is_input_error(tmp_path, capsys):
    p = tmp_path / "a.json"
    p.write_text(json.dumps({"field": {"char": 0}, "basis": [{"name": "1"}, {"name": "x"}], "unit": "1",
                             "products": [{"left": "x", "right": "x", "result": []}]}))
    assert main(["bv", "--algebra", str(p)]) == EXIT_INPUT
    assert "pairing" in capsys.readouterr().err


def test_bad_algebra_file_is_input_error(tmp_path, capsys):
    p = tmp_path / "a.json"
    p.write_text(json.dumps({"field": {"char": 0}, "basis": [{"name": "1"}, {"name": "x"}, {"name": "y"}], "unit": "1",
                             "products": [{"left": "x", "right": "x", "result": [{"name": "y"}]},
                                          {"left": "y", "right": "x", "result": [{"name": "x"}]}]}))
    assert main(["hh", "--algebra", str(p)]) == EXIT_INPUT
    assert "associativity" in capsys.readouterr().err


def test_violation_exits_2(capsys, monkeypatch):
    from bvhh import hochschild

    monkeypatch.setattr(hochschild, "MUTATIONS", {"rotation"})
    code = main(["verify", "--suite", "differentials", "--algebra", "dual_numbers_q"])
    assert code == EXIT_VIOLATION
    assert "FAIL" in capsys.readouterr().out


def test_reports_are_byte_stable_and_cache_independent(tmp_path):
    def run(*extra):
        argv = [sys.executable, "-m", "bvhh", "bv", "--algebra", "cp2", "--format", "structured", "--trials", "10"]
        return subprocess.run([*argv, *extra], capture_output=True, check=True).stdout

    plain = run()
    assert run() == plain
    cache = str(tmp_path / "cache")
    assert run("--cache-dir", cache) == plain  # cold
    assert run("--cache-dir", cache) == plain  # warm
    assert any((tmp_path / "cache").iterdir())
