import json

import pytest

from bvhh import fixtures
from bvhh.algebra import AlgebraError, check_theta_bimodule_map, dual_bimodule, load_algebra


def dual_numbers(char=0, **extra):
    d = {
        "field": {"char": char},
        "basis": [{"name": "1"}, {"name": "x"}],
        "unit": "1",
        "products": [{"left": "x", "right": "x", "result": []}],
    }
    d.update(extra)
    return d


def test_unit_products_are_filled_in():
    A, fs = load_algebra(dual_numbers())
    x = A.index["x"]
    assert A.product({A.unit: 1}, {x: 1}) == {x: 1}
    assert A.product({x: 1}, {x: 1}) == {}
    assert fs is None


def test_json_string_and_path_agree(tmp_path):
    p = tmp_path / "a.json"
    p.write_text(json.dumps(dual_numbers()))
    a1, _ = load_algebra(str(p))
    a2, _ = load_algebra(json.dumps(dual_numbers()))
    assert a1.digest == a2.digest


@pytest.mark.parametrize(
    "mutate, needle",
    [
        (lambda d: d["products"].append({"left": "x", "right": "x", "result": []}), "twice"),
        (lambda d: d["products"][0].update(result=[{"name": "y"}]), "unknown basis"),
        (lambda d: d.update(unit="u"), "unit"),
        (lambda d: d["field"].update(char=4), "prime"),
        (lambda d: d["basis"].append({"name": "x"}), "duplicate"),
        (lambda d: d.pop("basis"), "parse error"),
    ],
)
def test_rejects_bad_presentations(mutate, needle):
    d = dual_numbers()
    mutate(d)
    with pytest.raises(AlgebraError, match=needle):
        load_algebra(d)


def test_associativity_witness():
    # (x*x)*x = y*x = x but x*(x*x) = x*y = 0
    d = {
        "field": {"char": 0},
        "basis": [{"name": "1"}, {"name": "x"}, {"name": "y"}],
        "unit": "1",
        "products": [
            {"left": "x", "right": "x", "result": [{"name": "y"}]},
            {"left": "x", "right": "y", "result": []},
            {"left": "y", "right": "x", "result": [{"name": "x"}]},
        ],
    }
    with pytest.raises(AlgebraError) as e:
        load_algebra(d)
    assert "associativity" in str(e.value)
    assert e.value.witness == ("x", "x", "x")


def test_grading_violation():
    d = dual_numbers()
    d["basis"][1]["degree"] = -1
    d["products"][0]["result"] = [{"name": "x"}]
    with pytest.raises(AlgebraError, match="grading"):
        load_algebra(d)


def test_characteristic_mismatch():
    d = dual_numbers(char=2, pairing=[[0, "1/2"], ["1/2", 0]])
    with pytest.raises(AlgebraError, match="characteristic"):
        load_algebra(d)


def test_degenerate_pairing_rejected():
    with pytest.raises(AlgebraError):
        load_algebra(dual_numbers(pairing=[[1, 0], [0, 0]]))


@pytest.mark.parametrize("name", fixtures.ALL)
def test_fixture_structures(name):
    A, fs = fixtures.load(name)
    A.validate()
    A.as_bimodule().validate()
    dual_bimodule(A).validate()
    assert A.as_bimodule() is A.as_bimodule()
    assert dual_bimodule(A) is dual_bimodule(A)
    if fs is not None:
        check_theta_bimodule_map(fs)


def test_aliases_resolve():
    for alias, target in fixtures.ALIASES.items():
        assert fixtures.resolve(alias) == fixtures.resolve(target)
    with pytest.raises(AlgebraError):
        fixtures.resolve("no_such_algebra")
