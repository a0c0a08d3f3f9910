import pytest

from bvhh import hochschild
from bvhh.verify import (
    MUTATION_FLAGS,
    SUITES,
    Check,
    VerifyConfig,
    cyclic_degree_order,
    mutation_witness,
    parse_suites,
    run,
)


@pytest.mark.parametrize("flag", MUTATION_FLAGS)
def test_each_sign_flip_is_caught(flag):
    c = mutation_witness(flag)
    assert c is not None and c.failed
    assert c.witness
    assert hochschild.MUTATIONS == set()


def test_unmutated_quick_suites_pass():
    cfg = VerifyConfig(suites=("differentials", "gerstenhaber", "bv"), fixtures=("dual_numbers_q", "cp2_q"))
    checks = list(run(cfg))
    assert checks and not [c.line() for c in checks if c.failed]


def test_calculus_is_seeded():
    cfg = VerifyConfig(suites=("calculus",), fixtures=("truncated_cubic_f3",), trials=15, seed=7)
    assert [c.line() for c in run(cfg)] == [c.line() for c in run(cfg)]


def test_check_lines():
    assert Check("bv", "f", "x", True).line() == "PASS bv/f/x"
    assert Check("bv", "f", "x", False, info=True).line().startswith("WARN")
    assert not Check("bv", "f", "x", False, info=True).failed
    assert "witness: w" in Check("bv", "f", "x", False, "d", "w").line()


def test_parse_suites():
    assert parse_suites("all") == SUITES
    assert parse_suites("bv, cyclic") == ("bv", "cyclic")
    with pytest.raises(ValueError):
        parse_suites("bv,nope")


def test_degree_order():
    assert cyclic_degree_order(-2, 3) == [0, 1, -1, 2, -2, 3]
    assert cyclic_degree_order(0, 2) == [0, 1, 2]
