"""Engine output against values computed independently of it."""

import pytest

from bvhh import fixtures
from bvhh.bv import BVStructure, fundamental_cocycle
from bvhh.cyclic import MixedComplex, compute_cyclic
from bvhh.hochschild import (
    CochainComplex,
    connes_B_dual,
    gerstenhaber_bracket,
    unit_cochain,
)
from bvhh.report import cochain_window

# scripts/hh_oracle.py: unnormalized complex, separate elimination code
HH_ORACLE = {
    "dual_numbers_f2": [2, 2, 2, 2, 2, 2, 2],
    "dual_numbers_q": [2, 1, 1, 1, 1],
    "matrices_2x2_f3": [1, 0, 0, 0],
    "ground_field_q": [1, 0, 0, 0, 0],
    "ground_field_f2": [1, 0, 0, 0, 0],
    "ground_field_f3": [1, 0, 0, 0, 0],
    "truncated_cubic_q": [3, 2, 2, 2, 2],
    "truncated_cubic_f3": [3, 3, 3, 3, 3],
}


@pytest.mark.parametrize("name", sorted(HH_ORACLE))
def test_hh_dims_match_standalone_oracle(name):
    A, _ = fixtures.load(name)
    want = HH_ORACLE[name]
    C = CochainComplex(A, A.as_bimodule())
    assert C.dims(cochain_window(A, len(want) - 1)) == want


def test_hh_dual_numbers_f2_zero_differential():
    # over F2 every coboundary of F2[x]/x^2 vanishes on the normalized complex
    A, _ = fixtures.load("dual_numbers_f2")
    C = CochainComplex(A, A.as_bimodule())
    for n in range(0, -7, -1):
        assert C.differential(n).is_zero()
        assert len(C.basis(n)) == 2


@pytest.fixture(scope="module")
def f2_bv():
    A, fs = fixtures.load("dual_numbers_f2")
    return A, BVStructure(fundamental_cocycle(fs)), fixtures.named_cochains("dual_numbers_f2", A)


def test_f2_delta_oracles(f2_bv):
    A, bv, named = f2_bv
    oracles = fixtures.raw("dual_numbers_f2")["oracles"]["delta"]
    one = bv.coords(unit_cochain(A))
    for label, want in oracles.items():
        got = bv.delta(named[label])
        assert got == (one if want == "unit" else tuple(0 for _ in one))


def test_f2_bracket_oracle(f2_bv):
    _, bv, named = f2_bv
    for a, b, c in fixtures.raw("dual_numbers_f2")["oracles"]["bracket"]:
        x = gerstenhaber_bracket(named[a], named[b])
        assert bv.coords(x) == bv.coords(named[c])


def test_f2_b_dual_of_eta_m_is_m(f2_bv):
    _, bv, named = f2_bv
    m = bv.fc.cocycle
    got = connes_B_dual(bv.act_m(named["eta"]))
    assert bv.Cd.coords(got) == bv.Cd.coords(m)


@pytest.mark.parametrize("name", ["ground_field_q", "ground_field_f2", "ground_field_f3"])
def test_hc_of_ground_field(name):
    # the bicomplex of F has zero differentials: one F in each even degree
    A, _ = fixtures.load(name)
    g = compute_cyclic(MixedComplex.chains(A), "cyclic", list(range(9)))
    assert g.dims() == [1, 0, 1, 0, 1, 0, 1, 0, 1]
    assert g.all_stable()


def test_hc_dual_numbers_q():
    # HC_n(Q[x]/x^2) = HC_n(Q) + (x-part: one class per degree)
    A, _ = fixtures.load("dual_numbers_q")
    g = compute_cyclic(MixedComplex.chains(A), "cyclic", list(range(6)))
    assert g.dims() == [2, 1, 2, 1, 2, 1]
