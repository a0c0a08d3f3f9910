import pytest

from bvhh import fixtures
from bvhh.cyclic import (
    HomologyProduct,
    MixedComplex,
    TorComplex,
    UnstableTruncation,
    compute_cyclic,
    connes_exact_maps,
)
from bvhh.hochschild import make_chain
from bvhh.verify import BracketTable, FixtureContext


def chains(name):
    A, _ = fixtures.load(name)
    return A, MixedComplex.chains(A)


@pytest.mark.parametrize("variant", ["cyclic", "periodic"])
def test_ground_field_variants(variant):
    _, mixed = chains("ground_field_q")
    assert compute_cyclic(mixed, variant, list(range(7))).dims() == [1, 0, 1, 0, 1, 0, 1]


def test_negative_of_ground_field_is_concentrated_in_even_nonnegative():
    A, _ = fixtures.load("ground_field_q")
    g = compute_cyclic(MixedComplex.dual(A), "negative", list(range(-4, 5)))
    assert g.dims() == [0, 0, 0, 0, 1, 0, 1, 0, 1]


def test_matrices_are_morita_invariant():
    _, mixed = chains("matrices_2x2_f3")
    assert compute_cyclic(mixed, "cyclic", list(range(4))).dims() == [1, 0, 1, 0]


def test_tor_differential_squares_to_zero():
    _, mixed = chains("truncated_cubic_q")
    T = TorComplex(mixed, 3)
    for n in range(1, 5):
        assert T.differential(n - 1).compose(mixed.F, T.differential(n)).is_zero()


@pytest.mark.parametrize("name", ["dual_numbers_q", "truncated_cubic_f3", "cp2_q", "sphere3_q"])
@pytest.mark.parametrize("kind", ["chains", "dual"])
def test_connes_sequence_exact(name, kind):
    ctx = FixtureContext(name)
    mixed = MixedComplex(ctx.K if kind == "chains" else ctx.Cd, kind)
    for n in range(-2, 3):
        for U in (1, 2):
            e = connes_exact_maps(mixed, n, U)
            assert all(e.exact.values()), (n, U, e.exact)


def test_bounded_below_degrees_stabilize_exactly():
    _, mixed = chains("dual_numbers_q")
    g = compute_cyclic(mixed, "cyclic", list(range(6)))
    assert g.all_stable()
    assert all(c.U <= n // 2 + 1 for n, c in g.by_degree.items())


def test_unstable_degree_is_reported_and_strict_raises():
    A, _ = fixtures.load("dual_numbers_f2")
    mixed = MixedComplex.dual(A)
    c = compute_cyclic(mixed, "negative", [0]).by_degree[0]
    assert not c.stable
    dims = list(c.dims_by_U.values())
    assert dims == list(range(dims[0], dims[0] + len(dims)))  # one new class per step
    with pytest.raises(UnstableTruncation):
        compute_cyclic(mixed, "negative", [0], strict=True)


@pytest.mark.parametrize("name", ["ground_field_q", "matrices_2x2_f3"])
def test_chain_bracket_vanishes_when_duality_holds(name):
    A, mixed = chains(name)
    prod = HomologyProduct(mixed, cycle=make_chain(A, {(A.unit, ()): 1}))
    assert prod.hypothesis_holds(range(-2, 6))
    g = compute_cyclic(mixed, "cyclic", list(range(4)))
    br = BracketTable(g, prod)
    assert all(not any(br(n1, c1, n2, c2)) for (n1, c1), (n2, c2) in br.pairs())


def test_bracket_degree_and_a_nonzero_value():
    ctx = FixtureContext("dual_numbers_q")
    mixed = MixedComplex(ctx.Cd, "dual")
    g = compute_cyclic(mixed, "negative", list(range(-3, 4)))
    br = BracketTable(g, HomologyProduct(mixed, bv=ctx.bv))
    assert br.k == 2  # d = 0
    vals = {(n1, n2): br(n1, c1, n2, c2) for (n1, c1), (n2, c2) in br.pairs()}
    assert vals[(-1, -1)] != (0, 0)
