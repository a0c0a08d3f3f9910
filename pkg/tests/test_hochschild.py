"""Cochain-level identities on random elements (hypothesis)."""

from hypothesis import given
from hypothesis import strategies as st

from bvhh.algebra import sign
from bvhh.hochschild import (
    chain_differential,
    cochain_differential,
    connes_B,
    connes_B_dual,
    cup,
    gerstenhaber_bracket,
    iota,
    pair,
    unit_cochain,
)

from conftest import draw_element


def cochain_degrees(ctx, r=3):
    return ctx.window(ctx.C, r)


def chain_degrees(ctx, r=3):
    return ctx.window(ctx.K, r)


@given(st.data())
def test_D_squared(ctx, data):
    f = draw_element(data, ctx.C, cochain_degrees(ctx))
    assert cochain_differential(cochain_differential(f)).is_zero()


@given(st.data())
def test_chain_d_B_relations(ctx, data):
    c = draw_element(data, ctx.K, chain_degrees(ctx))
    d, B = chain_differential, connes_B
    assert d(d(c)).is_zero()
    assert B(B(c)).is_zero()
    assert (d(B(c)) + B(d(c))).is_zero()


@given(st.data())
def test_dual_side(ctx, data):
    g = draw_element(data, ctx.Cd, ctx.window(ctx.Cd, 3))
    Bd, D = connes_B_dual, cochain_differential
    assert Bd(Bd(g)).is_zero()
    assert (D(Bd(g)) + Bd(D(g))).is_zero()


@given(st.data())
def test_pairing_adjunctions(ctx, data):
    F = ctx.A.field
    c = draw_element(data, ctx.K, chain_degrees(ctx))
    n = c.degree
    if ctx.Cd.basis(-n - 1):
        g = draw_element(data, ctx.Cd, [-n - 1])
        assert F.norm(pair(connes_B_dual(g), c) - sign(g.degree) * pair(g, connes_B(c))) == 0
    if ctx.Cd.basis(-n + 1):
        g = draw_element(data, ctx.Cd, [-n + 1])
        assert F.norm(pair(cochain_differential(g), c) + sign(g.degree) * pair(g, chain_differential(c))) == 0


@given(st.data())
def test_cup_is_associative_and_unital(ctx, data):
    degs = cochain_degrees(ctx, 2)
    f, g, h = (draw_element(data, ctx.C, degs) for _ in range(3))
    assert (cup(cup(f, g), h) + cup(f, cup(g, h)).scaled(-1)).is_zero()
    one = unit_cochain(ctx.A)
    assert (cup(one, f) + f.scaled(-1)).is_zero()


@given(st.data())
def test_D_derivation_of_cup(ctx, data):
    D = cochain_differential
    degs = cochain_degrees(ctx)
    f, g = draw_element(data, ctx.C, degs), draw_element(data, ctx.C, degs)
    rhs = cup(D(f), g) + cup(f, D(g)).scaled(sign(f.degree))
    assert (D(cup(f, g)) + rhs.scaled(-1)).is_zero()


@given(st.data())
def test_bracket_antisymmetric_and_D_derivation(ctx, data):
    D, br = cochain_differential, gerstenhaber_bracket
    degs = cochain_degrees(ctx)
    f, g = draw_element(data, ctx.C, degs), draw_element(data, ctx.C, degs)
    s = sign((f.degree + 1) * (g.degree + 1))
    assert (br(f, g) + br(g, f).scaled(s)).is_zero()
    rhs = br(D(f), g) + br(f, D(g)).scaled(sign(f.degree + 1))
    assert (D(br(f, g)) + rhs.scaled(-1)).is_zero()


@given(st.data())
def test_contraction_commutes_with_differentials(ctx, data):
    d, D = chain_differential, cochain_differential
    f = draw_element(data, ctx.C, cochain_degrees(ctx, 2))
    c = draw_element(data, ctx.K, chain_degrees(ctx))
    rhs = iota(f, d(c)).scaled(sign(f.degree)) + iota(D(f), c)
    assert (d(iota(f, c)) + rhs.scaled(-1)).is_zero()
