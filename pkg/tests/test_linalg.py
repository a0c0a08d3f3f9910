"""Exact elimination, checked against sympy's DomainMatrix."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from bvhh.field import FieldError, GroundField
from bvhh.linalg import (
    CompositeNotZero,
    SparseMatrix,
    homology_at,
    inverse,
    rank,
    rank_kernel_image,
    solve,
)

FIELDS = [GroundField(0), GroundField(2), GroundField(3), GroundField(5)]


def sympy_rank(F, dense):
    if not dense or not dense[0]:
        return 0
    dom = QQ if F.char == 0 else GF(F.char)
    rows = [[dom(int(x)) for x in row] for row in dense]  # entries are small ints here
    return DomainMatrix(rows, (len(dense), len(dense[0])), dom).rank()


@st.composite
def matrices(draw, max_dim=6):
    F = draw(st.sampled_from(FIELDS))
    r, c = draw(st.integers(1, max_dim)), draw(st.integers(1, max_dim))
    entries = draw(st.lists(st.lists(st.integers(-2, 2), min_size=c, max_size=c), min_size=r, max_size=r))
    dense = [[F.norm(x) for x in row] for row in entries]
    return F, dense


@given(matrices())
def test_rank_matches_sympy(fm):
    F, dense = fm
    assert rank(F, SparseMatrix.from_dense(F, dense)) == sympy_rank(F, dense)


@given(matrices())
def test_rank_nullity_and_kernel(fm):
    F, dense = fm
    M = SparseMatrix.from_dense(F, dense)
    r, kernel, image = rank_kernel_image(F, M)
    assert r + len(kernel) == M.cols
    for v in kernel:
        assert M.apply(F, v) == {}


@given(matrices(), st.lists(st.integers(-2, 2), min_size=6, max_size=6))
def test_solve_finds_preimages(fm, xs):
    F, dense = fm
    M = SparseMatrix.from_dense(F, dense)
    x = {j: F.norm(v) for j, v in enumerate(xs[: M.cols]) if F.norm(v)}
    b = M.apply(F, x)
    y = solve(F, M, b)
    assert y is not None and M.apply(F, y) == b


@given(matrices(max_dim=4))
def test_inverse(fm):
    F, dense = fm
    n = min(len(dense), len(dense[0]))
    sq = [row[:n] for row in dense[:n]]
    M = SparseMatrix.from_dense(F, sq)
    if rank(F, M) < n:
        with pytest.raises(ZeroDivisionError):
            inverse(F, M)
        return
    assert M.compose(F, inverse(F, M)).to_dense(F) == SparseMatrix.identity(n).to_dense(F)


@given(matrices(max_dim=5))
def test_homology_of_d_then_zero(fm):
    F, dense = fm
    M = SparseMatrix.from_dense(F, dense)
    sq = homology_at(F, M, SparseMatrix.zero(0, M.rows))
    assert sq.dim == M.rows - sympy_rank(F, dense)
    for k, rep in enumerate(sq.homology_reps):
        assert sq.coords(rep) == tuple(1 if i == k else 0 for i in range(sq.dim))


def test_composite_not_zero_is_reported():
    F = GroundField(0)
    d = SparseMatrix.from_dense(F, [[1], [0]])
    with pytest.raises(CompositeNotZero):
        homology_at(F, d, SparseMatrix.from_dense(F, [[1, 0]]))


def test_field_parse_and_dump():
    Q, F3 = GroundField(0), GroundField(3)
    assert Q.parse("2/4") == Fraction(1, 2) and Q.dump(Fraction(1, 2)) == "1/2"
    assert Q.dump(Q.parse("6/3")) == 2
    assert F3.parse("1/2") == 2 and F3.parse(-1) == 2
    assert F3.show(2) == "-1"
    with pytest.raises(FieldError):
        F3.parse("1/3")
    with pytest.raises(FieldError):
        GroundField(4)
    with pytest.raises(FieldError):
        Q.parse(True)


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 200))
def test_field_inverse(p, x):
    F = GroundField(p)
    if x % p:
        assert F.norm(x * F.inv(x % p)) == 1
