"""Duality HH*(A;A) -> HH*(A;A^v), the BV operator and its identities.

Everything here works with homology classes in coordinates: a class in lower
degree ``n`` of HH*(A;A) is a tuple of coordinates against the representative
basis chosen by :class:`~bvhh.hochschild.CochainComplex`.  Operations on
classes are done on representatives and read back through
``Subquotient.coords``, which is exactly coset equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import FrobeniusStructure, GradedAlgebra, dual_bimodule, sign
from .hochschild import (
    Chain,
    ChainComplex,
    Cochain,
    CochainComplex,
    connes_B,
    connes_B_dual,
    cochain_differential,
    cup,
    gerstenhaber_bracket,
    iota,
    tensor_action,
)
from .linalg import SparseMatrix, rank, solve


class TheoremViolation(ArithmeticError):
    """A computed structure contradicts a statement that must hold."""

    def __init__(self, msg: str, witness=None):
        super().__init__(msg)
        self.witness = witness


class FundamentalClassError(ValueError):
    pass


@dataclass
class FundamentalClass:
    """A cocycle m in C*(A; A^v) and the bookkeeping around it.

    ``degree`` is the lower degree of m (= d for a Frobenius form of degree d).
    ``b_dual_exact`` records whether B^v[m] vanishes in homology.
    """

    algebra: GradedAlgebra
    cocycle: Cochain
    degree: int
    frobenius: FrobeniusStructure | None = None
    b_dual_exact: bool = True


def _module_condition_matrix(fs: FrobeniusStructure) -> SparseMatrix:
    A = fs.algebra
    D = dual_bimodule(A)
    t1 = fs.theta({A.unit: 1})
    cols = [D.act_left({a: 1}, t1) for a in range(A.dim)]
    return SparseMatrix.from_columns(A.field, A.dim, cols)


def fundamental_cocycle(fs: FrobeniusStructure) -> FundamentalClass:
    """m = ([] -> Theta(1)), checked to be a cocycle with a -> a.Theta(1) bijective."""
    A = fs.algebra
    D = dual_bimodule(A)
    t1 = fs.theta({A.unit: 1})
    m = Cochain(D, fs.degree_d, {((), j): v for j, v in t1.items()})
    if rank(A.field, _module_condition_matrix(fs)) != A.dim:
        raise FundamentalClassError("a -> a.Theta(1) is not bijective on A")
    if not cochain_differential(m).is_zero():
        raise FundamentalClassError("Theta(1) is not a cocycle (the pairing is not invariant)")
    if not connes_B_dual(m).is_zero():
        raise TheoremViolation("B^v of a word-length-0 cochain must vanish", m)
    return FundamentalClass(A, m, fs.degree_d, fs, True)


def candidate_class(A: GradedAlgebra, m: Cochain, cutoff: int | None = None) -> FundamentalClass:
    """General mode: any cocycle m in C*(A; A^v).

    The module-isomorphism hypothesis is checked degree by degree when a
    :class:`BVStructure` is built; here we check that m is a cocycle and
    whether B^v[m] is zero in homology.
    """
    if m.module.tag != "dual":
        raise FundamentalClassError("a candidate class needs coefficients in A^v")
    if not cochain_differential(m).is_zero():
        raise FundamentalClassError("candidate m is not a cocycle")
    Cd = CochainComplex(A, m.module, cutoff)
    bm = connes_B_dual(m)
    exact = bm.is_zero() or Cd.is_boundary(bm)
    return FundamentalClass(A, m, m.degree, None, exact)


@dataclass
class RelationReport:
    name: str
    degrees: tuple
    holds: bool
    detail: dict = field(default_factory=dict)


class BVStructure:
    """Duality matrices and Delta for a fundamental class, computed lazily.

    ``C`` is C*(A;A), ``Cd`` is C*(A;A^v).  Lower degree n of HH*(A;A) maps
    to lower degree n + fc.degree of HH*(A;A^v).
    """

    def __init__(self, fc: FundamentalClass, cutoff: int | None = None, cache_dir=None):
        self.fc = fc
        self.A = fc.algebra
        self.F = self.A.field
        self.d = fc.degree
        self.C = CochainComplex(self.A, self.A.as_bimodule(), cutoff, cache_dir)
        self.Cd = CochainComplex(self.A, fc.cocycle.module, cutoff, cache_dir)
        self._dual: dict = {}
        self._delta: dict = {}

    # -- classes

    def coords(self, x: Cochain) -> tuple:
        if not x.terms:
            C = self.Cd if x.module.tag == "dual" else self.C
            return tuple([0] * C.homology(x.degree).dim)
        C = self.Cd if x.module.tag == "dual" else self.C
        return C.coords(x)

    def rep(self, n: int, coords) -> Cochain:
        return self.C.lift(n, coords)

    def dim(self, n: int) -> int:
        return self.C.homology(n).dim

    # -- duality

    def act_m(self, a: Cochain) -> Cochain:
        return tensor_action(a, self.fc.cocycle)

    def duality_matrix(self, n: int) -> SparseMatrix:
        """Matrix of a -> a.[m] from HH(A;A)_n to HH(A;A^v)_{n+d}."""
        if n not in self._dual:
            cols = [self.Cd.homology(n + self.d).coords(self.Cd.vector(self.act_m(r))) if not self.act_m(r).is_zero()
                    else (0,) * self.Cd.homology(n + self.d).dim for r in self.C.reps(n)]
            rows = self.Cd.homology(n + self.d).dim
            M = SparseMatrix.from_columns(self.F, rows, [{i: c for i, c in enumerate(col) if c} for col in cols])
            self._dual[n] = M
        return self._dual[n]

    def duality_invertible(self, n: int) -> bool:
        M = self.duality_matrix(n)
        return M.rows == M.cols and rank(self.F, M) == M.cols

    def require_duality(self, n: int) -> None:
        if not self.duality_invertible(n):
            M = self.duality_matrix(n)
            raise TheoremViolation(
                f"a -> a.[m] is not invertible in lower degree {n} ({M.cols} -> {M.rows}, rank {rank(self.F, M)})",
                n,
            )

    def pull_back(self, n: int, target: Cochain) -> tuple:
        """The class a in degree n with a.[m] = [target]."""
        self.require_duality(n)
        y = self.coords(target)
        x = solve(self.F, self.duality_matrix(n), {i: c for i, c in enumerate(y) if c})
        if x is None:
            raise TheoremViolation(f"pull-back through duality failed in degree {n}", target)
        return tuple(x.get(i, 0) for i in range(self.dim(n)))

    # -- Delta

    def delta(self, a: Cochain) -> tuple:
        """Coordinates of Delta[a] in degree |a| + 1: (Delta a).m = B^v(a.m)."""
        return self.pull_back(a.degree + 1, connes_B_dual(self.act_m(a)))

    def delta_rep(self, a: Cochain) -> Cochain:
        return self.rep(a.degree + 1, self.delta(a))

    def delta_matrix(self, n: int) -> SparseMatrix:
        if n not in self._delta:
            cols = [self.delta(r) for r in self.C.reps(n)]
            self._delta[n] = SparseMatrix.from_columns(
                self.F, self.dim(n + 1), [{i: c for i, c in enumerate(col) if c} for col in cols]
            )
        return self._delta[n]

    def delta_one(self) -> tuple:
        return self.delta(Cochain(self.C.M, 0, {((), self.A.unit): 1}))

    def delta_squared_zero(self, n: int) -> bool:
        M1, M2 = self.delta_matrix(n), self.delta_matrix(n + 1)
        return M2.compose(self.F, M1).is_zero()

    # -- identities

    def _eq(self, x: Cochain, y: Cochain, n: int) -> bool:
        if x.terms and x.degree != n or y.terms and y.degree != n:
            raise ValueError("degree bookkeeping error")
        return self.coords(Cochain(x.module, n, dict((x - y).terms))) == (0,) * self.C.homology(n).dim

    def module_map_check(self, a: Cochain, b: Cochain) -> RelationReport:
        """(a u b).m = a.(b.m) on homology."""
        lhs = self.act_m(cup(a, b))
        rhs = tensor_action(a, self.act_m(b))
        n = a.degree + b.degree + self.d
        diff = lhs - rhs if (lhs.terms or rhs.terms) else lhs
        ok = not diff.terms or self.Cd.is_boundary(Cochain(diff.module, n, dict(diff.terms)))
        return RelationReport("duality-module-map", (a.degree, b.degree), ok)

    def bv_relation(self, a: Cochain, b: Cochain) -> RelationReport:
        """{a,b} = (-1)^{|a|}(D(ab) - (Da)b - (-1)^{|a|} a(Db)), and the 7-term form."""
        p, q = a.degree, b.degree
        n = p + q + 1
        lhs = gerstenhaber_bracket(a, b)
        Dab = self.delta_rep(cup(a, b))
        Da_b = cup(self.delta_rep(a), b)
        a_Db = cup(a, self.delta_rep(b))
        D1 = self.rep(1, self.delta_one())
        three = _lin(self.C.M, n, [(sign(p), Dab), (-sign(p), Da_b), (-1, a_Db)])
        # (-1)^{|a|} [Delta(ab) - (-1)^{|a|} a Delta b - (Delta a) b + (-1)^{|a|+|b|} a b Delta(1)]
        abD1 = cup(cup(a, b), D1)
        seven = _lin(self.C.M, n, [(sign(p), Dab), (-1, a_Db), (-sign(p), Da_b), (sign(q), abD1)])
        c_l = self.coords(_at(lhs, n))
        ok3 = c_l == self.coords(three)
        ok7 = c_l == self.coords(seven)
        return RelationReport(
            "bv-relation",
            (p, q),
            ok7 and (ok3 or not self.fc.b_dual_exact),
            {"three_term": ok3, "seven_term": ok7, "bracket": c_l},
        )

    def lemma_cohomology(self, xi: Cochain, eta: Cochain, m: Cochain) -> RelationReport:
        """{xi,eta}.m = (-1)^{|xi|} B^v[(xi u eta).m] - xi.B^v(eta.m)
        + (-1)^{(|eta|+1)(|xi|+1)} eta.B^v(xi.m) + (-1)^{|eta|} (xi u eta).B^v(m)."""
        p, q = xi.degree, eta.degree
        Bv, act = connes_B_dual, tensor_action
        n = p + q + 1 + m.degree
        fe = cup(xi, eta)
        lhs = act(gerstenhaber_bracket(xi, eta), m)
        rhs = _lin(
            m.module,
            n,
            [
                (sign(p), Bv(act(fe, m))),
                (-1, act(xi, Bv(act(eta, m)))),
                (sign((q + 1) * (p + 1)), act(eta, Bv(act(xi, m)))),
                (sign(q), act(fe, Bv(m))),
            ],
        )
        diff = _lin(m.module, n, [(1, _at(lhs, n)), (-1, rhs)])
        ok = diff.is_zero() or self.Cd.is_boundary(diff)
        return RelationReport("lemma-cohomology", (p, q, m.degree), ok)


def lemma_homology(K: ChainComplex, xi: Cochain, eta: Cochain, c: Chain) -> RelationReport:
    """{xi,eta}.c = (-1)^{|xi|} B[(xi u eta).c] - xi.B(eta.c)
    + (-1)^{(|eta|+1)(|xi|+1)} eta.B(xi.c) + (-1)^{|eta|} (xi u eta).B(c), with x.c = i_x(c)."""
    p, q = xi.degree, eta.degree
    n = c.degree + p + q + 1
    fe = cup(xi, eta)
    B = connes_B
    lhs = iota(gerstenhaber_bracket(xi, eta), c)
    terms = [
        (sign(p), B(iota(fe, c))),
        (-1, iota(xi, B(iota(eta, c)))),
        (sign((q + 1) * (p + 1)), iota(eta, B(iota(xi, c)))),
        (sign(q), iota(fe, B(c))),
    ]
    out: dict = {}
    F = K.F
    for s, x in [(1, lhs)] + [(-s, x) for s, x in terms]:
        for k, v in x.terms.items():
            out[k] = F.norm(out.get(k, 0) + s * v)
    diff = Chain(K.A, n, {k: v for k, v in out.items() if v})
    ok = diff.is_zero() or K.is_boundary(diff)
    return RelationReport("lemma-homology", (p, q, c.degree), ok)


def _at(x: Cochain, n: int) -> Cochain:
    return Cochain(x.module, n, dict(x.terms))


def _lin(M, n: int, pairs) -> Cochain:
    F = M.algebra.field
    out: dict = {}
    for s, x in pairs:
        for k, v in x.terms.items():
            out[k] = F.norm(out.get(k, 0) + s * v)
    return Cochain(M, n, {k: v for k, v in out.items() if v})
