"""Cyclic theories of a mixed complex (M, d, B) via the u-bicomplex.

For a mixed complex with d of degree -1 and B of degree +1 (lower degrees)
the differential torsion product Tor^{H_*(S^1)}(M, F) is computed by

    T_n = sum_{j >= 0} M_{n-2j} u^j,     D(m u^j) = (dm) u^j + (Bm) u^{j-1},

with u of lower degree 2.  For M = C_*(A;A) this is HC_*(A); for
M = C*(A;A^v) it is HC*_-(A).  Truncating at j <= U gives a subcomplex
T^U; when M is unbounded below in degree, H_n(T^U) is reported together
with a flag saying whether it agrees with H_n(T^{U+1}).

The short exact sequence 0 -> M -> T^U -> T^{U-1}[2] -> 0 (inclusion of the
u^0 part, then division by u) gives Connes' long exact sequence

    ... -> HH_n --I--> HC_n --S--> HC_{n-2} --dd--> HH_{n-1} -> ...

exactly, for every U.  The connecting map is dd(sum m_j u^j) = [B m_0].
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import sign
from .bv import BVStructure, TheoremViolation
from .hochschild import (
    Chain,
    ChainComplex,
    Cochain,
    CochainComplex,
    connes_dual_matrix,
    cup,
    iota,
    tensor_action,
)
from .linalg import SparseMatrix, Subquotient, homology_at, rank, solve


class UnstableTruncation(ArithmeticError):
    def __init__(self, degree, dims):
        super().__init__(f"no stable truncation in degree {degree} (dims by U: {dims})")
        self.degree, self.dims = degree, dims


class MixedComplex:
    """Adapter exposing (basis, d, B) of a Hochschild complex.

    ``kind`` is ``"chains"`` (C_*(A;A), b and B) or ``"dual"`` (C*(A;A^v),
    D and B^v).  ``top`` is the largest degree with a nonzero slice, or None
    when unbounded above.
    """

    def __init__(self, complex_, kind: str):
        self.K = complex_
        self.kind = kind
        self.A = complex_.A
        self.F = complex_.F
        self._B: dict = {}
        A = self.A
        s = [A.degrees[i] + 1 for i in A.reduced]
        up = all(x >= 1 for x in s)  # word degrees >= 0
        down = all(x <= -1 for x in s)  # word degrees <= 0
        lo, hi = min(A.degrees), max(A.degrees)
        self.top = self.bottom = None
        if kind == "chains":
            if up:
                self.bottom = lo
            if down:
                self.top = hi
        else:
            if up:
                self.top = -lo
            if down:
                self.bottom = -hi

    @classmethod
    def chains(cls, A, cutoff=None, cache_dir=None) -> "MixedComplex":
        return cls(ChainComplex(A, cutoff, cache_dir), "chains")

    @classmethod
    def dual(cls, A, cutoff=None, cache_dir=None, complex_: CochainComplex | None = None) -> "MixedComplex":
        from .algebra import dual_bimodule

        return cls(complex_ or CochainComplex(A, dual_bimodule(A), cutoff, cache_dir), "dual")

    def dim(self, n: int) -> int:
        if self.bottom is not None and n < self.bottom:
            return 0
        if self.top is not None and n > self.top:
            return 0
        return len(self.K.basis(n))

    def d(self, n: int) -> SparseMatrix:
        return self.K.differential(n)

    def B(self, n: int) -> SparseMatrix:
        if n not in self._B:
            if self.kind == "chains":
                self._B[n] = self.K.connes_matrix(n)
            else:
                self._B[n] = connes_dual_matrix(self.K, n)
        return self._B[n]

    def homology(self, n: int) -> Subquotient:
        return self.K.homology(n)

    def element(self, n: int, v: dict):
        return self.K.element(n, v)

    def max_useful_U(self, n: int) -> int | None:
        """Past this U the blocks M_{n-2j} are all zero (bounded below case)."""
        if self.bottom is None:
            return None
        return max(0, (n - self.bottom) // 2)

    def min_useful_U(self, n: int) -> int:
        """Below this U every block of T_n is zero (bounded above case)."""
        if self.top is None:
            return 0
        return max(0, -((self.top - n) // 2))


class TorComplex:
    """The truncated total complex T^U; ``window`` selects j in [lo, U].

    ``lo = 0`` for the cyclic/negative variants.  The periodic variant uses
    ``lo = -U``: the Laurent window is a subcomplex of sum_{j >= -U}.
    """

    def __init__(self, mixed: MixedComplex, U: int, lo: int = 0):
        self.M = mixed
        self.U = U
        self.lo = lo
        self.F = mixed.F
        self._layout: dict = {}
        self._diff: dict = {}
        self._hom: dict = {}

    def layout(self, n: int) -> list:
        """[(j, offset, size)] for the blocks of T_n."""
        if n not in self._layout:
            out, off = [], 0
            for j in range(self.lo, self.U + 1):
                size = self.M.dim(n - 2 * j)
                if size:
                    out.append((j, off, size))
                    off += size
            self._layout[n] = out
        return self._layout[n]

    def dim(self, n: int) -> int:
        return sum(s for _, _, s in self.layout(n))

    def differential(self, n: int) -> SparseMatrix:
        if n not in self._diff:
            src, tgt = self.layout(n), {j: (off, s) for j, off, s in self.layout(n - 1)}
            cols = []
            for j, off, size in src:
                m_deg = n - 2 * j
                dm = self.M.d(m_deg) if j in tgt else None
                bm = self.M.B(m_deg) if (j - 1) in tgt else None
                for k in range(size):
                    col: dict = {}
                    if dm is not None:
                        o = tgt[j][0]
                        for r, v in dm.columns[k].items():
                            col[o + r] = v
                    if bm is not None:
                        o = tgt[j - 1][0]
                        for r, v in bm.columns[k].items():
                            col[o + r] = self.F.norm(col.get(o + r, 0) + v)
                    cols.append({r: v for r, v in col.items() if v})
            self._diff[n] = SparseMatrix(self.dim(n - 1), self.dim(n), tuple(cols))
        return self._diff[n]

    def homology(self, n: int) -> Subquotient:
        if n not in self._hom:
            self._hom[n] = homology_at(self.F, self.differential(n + 1), self.differential(n))
        return self._hom[n]

    def block(self, n: int, v: dict, j: int) -> dict:
        for jj, off, size in self.layout(n):
            if jj == j:
                return {i - off: c for i, c in v.items() if off <= i < off + size}
        return {}

    def embed(self, n: int, blocks: dict) -> dict:
        """Assemble a vector from ``{j: vector in M_{n-2j}}``."""
        out: dict = {}
        for j, off, size in self.layout(n):
            for i, c in blocks.get(j, {}).items():
                out[off + i] = c
        return out


@dataclass
class CyclicDegree:
    degree: int
    U: int
    dim: int
    stable: bool
    dims_by_U: dict = field(default_factory=dict)


@dataclass
class CyclicGroups:
    mixed: MixedComplex
    variant: str
    degrees: list
    complexes: dict  # U -> TorComplex
    by_degree: dict  # n -> CyclicDegree

    def tor(self, n: int) -> TorComplex:
        return self.complexes[self.by_degree[n].U]

    def all_stable(self) -> bool:
        return all(c.stable for c in self.by_degree.values())

    def dims(self) -> list:
        return [self.by_degree[n].dim for n in self.degrees]


def assemble_bicomplex(mixed: MixedComplex, variant: str, n: int, U: int):
    """(d_in, d_out) of the total complex at degree n."""
    T = _tor(mixed, variant, U)
    d_in, d_out = T.differential(n + 1), T.differential(n)
    comp = d_out.compose(mixed.F, d_in)
    if not comp.is_zero():
        raise TheoremViolation(f"total differential does not square to zero at degree {n}", comp.entries)
    return d_in, d_out


def _tor(mixed, variant, U):
    if variant in ("cyclic", "negative"):
        return TorComplex(mixed, U)
    if variant == "periodic":
        return TorComplex(mixed, U, lo=-U)
    raise ValueError(f"unknown variant {variant!r}")


def compute_cyclic(
    mixed: MixedComplex,
    variant: str,
    degrees,
    U: int | None = None,
    U_max: int = 4,
    stop_on_unstable: bool = False,
    strict: bool = False,
) -> CyclicGroups:
    """Groups of the chosen variant on a degree window.

    With ``U`` given, every degree is computed at U and U+1.  Otherwise each
    degree scans U upward from the first truncation that reaches its top
    block, stopping at the first U whose dimension agrees with U+1 (or at
    ``U_max``).  Degrees are processed in the order given; with
    ``stop_on_unstable`` the scan ends after the first unstable degree;
    ``strict`` raises :class:`UnstableTruncation` there instead.
    """
    complexes: dict = {}

    def T(u):
        if u not in complexes:
            complexes[u] = _tor(mixed, variant, u)
        return complexes[u]

    by_degree = {}
    for n in degrees:
        exact_at = mixed.max_useful_U(n)
        start = U if U is not None else mixed.min_useful_U(n)
        stop = U if U is not None else max(start, U_max)
        if U is None and exact_at is not None:
            # bounded below: T^U_n is the whole of T_n from this U on
            start = stop = max(start, exact_at)
        dims = {}
        chosen = None
        for u in range(start, stop + 1):
            for uu in (u, u + 1):
                if uu not in dims:
                    _check_square(T(uu), n)
                    dims[uu] = T(uu).homology(n).dim
            if dims[u] == dims[u + 1]:
                chosen = u
                break
        if chosen is None:
            chosen = stop
        stable = dims[chosen] == dims[chosen + 1]
        if variant != "periodic" and exact_at is not None and chosen >= exact_at:
            stable = True
        by_degree[n] = CyclicDegree(n, chosen, dims[chosen], stable, dict(sorted(dims.items())))
        if strict and not stable:
            raise UnstableTruncation(n, by_degree[n].dims_by_U)
        if stop_on_unstable and not stable:
            break
    return CyclicGroups(mixed, variant, list(by_degree), complexes, by_degree)


def _check_square(T: TorComplex, n: int) -> None:
    comp = T.differential(n).compose(T.F, T.differential(n + 1))
    if not comp.is_zero():
        raise TheoremViolation(f"total differential does not square to zero at degree {n}", comp.entries)


# ---------------------------------------------------------------- Connes sequence


@dataclass
class ExactSequenceJoint:
    degree: int
    U: int
    I: SparseMatrix  # HH_n -> HC_n
    S: SparseMatrix  # HC_n -> HC_{n-2} (truncation U-1)
    boundary: SparseMatrix  # HC_{n-2} -> HH_{n-1}
    exact: dict


def _class_matrix(F, sq_target: Subquotient, vectors) -> SparseMatrix:
    cols = []
    for v in vectors:
        c = sq_target.coords(v) if v else (0,) * sq_target.dim
        cols.append({i: x for i, x in enumerate(c) if x})
    return SparseMatrix.from_columns(F, sq_target.dim, cols)


def include_u0(T: TorComplex, n: int, v: dict) -> dict:
    return T.embed(n, {0: v})


def divide_by_u(T: TorComplex, T1: TorComplex, n: int, v: dict) -> dict:
    """S: T^U_n -> T^{U-1}_{n-2}, drops the u^0 block and shifts."""
    blocks = {j - 1: T.block(n, v, j) for j, _, _ in T.layout(n) if j >= 1}
    return T1.embed(n - 2, blocks)


def connecting(T: TorComplex, mixed: MixedComplex, n: int, v: dict) -> dict:
    """dd: class in T^U_n (read as T^{(U+1)-1}_n) -> [B m_0] in M_{n+1}."""
    m0 = T.block(n, v, 0)
    return mixed.B(n).apply(mixed.F, m0) if m0 else {}


def connes_exact_maps(mixed: MixedComplex, n: int, U: int) -> ExactSequenceJoint:
    """I_n, S_n, dd_{n-2} around HC_n(T^U) and exactness ranks at each joint.

    The sequence used is HH_n -> H_n(T^U) -> H_{n-2}(T^{U-1}) -> HH_{n-1}
    -> H_{n-1}(T^U); U >= 1.
    """
    if U < 1:
        raise ValueError("the exact sequence needs U >= 1")
    F = mixed.F
    T, T1 = TorComplex(mixed, U), TorComplex(mixed, U - 1)
    H = mixed.homology
    hh_n, hh_n1 = H(n), H(n - 1)
    hc_n, hc_n2, hc_n1 = T.homology(n), T1.homology(n - 2), T.homology(n - 1)
    I_n = _class_matrix(F, hc_n, [include_u0(T, n, r) for r in hh_n.homology_reps])
    S_n = _class_matrix(F, hc_n2, [divide_by_u(T, T1, n, r) for r in hc_n.homology_reps])
    dd = _class_matrix(F, hh_n1, [connecting(T1, mixed, n - 2, r) for r in hc_n2.homology_reps])
    I_n1 = _class_matrix(F, hc_n1, [include_u0(T, n - 1, r) for r in hh_n1.homology_reps])
    rI, rS, rd, rI1 = rank(F, I_n), rank(F, S_n), rank(F, dd), rank(F, I_n1)
    exact = {
        "at_HC_n": rI + rS == hc_n.dim,
        "at_HC_n-2": rS + rd == hc_n2.dim,
        "at_HH_n-1": rd + rI1 == hh_n1.dim,
        "S.I=0": S_n.compose(F, I_n).is_zero() if I_n.cols else True,
        "dd.S=0": dd.compose(F, S_n).is_zero() if S_n.cols else True,
        "I.dd=0": I_n1.compose(F, dd).is_zero() if dd.cols else True,
    }
    return ExactSequenceJoint(n, U, I_n, S_n, dd, exact)


# ---------------------------------------------------------------- bracket


class HomologyProduct:
    """Product on H(M) transported from the cup product through a duality.

    For ``kind == "dual"``: alpha = a.m, beta = b.m, alpha*beta = (a u b).m
    (a BVStructure supplies m and the pull-back).  For ``kind == "chains"``:
    alpha = i_a(c), beta = i_b(c), alpha*beta = i_{a u b}(c) for a supplied
    cycle c.
    """

    def __init__(self, mixed: MixedComplex, bv: BVStructure | None = None, cycle: Chain | None = None):
        self.mixed = mixed
        self.F = mixed.F
        if mixed.kind == "dual":
            if bv is None:
                raise ValueError("dual mixed complex needs a BV structure")
            self.bv = bv
            self.shift = bv.d
        else:
            if cycle is None:
                raise ValueError("chain mixed complex needs a fundamental cycle")
            self.cycle = cycle
            self.shift = cycle.degree
            self.C = CochainComplex(mixed.A, None, mixed.K.cutoff)
            self._dual: dict = {}

    def _act(self, a: Cochain):
        if self.mixed.kind == "dual":
            return self.bv.act_m(a)
        return iota(a, self.cycle)

    def duality_matrix(self, n: int) -> SparseMatrix:
        if self.mixed.kind == "dual":
            return self.bv.duality_matrix(n)
        if n not in self._dual:
            K = self.mixed.K
            sq = K.homology(n + self.shift)
            self._dual[n] = _class_matrix(self.F, sq, [K.vector(self._act(r)) for r in self.C.reps(n)])
        return self._dual[n]

    def hypothesis_holds(self, degrees) -> bool:
        for n in degrees:
            M = self.duality_matrix(n)
            if M.rows != M.cols or rank(self.F, M) != M.cols:
                return False
        return True

    def pull_back(self, n: int, v: dict) -> Cochain:
        """The cochain a (representative) with [a . m] = [v] in M_{n}."""
        C = self.bv.C if self.mixed.kind == "dual" else self.C
        k = n - self.shift
        M = self.duality_matrix(k)
        if M.rows != M.cols or rank(self.F, M) != M.cols:
            raise TheoremViolation(f"duality is not invertible in degree {k}")
        y = self.mixed.homology(n).coords(v) if v else (0,) * M.rows
        x = solve(self.F, M, {i: c for i, c in enumerate(y) if c})
        return C.lift(k, [x.get(i, 0) for i in range(M.cols)])

    def product(self, n1: int, v1: dict, n2: int, v2: dict) -> dict:
        a, b = self.pull_back(n1, v1), self.pull_back(n2, v2)
        out = self._act(cup(a, b))
        return self.mixed.K.vector(out) if out.terms else {}


def cyclic_lie_bracket(groups: CyclicGroups, prod: HomologyProduct, n1: int, x: dict, n2: int, y: dict) -> tuple:
    """{x, y} = (-1)^{|x|+1-d} I(dd x . dd y), as (degree, coordinates)."""
    mixed = groups.mixed
    d = prod.shift
    Tx, Ty = groups.tor(n1), groups.tor(n2)
    ax = connecting(Tx, mixed, n1, x)
    ay = connecting(Ty, mixed, n2, y)
    n = n1 + n2 + 2 - d
    if n not in groups.by_degree:
        raise KeyError(f"bracket lands in degree {n}, outside the computed window")
    T = groups.tor(n)
    p = prod.product(n1 + 1, ax, n2 + 1, ay)
    v = include_u0(T, n, {i: c for i, c in p.items()})
    v = {i: groups.mixed.F.norm(sign(n1 + 1 - d) * c) for i, c in v.items()}
    coords = T.homology(n).coords(v) if v else (0,) * T.homology(n).dim
    return n, coords


def bracket_of_classes(groups: CyclicGroups, prod: HomologyProduct, n1: int, c1, n2: int, c2):
    """Bracket on coordinate tuples against the representative bases."""
    x = groups.tor(n1).homology(n1).lift(c1)
    y = groups.tor(n2).homology(n2).lift(c2)
    return cyclic_lie_bracket(groups, prod, n1, x, n2, y)
