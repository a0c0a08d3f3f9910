"""Verification batteries over the fixture corpus.

Each suite yields :class:`Check` records; a failed check carries a witness
string in bar notation.  Arithmetic errors raised while building homology
(``d_out * d_in != 0``, failed pull-backs) are caught and turned into
failed checks, so a broken sign convention shows up as a datum rather than
a traceback.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property

from . import fixtures
from .algebra import dual_bimodule, sign
from . import hochschild
from .bv import BVStructure, FundamentalClassError, TheoremViolation, fundamental_cocycle, lemma_homology
from .cyclic import (
    HomologyProduct,
    MixedComplex,
    TorComplex,
    UnstableTruncation,
    bracket_of_classes,
    compute_cyclic,
    connes_exact_maps,
)
from .hochschild import (
    Chain,
    ChainComplex,
    Cochain,
    CochainComplex,
    SliceTooLarge,
    connes_dual_matrix,
    cup,
    format_chain,
    format_cochain,
    gerstenhaber_bracket,
)
from .linalg import CompositeNotZero, NotACycle, SparseMatrix

SUITES = ("differentials", "gerstenhaber", "bv", "calculus", "cyclic")

# Fixtures whose slices outgrow a laptop before the default window ends.
WINDOW_CAP = {"two_cycle_q": 4}
CYCLIC_WINDOW_CAP = {"two_cycle_q": 3}
# Connes-sequence joints whose total complex is wider than this are skipped
# (and counted in the report); deep dual slices of ungraded algebras grow
# like dim(A) * (dim(A) - 1)^k.
JOINT_BUDGET = 12000


@dataclass
class Check:
    suite: str
    fixture: str
    name: str
    ok: bool
    detail: str = ""
    witness: str | None = None
    info: bool = False  # reported, but not an assertion

    @property
    def failed(self) -> bool:
        return not self.ok and not self.info

    def line(self) -> str:
        tag = "PASS" if self.ok else ("WARN" if self.info else "FAIL")
        s = f"{tag} {self.suite}/{self.fixture}/{self.name}"
        if self.detail:
            s += f" ({self.detail})"
        if self.witness:
            s += f"\n    witness: {self.witness}"
        return s


@dataclass
class VerifyConfig:
    suites: tuple = SUITES
    fixtures: tuple = fixtures.CORPUS
    trials: int = 100
    seed: int = 0
    radius: int = 4  # degree window |n| <= radius for bracket/BV identities
    diff_radius_ungraded: int = 6
    diff_radius_graded: int = 10
    cyclic_radius: int = 4
    hc_field_max: int = 8
    U_max: int = 4
    cache_dir: str | None = None
    cutoff: int | None = None


class FixtureContext:
    """Lazily built complexes for one fixture, shared across suites."""

    def __init__(self, name: str, cache_dir=None, cutoff: int | None = None):
        self.name = name
        self.A, self.fs = fixtures.load(name)
        self.F = self.A.field
        self.cache_dir = cache_dir
        self.cutoff = cutoff

    @cached_property
    def C(self) -> CochainComplex:
        if self.fs is not None:
            return self.bv.C
        return CochainComplex(self.A, None, self.cutoff, self.cache_dir)

    @cached_property
    def Cd(self) -> CochainComplex:
        if self.fs is not None:
            return self.bv.Cd  # shares the module object of the fundamental cocycle
        return CochainComplex(self.A, dual_bimodule(self.A), self.cutoff, self.cache_dir)

    @cached_property
    def K(self) -> ChainComplex:
        return ChainComplex(self.A, self.cutoff, self.cache_dir)

    @cached_property
    def bv(self) -> BVStructure | None:
        if self.fs is None:
            return None
        return BVStructure(fundamental_cocycle(self.fs), self.cutoff, self.cache_dir)

    @property
    def graded(self) -> bool:
        return not self.A.is_ungraded

    def cap(self, r: int) -> int:
        return min(r, WINDOW_CAP.get(self.name, r))

    def window(self, complex_, radius: int) -> list:
        """Degrees |n| <= radius whose slice is nonempty."""
        r = self.cap(radius)
        return [n for n in range(-r, r + 1) if complex_.basis(n)]


# ---------------------------------------------------------------- helpers


def _guard(suite, fixture, name, fn) -> Check:
    try:
        ok, detail, witness = fn()
    except CompositeNotZero as exc:
        return Check(suite, fixture, name, False, "differential does not square to zero", str(exc))
    except (TheoremViolation, FundamentalClassError, NotACycle, UnstableTruncation) as exc:
        w = getattr(exc, "witness", None)
        return Check(suite, fixture, name, False, str(exc), _show(w) if w is not None else None)
    return Check(suite, fixture, name, ok, detail, witness)


def _show(x) -> str:
    if isinstance(x, Cochain):
        return format_cochain(x)
    if isinstance(x, Chain):
        return format_chain(x)
    return str(x)


def _first_nonzero_column(M: SparseMatrix):
    for j, col in enumerate(M.columns):
        if col:
            return j, col
    return None


def _composite_zero(F, first: SparseMatrix, second: SparseMatrix, extra=None):
    """second @ first (+ extra) == 0; witness is the first offending column."""
    M = second.compose(F, first)
    if extra is not None:
        M = SparseMatrix(M.rows, M.cols, tuple(_vadd(F, a, b) for a, b in zip(M.columns, extra.columns)))
    return _first_nonzero_column(M)


def _vadd(F, a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = F.norm(out.get(k, 0) + v)
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _element(complex_, n: int, v: dict):
    return complex_.element(n, v)


def _zero_class(x, complex_) -> bool:
    """x is zero in homology (x must be a cycle)."""
    if not x.terms:
        return True
    return complex_.is_boundary(x)


def _at(x: Cochain, n: int) -> Cochain:
    return Cochain(x.module, n, dict(x.terms))


def _comb(M, n: int, pairs) -> Cochain:
    F = M.algebra.field
    out: dict = {}
    for s, x in pairs:
        for k, v in x.terms.items():
            w = F.norm(out.get(k, 0) + s * v)
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return Cochain(M, n, out)


# ---------------------------------------------------------------- differentials


def suite_differentials(ctx: FixtureContext, cfg: VerifyConfig):
    """D^2, d^2, B^2, dB + Bd, (B^v)^2 and D B^v + B^v D on every slice."""
    F = ctx.F
    r = cfg.diff_radius_graded if ctx.graded else cfg.diff_radius_ungraded
    r = ctx.cap(r)
    # short words first, so a failure reports the smallest witness
    degs = sorted(range(-r, r + 1), key=lambda n: (abs(n), n))
    span = f"degrees {-r}..{r}"

    def run_cochains(C, label):
        def fn():
            for n in degs:
                if not C.basis(n):
                    continue
                hit = _composite_zero(F, C.differential(n), C.differential(n - 1))
                if hit:
                    j, col = hit
                    src = C.element(n, {j: 1})
                    return False, f"{label}: D^2 != 0 at degree {n}", f"D^2({src}) = {C.element(n - 2, col)}"
            return True, span, None

        return fn

    def run_chains():
        K = ctx.K
        for n in degs:
            if not K.basis(n):
                continue
            hit = _composite_zero(F, K.differential(n), K.differential(n - 1))
            if hit:
                j, col = hit
                return False, f"d^2 != 0 at degree {n}", f"d^2({K.element(n, {j: 1})}) = {K.element(n - 2, col)}"
            Bn = K.connes_matrix(n)
            hit = _composite_zero(F, Bn, K.connes_matrix(n + 1))
            if hit:
                j, col = hit
                return False, f"B^2 != 0 at degree {n}", f"B^2({K.element(n, {j: 1})}) = {K.element(n + 2, col)}"
            # d B + B d on degree n
            dB = K.differential(n + 1).compose(F, Bn)
            Bd = K.connes_matrix(n - 1).compose(F, K.differential(n))
            hit = _first_nonzero_column(SparseMatrix(dB.rows, dB.cols, tuple(_vadd(F, a, b) for a, b in zip(dB.columns, Bd.columns))))
            if hit:
                j, col = hit
                return False, f"dB + Bd != 0 at degree {n}", f"(dB+Bd)({K.element(n, {j: 1})}) = {K.element(n, col)}"
        return True, span, None

    def run_dual():
        Cd = ctx.Cd
        for n in degs:
            if not Cd.basis(n):
                continue
            Bn = connes_dual_matrix(Cd, n)
            hit = _composite_zero(F, Bn, connes_dual_matrix(Cd, n + 1))
            if hit:
                j, col = hit
                return False, f"(B^v)^2 != 0 at degree {n}", f"(B^v)^2({Cd.element(n, {j: 1})}) = {Cd.element(n + 2, col)}"
            DB = Cd.differential(n + 1).compose(F, Bn)
            BD = connes_dual_matrix(Cd, n - 1).compose(F, Cd.differential(n))
            hit = _first_nonzero_column(SparseMatrix(DB.rows, DB.cols, tuple(_vadd(F, a, b) for a, b in zip(DB.columns, BD.columns))))
            if hit:
                j, col = hit
                return False, f"D B^v + B^v D != 0 at degree {n}", f"({Cd.element(n, {j: 1})}) -> {Cd.element(n, col)}"
        return True, span, None

    yield _guard("differentials", ctx.name, "D^2=0 (A)", run_cochains(ctx.C, "C*(A;A)"))
    yield _guard("differentials", ctx.name, "D^2=0 (A^v)", run_cochains(ctx.Cd, "C*(A;A^v)"))
    yield _guard("differentials", ctx.name, "d^2=B^2=dB+Bd=0", run_chains)
    yield _guard("differentials", ctx.name, "(B^v)^2=DB^v+B^vD=0", run_dual)


# ---------------------------------------------------------------- Gerstenhaber


def _generators(C, degrees) -> list:
    return [(n, k, C.rep(n, k)) for n in degrees for k in range(C.homology(n).dim)]


def suite_gerstenhaber(ctx: FixtureContext, cfg: VerifyConfig):
    """Graded commutativity, antisymmetry, Jacobi and Poisson on HH*(A;A)."""
    C = ctx.C
    W = set(ctx.window(C, cfg.radius))
    gens = _generators(C, sorted(W))
    br = gerstenhaber_bracket

    def lands(*degs):
        return all(d in W for d in degs)

    def commutativity():
        n = 0
        for (p, i, a), (q, j, b) in itertools.product(gens, repeat=2):
            if not lands(p + q):
                continue
            n += 1
            diff = _comb(C.M, p + q, [(1, cup(a, b)), (-sign(p * q), cup(b, a))])
            if not _zero_class(diff, C):
                return False, "", f"a={a}; b={b}; ab - (-1)^(|a||b|) ba = {diff}"
        return True, f"{n} pairs", None

    def antisymmetry():
        n = 0
        for (p, i, a), (q, j, b) in itertools.product(gens, repeat=2):
            if not lands(p + q + 1):
                continue
            n += 1
            diff = _comb(C.M, p + q + 1, [(1, br(a, b)), (sign((p + 1) * (q + 1)), br(b, a))])
            if not _zero_class(diff, C):
                return False, "", f"a={a}; b={b}; {{a,b}} + (-1)^((|a|+1)(|b|+1)) {{b,a}} = {diff}"
        return True, f"{n} pairs", None

    def jacobi():
        n = 0
        for (p, _, a), (q, _, b), (r, _, c) in itertools.product(gens, repeat=3):
            if not lands(q + r + 1, p + q + 1, p + r + 1, p + q + r + 2):
                continue
            n += 1
            t = p + q + r + 2
            lhs = _at(br(a, br(b, c)), t)
            rhs = _comb(C.M, t, [(1, br(br(a, b), c)), (sign((p + 1) * (q + 1)), br(b, br(a, c)))])
            diff = _comb(C.M, t, [(1, lhs), (-1, rhs)])
            if not _zero_class(diff, C):
                return False, "", f"a={a}; b={b}; c={c}; defect = {diff}"
        return True, f"{n} triples", None

    def poisson():
        n = 0
        for (p, _, a), (q, _, b), (r, _, c) in itertools.product(gens, repeat=3):
            if not lands(q + r, p + q + 1, p + r + 1, p + q + r + 1):
                continue
            n += 1
            t = p + q + r + 1
            lhs = _at(br(a, cup(b, c)), t)
            rhs = _comb(C.M, t, [(1, cup(br(a, b), c)), (sign((p + 1) * q), cup(b, br(a, c)))])
            diff = _comb(C.M, t, [(1, lhs), (-1, rhs)])
            if not _zero_class(diff, C):
                return False, "", f"a={a}; b={b}; c={c}; defect = {diff}"
        return True, f"{n} triples", None

    for name, fn in [
        ("cup graded-commutative", commutativity),
        ("bracket antisymmetry", antisymmetry),
        ("Jacobi", jacobi),
        ("Poisson", poisson),
    ]:
        yield _guard("gerstenhaber", ctx.name, name, fn)


# ---------------------------------------------------------------- BV


def suite_bv(ctx: FixtureContext, cfg: VerifyConfig):
    """Duality, Delta^2 = 0, the BV relation (3- and 7-term) and the module-map property."""
    if ctx.fs is None:
        return
    bv = ctx.bv
    C = ctx.C
    W = set(ctx.window(C, cfg.radius))
    Wd = set(n for n in range(min(W) + bv.d, max(W) + bv.d + 2))

    def duality():
        for n in sorted(W):
            if not bv.duality_invertible(n):
                M = bv.duality_matrix(n)
                return False, f"degree {n}", f"a -> a.m is {M.cols} -> {M.rows}, not invertible"
        return True, f"degrees {min(W)}..{max(W)}", None

    def delta_sq():
        for n in sorted(W):
            if n + 2 not in W and n + 1 not in W:
                continue
            if not bv.delta_squared_zero(n):
                return False, f"degree {n}", str(bv.delta_matrix(n + 1).compose(ctx.F, bv.delta_matrix(n)).entries)
        return True, "", None

    gens = _generators(C, sorted(W))

    def relation():
        n3 = n7 = 0
        for (p, _, a), (q, _, b) in itertools.product(gens, repeat=2):
            if not all(x in W for x in (p + q, p + q + 1, p + 1, q + 1)):
                continue
            rep = bv.bv_relation(a, b)
            n3 += rep.detail["three_term"]
            n7 += rep.detail["seven_term"]
            if not rep.holds:
                return False, str(rep.detail), f"a={a}; b={b}"
        return True, f"three-term {n3}, seven-term {n7}", None

    def module_map():
        n = 0
        for (p, _, a), (q, _, b) in itertools.product(gens, repeat=2):
            if p + q not in W:
                continue
            n += 1
            rep = bv.module_map_check(a, b)
            if not rep.holds:
                return False, "", f"a={a}; b={b}"
        return True, f"{n} pairs", None

    yield _guard("bv", ctx.name, "duality invertible", duality)
    yield _guard("bv", ctx.name, "Delta^2=0", delta_sq)
    yield _guard("bv", ctx.name, "BV relation", relation)
    yield _guard("bv", ctx.name, "duality is a module map", module_map)


# ---------------------------------------------------------------- calculus


def random_class(rng: random.Random, complex_, n: int, with_boundary: bool = True):
    """A random cycle in degree n: random coordinates on the homology basis
    plus a random boundary."""
    F = complex_.F
    sq = complex_.homology(n)
    coords = [_rand_scalar(rng, F) for _ in range(sq.dim)]
    v = sq.lift(coords)
    if with_boundary and sq.boundary_basis:
        b = rng.choice(sq.boundary_basis)
        s = _rand_scalar(rng, F)
        v = _vadd(F, v, {k: F.norm(s * c) for k, c in b.items()})
    return complex_.element(n, {k: c for k, c in v.items() if c})


def _rand_scalar(rng, F):
    if F.char:
        return rng.randrange(F.char)
    return rng.randint(-3, 3)


def _nonzero_degrees(complex_, degrees) -> list:
    out = []
    for n in degrees:
        try:
            if complex_.basis(n) and complex_.homology(n).dim:
                out.append(n)
        except SliceTooLarge:
            continue
    return out


def suite_calculus(ctx: FixtureContext, cfg: VerifyConfig):
    """Both calculus lemmas on seeded random homogeneous triples."""
    rng = random.Random(f"{cfg.seed}:{ctx.name}")
    C, K = ctx.C, ctx.K
    r = ctx.cap(cfg.radius)
    cdeg = _nonzero_degrees(C, range(-r, r + 1))
    kdeg = set(_nonzero_degrees(K, range(-r, r + 1)))
    kwin = set(range(-r, r + 1))

    def draw(valid):
        """Rejection-sample a triple of degrees; None if nothing lands."""
        for _ in range(200):
            p, q = rng.choice(cdeg), rng.choice(cdeg)
            third = valid(p, q)
            if third:
                return p, q, rng.choice(third)
        return None

    def hom():
        kd = sorted(kdeg)
        if not kd:
            return True, "no nonzero Hochschild homology in window", None
        done = 0
        for _ in range(cfg.trials):
            t = draw(lambda p, q: [c for c in kd if c + p + q + 1 in kwin])
            if t is None:
                break
            p, q, k = t
            xi, eta, c = random_class(rng, C, p), random_class(rng, C, q), random_class(rng, K, k)
            rep = lemma_homology(K, xi, eta, c)
            done += 1
            if not rep.holds:
                return False, f"degrees {rep.degrees}", f"xi={xi}; eta={eta}; c={c}"
        return done > 0, f"{done} triples", None if done else "no admissible degree triple"

    def coh():
        if ctx.fs is None:
            return True, "no Frobenius form: cohomology lemma not applicable", None
        bv = ctx.bv
        Cd = bv.Cd
        dwin = set(range(-r + bv.d, r + bv.d + 1))
        dd = sorted(_nonzero_degrees(Cd, sorted(dwin)))
        done = 0
        for _ in range(cfg.trials):
            t = draw(lambda p, q: [m for m in dd if m + p + q + 1 in dwin])
            if t is None:
                break
            p, q, k = t
            xi, eta, m = random_class(rng, C, p), random_class(rng, C, q), random_class(rng, Cd, k)
            rep = bv.lemma_cohomology(xi, eta, m)
            done += 1
            if not rep.holds:
                return False, f"degrees {rep.degrees}", f"xi={xi}; eta={eta}; m={m}"
        return done > 0, f"{done} triples", None if done else "no admissible degree triple"

    yield _guard("calculus", ctx.name, "homology lemma", hom)
    yield _guard("calculus", ctx.name, "cohomology lemma", coh)


# ---------------------------------------------------------------- cyclic


def cyclic_degree_order(lo: int, hi: int) -> list:
    """0, 1, -1, 2, -2, ... clipped to [lo, hi]."""
    out = []
    for k in range(0, max(abs(lo), abs(hi)) + 1):
        for n in (k, -k) if k else (0,):
            if lo <= n <= hi:
                out.append(n)
    return out


def joint_size(mixed: MixedComplex, n: int, U: int) -> float:
    """Largest total-complex slice that :func:`connes_exact_maps` eliminates."""
    T = TorComplex(mixed, U)
    try:
        return max(T.dim(k) for k in (n + 1, n, n - 1))
    except SliceTooLarge:
        return float("inf")


def hc_ground_field(ctx: FixtureContext, nmax: int):
    mixed = MixedComplex(ctx.K, "chains")
    g = compute_cyclic(mixed, "cyclic", list(range(0, nmax + 1)))
    return g.dims(), [1 if n % 2 == 0 else 0 for n in range(0, nmax + 1)]


def suite_cyclic(ctx: FixtureContext, cfg: VerifyConfig):
    """HC of the ground field, Connes exactness, stabilization, Lie axioms."""
    name = ctx.name
    r = min(cfg.cyclic_radius, CYCLIC_WINDOW_CAP.get(name, cfg.cyclic_radius))

    if ctx.A.dim == 1:
        def field_dims():
            got, want = hc_ground_field(ctx, cfg.hc_field_max)
            return got == want, f"HC_0..{cfg.hc_field_max} = {got}", None if got == want else f"expected {want}"

        yield _guard("cyclic", name, "HC of the ground field", field_dims)

    def exactness():
        joints = skipped = 0
        for kind, complex_ in (("chains", ctx.K), ("dual", ctx.Cd)):
            mixed = MixedComplex(complex_, kind)
            for n in range(-r, r + 1):
                for U in (1, 2):
                    size = joint_size(mixed, n, U)
                    if size == 0:
                        continue
                    if size > JOINT_BUDGET:
                        skipped += 1
                        continue
                    e = connes_exact_maps(mixed, n, U)
                    joints += 1
                    bad = [k for k, v in e.exact.items() if not v]
                    if bad:
                        return False, f"{kind} degree {n} U={U}", f"fails at {bad}"
        return joints > 0, f"{joints} joints, {skipped} over the size budget", None

    yield _guard("cyclic", name, "Connes sequence exact", exactness)

    mixed = MixedComplex(ctx.Cd, "dual")
    state = {}

    def stabilization():
        g = compute_cyclic(mixed, "negative", cyclic_degree_order(-r, r), U_max=cfg.U_max, stop_on_unstable=True)
        state["groups"] = g
        for n, c in g.by_degree.items():
            if not c.stable:
                return False, f"degree {n}", f"negative cyclic dims by U: {c.dims_by_U}"
        return True, f"degrees {-r}..{r}, U <= {max(c.U for c in g.by_degree.values())}", None

    check = _guard("cyclic", name, f"negative cyclic stable at U<={cfg.U_max}", stabilization)
    check.info = True  # instability is reported, not fatal
    yield check

    if ctx.fs is None or "groups" not in state:
        return
    prod = HomologyProduct(mixed, bv=ctx.bv)
    if prod.hypothesis_holds(range(-r - abs(prod.shift), r + abs(prod.shift) + 1)):
        yield from lie_axiom_checks(state["groups"], prod, "cyclic", name)


class BracketTable:
    """Memoized brackets of basis classes over the stable degrees of ``groups``."""

    def __init__(self, groups, prod: HomologyProduct):
        self.g = groups
        self.prod = prod
        self.k = 2 - prod.shift
        self.F = groups.mixed.F
        self.stable = sorted(n for n, c in groups.by_degree.items() if c.stable)
        self.S = set(self.stable)
        self._memo: dict = {}

    def basis(self):
        for n in self.stable:
            dim = self.g.by_degree[n].dim
            for j in range(dim):
                yield n, tuple(1 if i == j else 0 for i in range(dim))

    def __call__(self, n1, c1, n2, c2) -> tuple:
        key = (n1, tuple(c1), n2, tuple(c2))
        if key not in self._memo:
            self._memo[key] = bracket_of_classes(self.g, self.prod, n1, c1, n2, c2)[1]
        return self._memo[key]

    def pairs(self):
        """Basis pairs whose bracket lands in a stable degree."""
        gens = list(self.basis())
        for (n1, c1), (n2, c2) in itertools.product(gens, repeat=2):
            if n1 + n2 + self.k in self.S:
                yield (n1, c1), (n2, c2)


def lie_axiom_checks(groups, prod: HomologyProduct, suite: str, label: str):
    """Antisymmetry and Jacobi for the bracket of lower degree 2 - d."""
    br = BracketTable(groups, prod)
    k, F, S = br.k, br.F, br.S
    gens = list(br.basis())

    def antisym():
        n = nz = 0
        for (n1, c1), (n2, c2) in br.pairs():
            n += 1
            a, b = br(n1, c1, n2, c2), br(n2, c2, n1, c1)
            nz += any(a)
            want = tuple(F.norm(-sign((n1 + k) * (n2 + k)) * x) for x in b)
            if a != want:
                return False, f"degrees {n1},{n2}", f"x={c1}@{n1}; y={c2}@{n2}; {{x,y}}={a}; {{y,x}}={b}"
        return True, f"{n} pairs, {nz} nonzero brackets", None

    def jacobi():
        n = nz = 0
        for (n1, c1), (n2, c2), (n3, c3) in itertools.product(gens, repeat=3):
            m12, m13, m23, out = n1 + n2 + k, n1 + n3 + k, n2 + n3 + k, n1 + n2 + n3 + 2 * k
            if not all(x in S for x in (m12, m13, m23, out)):
                continue
            n += 1
            lhs = br(n1, c1, m23, br(n2, c2, n3, c3))
            r1 = br(m12, br(n1, c1, n2, c2), n3, c3)
            r2 = br(n2, c2, m13, br(n1, c1, n3, c3))
            s = sign((n1 + k) * (n2 + k))
            rhs = tuple(F.norm(x + s * y) for x, y in zip(r1, r2))
            nz += any(lhs) or any(r1) or any(r2)
            if lhs != rhs:
                return False, f"degrees {n1},{n2},{n3}", f"x={c1}@{n1}; y={c2}@{n2}; z={c3}@{n3}; {lhs} != {rhs}"
        return True, f"{n} triples, {nz} with a nonzero term", None

    yield _guard(suite, label, "Lie antisymmetry", antisym)
    yield _guard(suite, label, "Lie Jacobi", jacobi)


def lie_window_checks(name: str, lo: int, hi: int, U_max: int = 4, cache_dir=None):
    """Lie axioms on HC^-_* of one fixture over degrees lo..hi."""
    ctx = FixtureContext(name, cache_dir)
    if ctx.bv is None:
        return []
    mixed = MixedComplex(ctx.Cd, "dual")
    groups = compute_cyclic(mixed, "negative", list(range(lo, hi + 1)), U_max=U_max)
    prod = HomologyProduct(mixed, bv=ctx.bv)
    s = abs(prod.shift)
    if not prod.hypothesis_holds(range(lo - s, hi + s + 1)):
        return []
    return list(lie_axiom_checks(groups, prod, "cyclic", name))


# ---------------------------------------------------------------- driver

_SUITE_FN = {
    "differentials": suite_differentials,
    "gerstenhaber": suite_gerstenhaber,
    "bv": suite_bv,
    "calculus": suite_calculus,
    "cyclic": suite_cyclic,
}


def run(cfg: VerifyConfig):
    """Yield every check of the selected suites over the selected fixtures."""
    for fx in cfg.fixtures:
        ctx = FixtureContext(fx, cfg.cache_dir, cfg.cutoff)
        for s in cfg.suites:
            yield from _SUITE_FN[s](ctx, cfg)


def parse_suites(text: str) -> tuple:
    if text == "all":
        return SUITES
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    bad = [s for s in names if s not in SUITES]
    if bad:
        raise ValueError(f"unknown suite(s) {bad}; choose from {', '.join(SUITES)} or all")
    return names


# ---------------------------------------------------------------- mutations

MUTATION_FLAGS = ("eps_bar", "wrap", "rotation", "bdual")
MUTATION_SUITES = ("differentials", "gerstenhaber", "bv")


def mutation_witness(flag: str, fixture_names=fixtures.CORPUS, cfg: VerifyConfig | None = None):
    """Flip one sign convention and return the first failing check (or None).

    Only the suites guarding differentials, the Gerstenhaber axioms and the
    BV identities are consulted.
    """
    if flag not in MUTATION_FLAGS:
        raise ValueError(f"unknown mutation {flag!r}")
    cfg = cfg or VerifyConfig()
    hochschild.MUTATIONS.add(flag)
    try:
        for fx in fixture_names:
            ctx = FixtureContext(fx)  # fresh complexes: nothing cached from the unmutated build
            for s in MUTATION_SUITES:
                for check in _SUITE_FN[s](ctx, cfg):
                    if not check.ok:
                        return check
        return None
    finally:
        hochschild.MUTATIONS.discard(flag)
