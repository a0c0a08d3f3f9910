"""Normalized Hochschild chains and cochains and their operations.

A cochain with coefficients in a bimodule ``M`` is a sparse map
``(word, m) -> scalar`` where ``word`` is a tuple of reduced basis indices
(the bar word ``[a_1|...|a_k]``) and ``m`` indexes the basis of ``M``.  A chain
is a sparse map ``(a0, word) -> scalar`` standing for ``a0[a_1|...|a_k]``.

Degrees are lower.  For a word, ``|[a_1|...|a_k]| = sum(|a_i| + 1)``; a cochain
``word -> m`` has degree ``|m| - |word|`` and a chain ``a0[word]`` has degree
``|a0| + |word|``.  The cochain differential lowers degree by one, Connes'
boundary raises chain degree by one.

Slices are enumerated in the order (word length, word, coefficient index) for
cochains and (word length, word, a0) for chains, words compared
lexicographically in reduced-basis indices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from .algebra import Bimodule, GradedAlgebra, dual_bimodule, sign
from .linalg import SparseMatrix, Subquotient, SubquotientCache, axpy, homology_at

Word = tuple


class CutoffRequired(ValueError):
    """Some total degree meets infinitely many word lengths."""


class SliceTooLarge(MemoryError):
    def __init__(self, degree, size, limit):
        super().__init__(f"slice at degree {degree} has {size} basis elements (limit {limit})")
        self.degree, self.size, self.limit = degree, size, limit


class CoefficientMismatch(TypeError):
    pass


class NotACocycle(ValueError):
    pass


MAX_SLICE = int(os.environ.get("BVHH_MAX_SLICE", "400000"))


# ---------------------------------------------------------------- words


class WordSpace:
    """Enumerates bar words over the reduced basis by total degree."""

    def __init__(self, A: GradedAlgebra, cutoff: int | None = None):
        self.A = A
        self.cutoff = cutoff
        self.sdeg = {i: A.degrees[i] + 1 for i in A.reduced}
        vals = set(self.sdeg.values())
        if not vals:
            self.bounded = True
        else:
            self.bounded = min(vals) > 0 or max(vals) < 0
        if not self.bounded and cutoff is None:
            raise CutoffRequired(
                "the reduced algebra has elements of lower degree -1 (or of mixed sign), "
                "so a word cutoff is required"
            )
        self._memo: dict = {}

    def degree(self, w: Word) -> int:
        s = self.sdeg
        return sum(s[a] for a in w)

    def max_length(self, W: int) -> int:
        """Longest possible word of degree ``W`` (before the cutoff)."""
        if not self.sdeg:
            return 0
        if not self.bounded:
            return self.cutoff
        vals = self.sdeg.values()
        if min(vals) > 0:
            n = W // min(vals) if W >= 0 else -1
        else:
            n = W // max(vals) if W <= 0 else -1
        return n

    def words(self, W: int) -> list:
        """All words of degree ``W`` within the cutoff, in enumeration order."""
        if W in self._memo:
            return self._memo[W]
        cap = self.max_length(W)
        if self.cutoff is not None:
            cap = min(cap, self.cutoff)
        red = self.A.reduced
        s = self.sdeg
        lo = min(s.values(), default=0)
        hi = max(s.values(), default=0)
        out: list = []

        def rec(prefix, remaining_len, remaining_deg):
            if remaining_len == 0:
                if remaining_deg == 0:
                    out.append(prefix)
                return
            if not (lo * remaining_len <= remaining_deg <= hi * remaining_len):
                return
            for a in red:
                rec(prefix + (a,), remaining_len - 1, remaining_deg - s[a])

        for L in range(0, cap + 1):
            rec((), L, W)
        self._memo[W] = out
        return out

    def truncated(self, W: int) -> bool:
        """Whether the cutoff drops words of degree ``W``."""
        if self.cutoff is None:
            return False
        if self.max_length(W) <= self.cutoff:
            return False
        s = self.sdeg
        L = self.cutoff + 1
        lo, hi = min(s.values()), max(s.values())
        return lo * L <= W <= hi * L or not self.bounded


# ---------------------------------------------------------------- elements


@dataclass(frozen=True, eq=False)
class Cochain:
    """Homogeneous normalized cochain with values in ``module``."""

    module: Bimodule
    degree: int
    terms: Mapping = field(default_factory=dict)

    def __add__(self, other: "Cochain") -> "Cochain":
        _check_same(self, other)
        out = dict(self.terms)
        axpy(self.module.algebra.field, out, 1, other.terms)
        return Cochain(self.module, self.degree, out)

    def __sub__(self, other: "Cochain") -> "Cochain":
        _check_same(self, other)
        out = dict(self.terms)
        axpy(self.module.algebra.field, out, -1, other.terms)
        return Cochain(self.module, self.degree, out)

    def scaled(self, c) -> "Cochain":
        F = self.module.algebra.field
        return Cochain(self.module, self.degree, {k: F.norm(c * v) for k, v in self.terms.items() if F.norm(c * v)})

    def __neg__(self) -> "Cochain":
        return self.scaled(-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.module is other.module
            and dict(self.terms) == dict(other.terms)
            and (self.degree == other.degree or not self.terms)
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def word_lengths(self) -> set:
        return {len(w) for (w, _) in self.terms}

    def __str__(self) -> str:
        return format_cochain(self)


@dataclass(frozen=True, eq=False)
class Chain:
    """Homogeneous normalized Hochschild chain ``sum c a0[a_1|...|a_k]``."""

    algebra: GradedAlgebra
    degree: int
    terms: Mapping = field(default_factory=dict)

    def __add__(self, other: "Chain") -> "Chain":
        _check_same(self, other)
        out = dict(self.terms)
        axpy(self.algebra.field, out, 1, other.terms)
        return Chain(self.algebra, self.degree, out)

    def __sub__(self, other: "Chain") -> "Chain":
        _check_same(self, other)
        out = dict(self.terms)
        axpy(self.algebra.field, out, -1, other.terms)
        return Chain(self.algebra, self.degree, out)

    def scaled(self, c) -> "Chain":
        F = self.algebra.field
        return Chain(self.algebra, self.degree, {k: F.norm(c * v) for k, v in self.terms.items() if F.norm(c * v)})

    def __neg__(self) -> "Chain":
        return self.scaled(-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Chain)
            and self.algebra is other.algebra
            and dict(self.terms) == dict(other.terms)
            and (self.degree == other.degree or not self.terms)
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return format_chain(self)


def _check_same(x, y):
    if isinstance(x, Cochain) and x.module is not y.module:
        raise CoefficientMismatch("cochains have different coefficients")
    if x.terms and y.terms and x.degree != y.degree:
        raise ValueError(f"degree mismatch {x.degree} vs {y.degree}")


def _word_str(A: GradedAlgebra, w: Word) -> str:
    return "[" + "|".join(A.names[a] for a in w) + "]"


def format_cochain(f: Cochain) -> str:
    A, M = f.module.algebra, f.module
    if not f.terms:
        return "0"
    parts = []
    for (w, m) in sorted(f.terms, key=lambda k: (len(k[0]), k)):
        parts.append(f"{A.field.show(f.terms[(w, m)])}*({_word_str(A, w)} -> {M.names[m]})")
    return " + ".join(parts)


def format_chain(c: Chain) -> str:
    A = c.algebra
    if not c.terms:
        return "0"
    parts = []
    for (a0, w) in sorted(c.terms, key=lambda k: (len(k[1]), k[1], k[0])):
        parts.append(f"{A.field.show(c.terms[(a0, w)])}*{A.names[a0]}{_word_str(A, w)}")
    return " + ".join(parts)


def cochain_degree(M: Bimodule, key) -> int:
    w, m = key
    A = M.algebra
    return M.degrees[m] - sum(A.degrees[a] + 1 for a in w)


def chain_degree(A: GradedAlgebra, key) -> int:
    a0, w = key
    return A.degrees[a0] + sum(A.degrees[a] + 1 for a in w)


def make_cochain(M: Bimodule, values: dict) -> Cochain:
    """Build a cochain from ``{word_of_names: {module_name: coeff}}``.

    Word elements and module elements may be given by name or index.
    """
    A = M.algebra
    F = A.field
    midx = {n: i for i, n in enumerate(M.names)}
    terms: dict = {}
    deg = None
    for word, val in values.items():
        w = tuple(A.index[a] if isinstance(a, str) else a for a in word)
        if any(a == A.unit for a in w):
            continue
        for m, c in val.items():
            mi = midx[m] if isinstance(m, str) else m
            c = F.norm(F.parse(c) if isinstance(c, str) else c)
            if c:
                terms[(w, mi)] = F.norm(terms.get((w, mi), 0) + c)
                d = cochain_degree(M, (w, mi))
                if deg is not None and d != deg:
                    raise ValueError("inhomogeneous cochain")
                deg = d
    return Cochain(M, deg if deg is not None else 0, {k: v for k, v in terms.items() if v})


def make_chain(A: GradedAlgebra, values: dict) -> Chain:
    """Build a chain from ``{(a0, word): coeff}`` with names or indices."""
    F = A.field
    terms: dict = {}
    deg = None
    for (a0, word), c in values.items():
        a0 = A.index[a0] if isinstance(a0, str) else a0
        w = tuple(A.index[a] if isinstance(a, str) else a for a in word)
        if any(a == A.unit for a in w):
            continue
        c = F.norm(c)
        if c:
            terms[(a0, w)] = F.norm(terms.get((a0, w), 0) + c)
            d = chain_degree(A, (a0, w))
            if deg is not None and d != deg:
                raise ValueError("inhomogeneous chain")
            deg = d
    return Chain(A, deg if deg is not None else 0, {k: v for k, v in terms.items() if v})


def unit_cochain(A: GradedAlgebra, M: Bimodule | None = None) -> Cochain:
    """epsilon_A: the word-length-0 cochain [] -> 1_A."""
    M = M or A.as_bimodule()
    return Cochain(M, 0, {((), A.unit): 1})


# ---------------------------------------------------------------- signs


def _sdeg(A: GradedAlgebra, w) -> int:
    d = A.degrees
    return sum(d[a] + 1 for a in w)


def _add(F, out: dict, key, c) -> None:
    v = F.norm(out.get(key, 0) + c)
    if v:
        out[key] = v
    else:
        out.pop(key, None)


# Knobs used by the mutation tests: each flips one sign convention.
MUTATIONS: set = set()


# ---------------------------------------------------------------- differentials


def _cochain_diff_terms(M: Bimodule, fdeg: int, w: Word, m: int, c, out: dict) -> None:
    A = M.algebra
    F = A.field
    deg = A.degrees
    red = A.reduced
    # - (-1)^{|sa_1||f|} a_1 f([a_2|...])
    for a in red:
        s = -sign((deg[a] + 1) * fdeg)
        for mm, v in M.left[a][m].items():
            _add(F, out, ((a,) + w, mm), s * c * v)
    # - sum (-1)^{eps_i} f([...|a_{i-1}a_i|...]), eps_i = |f| + |sa_1| + ... + |sa_{i-1}|
    prefix = fdeg
    for i, target in enumerate(w):
        for (b, cc, coef) in A.factorizations[target]:
            e = prefix + deg[b] + 1
            if "eps_bar" in MUTATIONS:
                e += 1
            s = -sign(e)
            _add(F, out, (w[:i] + (b, cc) + w[i + 1 :], m), s * c * coef)
        prefix += deg[target] + 1
    # + (-1)^{eps_k} f([a_1|...|a_{k-1}]) a_k
    s = sign(prefix)
    for a in red:
        for mm, v in M.right[m][a].items():
            _add(F, out, (w + (a,), mm), s * c * v)


def cochain_differential(f: Cochain) -> Cochain:
    M = f.module
    out: dict = {}
    for (w, m), c in f.terms.items():
        _cochain_diff_terms(M, f.degree, w, m, c, out)
    return Cochain(M, f.degree - 1, out)


def _chain_diff_terms(A: GradedAlgebra, a0: int, w: Word, c, out: dict) -> None:
    F = A.field
    deg = A.degrees
    k = len(w)
    if k == 0:
        return
    u = A.unit
    # (-1)^{|a|} a a_1 [a_2|...]
    s = sign(deg[a0])
    for x, v in A.mult[a0][w[0]].items():
        _add(F, out, (x, w[1:]), s * c * v)
    # sum_{i=1}^{k-1} (-1)^{eps_i} a[...|a_i a_{i+1}|...]
    eps = deg[a0]
    for i in range(k - 1):
        eps += deg[w[i]] + 1
        s = sign(eps)
        for x, v in A.mult[w[i]][w[i + 1]].items():
            if x != u:
                _add(F, out, (a0, w[:i] + (x,) + w[i + 2 :]), s * c * v)
    # - (-1)^{|sa_k| eps_{k-1}} a_k a [a_1|...|a_{k-1}]
    eps_km1 = deg[a0] + _sdeg(A, w[:-1])
    e = (deg[w[-1]] + 1) * eps_km1
    if "wrap" in MUTATIONS:
        e += 1
    s = -sign(e)
    for x, v in A.mult[w[-1]][a0].items():
        _add(F, out, (x, w[:-1]), s * c * v)


def chain_differential(c: Chain) -> Chain:
    A = c.algebra
    out: dict = {}
    for (a0, w), v in c.terms.items():
        _chain_diff_terms(A, a0, w, v, out)
    return Chain(A, c.degree - 1, out)


def _rotation_sign(A: GradedAlgebra, head, tail) -> int:
    """Koszul sign of moving ``tail`` in front of ``head`` (all letters suspended)."""
    e = _sdeg(A, head) * _sdeg(A, tail)
    if "rotation" in MUTATIONS:
        e += 1 if len(head) % 2 else 0
    return sign(e)


def _connes_terms(A: GradedAlgebra, a0: int, w: Word, c, out: dict) -> None:
    if a0 == A.unit:
        return
    F = A.field
    s_ = (a0,) + w
    for i in range(len(s_)):
        head, tail = s_[:i], s_[i:]
        _add(F, out, (A.unit, tail + head), _rotation_sign(A, head, tail) * c)


def connes_B(c: Chain) -> Chain:
    """Normalized Connes boundary: sum of signed cyclic rotations into 1[...]."""
    A = c.algebra
    out: dict = {}
    for (a0, w), v in c.terms.items():
        _connes_terms(A, a0, w, v, out)
    return Chain(A, c.degree + 1, out)


# ---------------------------------------------------------------- dual picture


def _iso_sign(A: GradedAlgebra, w: Word, m: int) -> int:
    """Sign in C(A; A^v) -> C_*(A; A)^v, phi(m[w]) = (-1)^{|m||w|} (g[w])(m).

    The Koszul sign of moving the functional past ``w``; without it B^v fails
    to anticommute with D once two odd generators multiply nontrivially.
    """
    return sign(A.degrees[m] * _sdeg(A, w))


def pair(g: Cochain, c: Chain):
    """<g, c> for g in C(A; A^v), through the canonical isomorphism."""
    if g.module.tag != "dual":
        raise CoefficientMismatch("pairing needs coefficients in A^v")
    A = c.algebra
    F = A.field
    total = 0
    for (a0, w), v in c.terms.items():
        x = g.terms.get((w, a0))
        if x:
            total += _iso_sign(A, w, a0) * x * v
    return F.norm(total)


def connes_B_dual(g: Cochain) -> Cochain:
    """B^v(g) := (-1)^{|g|} g o B, transported to C(A; A^v)."""
    M = g.module
    if M.tag != "dual":
        raise CoefficientMismatch("B^v needs coefficients in A^v")
    A = M.algebra
    F = A.field
    u = A.unit
    pre = sign(g.degree)
    if "bdual" in MUTATIONS:
        pre = -pre
    out: dict = {}
    for (w, m), c in g.terms.items():
        if m != u or not w:
            continue
        val = c * _iso_sign(A, w, u)
        L = len(w)
        for j in range(L):
            s_ = w[j:] + w[:j]
            a0, wp = s_[0], s_[1:]
            # rotation index L - j of s_ gives w: head = w[j:], tail = w[:j]
            rs = _rotation_sign(A, w[j:], w[:j])
            _add(F, out, (wp, a0), pre * _iso_sign(A, wp, a0) * rs * val)
    return Cochain(M, g.degree + 1, out)


# ---------------------------------------------------------------- products


def tensor_action(f: Cochain, g: Cochain) -> Cochain:
    """(f.g)([a_1|...|a_n]) = sum_p (-1)^{|g||w_1|} f(w_1) . g(w_2).

    ``f`` takes values in A; ``g`` in any bimodule N.  For N = A this is the
    cup product.
    """
    if f.module.tag != "self":
        raise CoefficientMismatch("the acting cochain must have coefficients in A")
    N = g.module
    A = N.algebra
    F = A.field
    gd = g.degree
    out: dict = {}
    for (w1, a), c1 in f.terms.items():
        s = sign(gd * _sdeg(A, w1))
        for (w2, n), c2 in g.terms.items():
            for nn, v in N.left[a][n].items():
                _add(F, out, (w1 + w2, nn), s * c1 * c2 * v)
    return Cochain(N, f.degree + g.degree, out)


def cup(f: Cochain, g: Cochain) -> Cochain:
    if g.module.tag != "self":
        raise CoefficientMismatch("cup product needs coefficients in A")
    return tensor_action(f, g)


def circle(f: Cochain, g: Cochain) -> Cochain:
    """Gerstenhaber pre-Lie product: insert g into each slot of f.

    (f o g)[w] = - sum_i (-1)^{(|g|+1) |w_{<i}|} f[w_{<i} | g[w_i...] | ...].
    The overall sign makes i_{f,g} = [L_f, i_g] with the i_f and B used here.
    """
    if f.module.tag != "self" or g.module.tag != "self":
        raise CoefficientMismatch("circle product needs coefficients in A")
    A = f.module.algebra
    F = A.field
    u = A.unit
    sg = g.degree + 1
    out: dict = {}
    for (u_w, a), c2 in g.terms.items():
        if a == u:
            continue
        for (v, b), c1 in f.terms.items():
            pre = 0
            for i, x in enumerate(v):
                if x == a:
                    _add(F, out, (v[:i] + u_w + v[i + 1 :], b), -sign(sg * pre) * c1 * c2)
                pre += A.degrees[x] + 1
    return Cochain(f.module, f.degree + g.degree + 1, out)


def gerstenhaber_bracket(f: Cochain, g: Cochain) -> Cochain:
    """{f, g} = f o g - (-1)^{(|f|+1)(|g|+1)} g o f."""
    a = circle(f, g)
    b = circle(g, f)
    return a - b.scaled(sign((f.degree + 1) * (g.degree + 1))) if (a.terms or b.terms) else Cochain(
        f.module, f.degree + g.degree + 1, {}
    )


def iota(f: Cochain, c: Chain) -> Chain:
    """i_f(a0[a_1|...|a_n]) = sum_p (-1)^{|f||a0|} (a0 f[a_1|...|a_p]) [a_{p+1}|...|a_n].

    With this sign d i_f - (-1)^{|f|} i_f d = i_{Df}.
    """
    if f.module.tag != "self":
        raise CoefficientMismatch("i_f needs f with coefficients in A")
    A = c.algebra
    F = A.field
    fd = f.degree
    out: dict = {}
    for (v, b), c1 in f.terms.items():
        k = len(v)
        for (a0, w), c2 in c.terms.items():
            if w[:k] != v:
                continue
            rest = w[k:]
            s = sign(fd * A.degrees[a0])
            for x, val in A.mult[a0][b].items():
                _add(F, out, (x, rest), s * c1 * c2 * val)
    return Chain(A, c.degree + fd, out)


def lie_derivative(f: Cochain, c: Chain, check: bool = True) -> Chain:
    """L_f = (-1)^{|f|} {B, i_f} = (-1)^{|f|} B i_f - i_f B."""
    if check and not cochain_differential(f).is_zero():
        raise NotACocycle("L_f is only defined here for cocycles f")
    x = connes_B(iota(f, c)).scaled(sign(f.degree))
    y = iota(f, connes_B(c))
    if not x.terms and not y.terms:
        return Chain(c.algebra, c.degree + f.degree + 1, {})
    return x - y


# ---------------------------------------------------------------- complexes


class _Graded:
    """Shared slice machinery for chain and cochain complexes."""

    def __init__(self, A: GradedAlgebra, cutoff: int | None, cache_dir=None):
        self.A = A
        self.F = A.field
        self.words = WordSpace(A, cutoff)
        self.cutoff = cutoff
        self._basis: dict = {}
        self._index: dict = {}
        self._diff: dict = {}
        self._homology: dict = {}
        cache_dir = cache_dir if cache_dir is not None else os.environ.get("BVHH_CACHE_DIR")
        self.cache = SubquotientCache(cache_dir) if cache_dir else None

    # subclasses provide _enumerate(n), _diff_column(key, out), degree_step, tag

    def basis(self, n: int) -> list:
        if n not in self._basis:
            b = self._enumerate(n)
            if len(b) > MAX_SLICE:
                raise SliceTooLarge(n, len(b), MAX_SLICE)
            self._basis[n] = b
            self._index[n] = {k: i for i, k in enumerate(b)}
        return self._basis[n]

    def index(self, n: int) -> dict:
        self.basis(n)
        return self._index[n]

    def differential(self, n: int) -> SparseMatrix:
        """Matrix of the differential out of degree ``n`` (to ``n - 1``)."""
        if n not in self._diff:
            src = self.basis(n)
            tgt_index = self.index(n - 1)
            cols = []
            for key in src:
                out: dict = {}
                self._diff_column(n, key, out)
                cols.append({tgt_index[k]: v for k, v in out.items()})
            self._diff[n] = SparseMatrix(len(tgt_index), len(src), tuple(cols))
        return self._diff[n]

    def homology(self, n: int) -> Subquotient:
        if n not in self._homology:
            d_in = self.differential(n + 1)
            d_out = self.differential(n)
            sq = None
            key = f"{self.A.digest}|{self.tag}|{self.cutoff}|{n}"
            if self.cache is not None:
                sq = self.cache.get(self.F, key, d_in, d_out)
            if sq is None:
                sq = homology_at(self.F, d_in, d_out)
                if self.cache is not None:
                    self.cache.put(self.F, key, d_in, d_out, sq)
            self._homology[n] = sq
        return self._homology[n]

    def vector(self, x) -> dict:
        if not x.terms:
            return {}
        idx = self.index(x.degree)
        try:
            return {idx[k]: v for k, v in x.terms.items()}
        except KeyError as exc:
            raise ValueError(f"term {exc} is outside the enumerated slice (cutoff {self.cutoff})") from exc

    def coords(self, x) -> tuple:
        return self.homology(x.degree).coords(self.vector(x))

    def is_cycle(self, x) -> bool:
        if not x.terms:
            return True
        return self.homology(x.degree).is_cycle(self.vector(x))

    def is_boundary(self, x) -> bool:
        return not any(self.coords(x))

    def dims(self, degrees) -> list:
        return [self.homology(n).dim for n in degrees]

    def truncated(self, n: int) -> bool:
        return any(self._truncated_at(m) for m in (n - 1, n, n + 1))


class CochainComplex(_Graded):
    """C*(A; M) sliced by lower total degree."""

    tag = "cochain"

    def __init__(self, A: GradedAlgebra, M: Bimodule | None = None, cutoff: int | None = None, cache_dir=None):
        super().__init__(A, cutoff, cache_dir)
        self.M = M if M is not None else A.as_bimodule()
        self.tag = f"cochain:{self.M.tag}"

    def _enumerate(self, n: int) -> list:
        out = []
        for m in range(self.M.dim):
            for w in self.words.words(self.M.degrees[m] - n):
                out.append((w, m))
        out.sort(key=lambda k: (len(k[0]), k[0], k[1]))
        return out

    def _truncated_at(self, n: int) -> bool:
        return any(self.words.truncated(self.M.degrees[m] - n) for m in range(self.M.dim))

    def _diff_column(self, n, key, out) -> None:
        w, m = key
        _cochain_diff_terms(self.M, n, w, m, 1, out)

    def element(self, n: int, v: dict) -> Cochain:
        b = self.basis(n)
        return Cochain(self.M, n, {b[i]: c for i, c in v.items() if c})

    def rep(self, n: int, k: int) -> Cochain:
        return self.element(n, self.homology(n).homology_reps[k])

    def reps(self, n: int) -> list:
        return [self.rep(n, k) for k in range(self.homology(n).dim)]

    def lift(self, n: int, coords) -> Cochain:
        return self.element(n, self.homology(n).lift(coords))


class ChainComplex(_Graded):
    """C_*(A; A) sliced by lower total degree."""

    tag = "chain"

    def __init__(self, A: GradedAlgebra, cutoff: int | None = None, cache_dir=None):
        super().__init__(A, cutoff, cache_dir)

    def _enumerate(self, n: int) -> list:
        A = self.A
        out = []
        for a0 in range(A.dim):
            for w in self.words.words(n - A.degrees[a0]):
                out.append((a0, w))
        out.sort(key=lambda k: (len(k[1]), k[1], k[0]))
        return out

    def _truncated_at(self, n: int) -> bool:
        return any(self.words.truncated(n - d) for d in self.A.degrees)

    def _diff_column(self, n, key, out) -> None:
        a0, w = key
        _chain_diff_terms(self.A, a0, w, 1, out)

    def connes_matrix(self, n: int) -> SparseMatrix:
        """B from degree ``n`` to ``n + 1``."""
        src = self.basis(n)
        tgt = self.index(n + 1)
        cols = []
        for a0, w in src:
            out: dict = {}
            _connes_terms(self.A, a0, w, 1, out)
            cols.append({tgt[k]: v for k, v in out.items()})
        return SparseMatrix(len(tgt), len(src), tuple(cols))

    def element(self, n: int, v: dict) -> Chain:
        b = self.basis(n)
        return Chain(self.A, n, {b[i]: c for i, c in v.items() if c})

    def rep(self, n: int, k: int) -> Chain:
        return self.element(n, self.homology(n).homology_reps[k])

    def reps(self, n: int) -> list:
        return [self.rep(n, k) for k in range(self.homology(n).dim)]

    def lift(self, n: int, coords) -> Chain:
        return self.element(n, self.homology(n).lift(coords))


def connes_dual_matrix(C: CochainComplex, n: int) -> SparseMatrix:
    """B^v from degree ``n`` to ``n + 1`` on C(A; A^v)."""
    src = C.basis(n)
    tgt = C.index(n + 1)
    cols = []
    for key in src:
        g = connes_B_dual(Cochain(C.M, n, {key: 1}))
        cols.append({tgt[k]: v for k, v in g.terms.items()})
    return SparseMatrix(len(tgt), len(src), tuple(cols))


@dataclass
class HHResult:
    degree: int  # lower total degree
    dim: int
    reps: list
    subquotient: Subquotient
    truncated: bool

    @property
    def cohomological_degree(self) -> int:
        return -self.degree


def compute_HH(
    A: GradedAlgebra,
    coefficients: str | Bimodule = "self",
    degrees=range(0, 1),
    cutoff: int | None = None,
    complex_: CochainComplex | None = None,
) -> list:
    """HH*(A; M) on a window of lower total degrees, with representatives.

    ``coefficients`` is ``"self"``, ``"dual"`` or a :class:`Bimodule`.
    """
    if isinstance(coefficients, Bimodule):
        M = coefficients
    elif coefficients == "self":
        M = A.as_bimodule()
    elif coefficients == "dual":
        M = dual_bimodule(A)
    else:
        raise ValueError(f"unknown coefficients {coefficients!r}")
    C = complex_ or CochainComplex(A, M, cutoff)
    out = []
    for n in degrees:
        sq = C.homology(n)
        out.append(HHResult(n, sq.dim, C.reps(n), sq, C.truncated(n)))
    return out
