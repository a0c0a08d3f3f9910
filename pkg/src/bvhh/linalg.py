"""Exact sparse linear algebra and homology bookkeeping.

Vectors are ``dict[int, scalar]`` with no stored zeros.  Matrices are stored
column-wise.  Elimination always pivots on the smallest row index of the
column being reduced, so kernels, images and homology representatives are
reproducible run to run.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from .field import GroundField

CACHE_VERSION = 1


class CompositeNotZero(ArithmeticError):
    """``d_out * d_in`` is nonzero: a sign or formula bug upstream."""

    def __init__(self, witness_col: int, witness: dict):
        self.witness_col = witness_col
        self.witness = witness
        super().__init__(f"d_out*d_in != 0 on column {witness_col}: {witness}")


class NotACycle(ValueError):
    pass


def axpy(F: GroundField, y: dict, a, x: dict) -> None:
    """In place ``y += a*x``."""
    get = y.get
    p = F.char
    if p:
        # hot path: plain ints mod p, no method calls per entry
        for k, v in x.items():
            w = (get(k, 0) + a * v) % p
            if w:
                y[k] = w
            else:
                y.pop(k, None)
        return
    norm = F.norm
    for k, v in x.items():
        w = norm(get(k, 0) + a * v)
        if w == 0:
            y.pop(k, None)
        else:
            y[k] = w


def scale(F: GroundField, a, x: dict) -> dict:
    if a == 0:
        return {}
    return {k: F.norm(a * v) for k, v in x.items()}


def vec_sub(F: GroundField, x: dict, y: dict) -> dict:
    out = dict(x)
    axpy(F, out, -1, y)
    return out


@dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    columns: tuple  # tuple of dicts, one per column

    @classmethod
    def from_columns(cls, F: GroundField, rows: int, columns) -> "SparseMatrix":
        cleaned = []
        for col in columns:
            c = {}
            for r, v in col.items():
                if not 0 <= r < rows:
                    raise IndexError(f"row {r} out of range {rows}")
                v = F.norm(v)
                if v != 0:
                    c[r] = v
            cleaned.append(c)
        return cls(rows, len(cleaned), tuple(cleaned))

    @classmethod
    def from_entries(cls, F: GroundField, rows: int, cols: int, entries: dict) -> "SparseMatrix":
        columns = [{} for _ in range(cols)]
        for (r, c), v in entries.items():
            columns[c][r] = F.norm(columns[c].get(r, 0) + v)
        return cls.from_columns(F, rows, columns)

    @classmethod
    def from_dense(cls, F: GroundField, dense) -> "SparseMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls.from_columns(
            F, rows, [{r: dense[r][c] for r in range(rows) if dense[r][c] != 0} for c in range(cols)]
        )

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols, tuple({} for _ in range(cols)))

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, tuple({i: 1} for i in range(n)))

    @property
    def entries(self) -> dict:
        return {(r, c): v for c, col in enumerate(self.columns) for r, v in col.items()}

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def apply(self, F: GroundField, x: dict) -> dict:
        out: dict = {}
        for c, a in x.items():
            axpy(F, out, a, self.columns[c])
        return out

    def compose(self, F: GroundField, other: "SparseMatrix") -> "SparseMatrix":
        """``self @ other``."""
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        return SparseMatrix(self.rows, other.cols, tuple(self.apply(F, c) for c in other.columns))

    def transpose(self) -> "SparseMatrix":
        cols = [{} for _ in range(self.rows)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                cols[r][c] = v
        return SparseMatrix(self.cols, self.rows, tuple(cols))

    def is_zero(self) -> bool:
        return all(not c for c in self.columns)

    def to_dense(self, F: GroundField) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def digest(self, F: GroundField) -> str:
        h = hashlib.sha256(f"{self.rows}x{self.cols}".encode())
        for c, col in enumerate(self.columns):
            for r in sorted(col):
                h.update(f"{c},{r},{F.dump(col[r])};".encode())
        return h.hexdigest()


class Echelon:
    """Incremental column echelon form over ``F``.

    Each stored column has its pivot at its smallest row index, normalized to
    1, and carries a combination of caller-chosen generator labels that it is
    equal to.
    """

    def __init__(self, F: GroundField):
        self.F = F
        self.pivots: dict = {}  # row -> (column, combination)

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, v: dict):
        """Return ``(remainder, used)`` with ``v = remainder + sum(used[g] g)``."""
        F = self.F
        v = dict(v)
        used: dict = {}
        while v:
            r = min(v)
            hit = self.pivots.get(r)
            if hit is None:
                break
            col, col_combo = hit
            a = v[r]
            axpy(F, v, -a, col)
            axpy(F, used, a, col_combo)
        return v, used

    def _reduce_tracked(self, v: dict, combo: dict):
        rem, used = self.reduce(v)
        rem_combo = dict(combo)
        axpy(self.F, rem_combo, -1, used)
        return rem, rem_combo

    def insert(self, v: dict, combo: dict) -> bool:
        """Reduce ``v`` and store it if independent.  Returns True if stored."""
        rem, rem_combo = self._reduce_tracked(v, combo)
        if not rem:
            return False
        r = min(rem)
        inv = self.F.inv(rem[r])
        self.pivots[r] = (scale(self.F, inv, rem), scale(self.F, inv, rem_combo))
        return True

    def contains(self, v: dict) -> bool:
        rem, _ = self.reduce(v)
        return not rem


def rank_kernel_image(F: GroundField, M: SparseMatrix):
    """Return ``(rank, kernel_basis, image_basis)`` of ``M``."""
    ech = Echelon(F)
    kernel = []
    image = []
    for j, col in enumerate(M.columns):
        rem, rem_combo = ech._reduce_tracked(col, {j: 1})
        if not rem:
            kernel.append(rem_combo)
        else:
            r = min(rem)
            inv = F.inv(rem[r])
            ech.pivots[r] = (scale(F, inv, rem), scale(F, inv, rem_combo))
            image.append(dict(col))
    return len(image), kernel, image


def rank(F: GroundField, M: SparseMatrix) -> int:
    ech = Echelon(F)
    for j, col in enumerate(M.columns):
        rem, _ = ech.reduce(col)
        if rem:
            r = min(rem)
            ech.pivots[r] = (scale(F, F.inv(rem[r]), rem), {})
    return len(ech)


def solve(F: GroundField, M: SparseMatrix, b: dict):
    """Some ``x`` with ``M x = b``, or ``None`` if ``b`` is not in the image."""
    ech = Echelon(F)
    for j, col in enumerate(M.columns):
        ech.insert(col, {j: 1})
    rem, used = ech.reduce(b)
    if rem:
        return None
    return used


def inverse(F: GroundField, M: SparseMatrix) -> SparseMatrix:
    if M.rows != M.cols:
        raise ValueError("inverse of non-square matrix")
    ech = Echelon(F)
    for j, col in enumerate(M.columns):
        ech.insert(col, {j: 1})
    if len(ech) != M.rows:
        raise ZeroDivisionError("singular matrix")
    cols = []
    for i in range(M.rows):
        rem, used = ech.reduce({i: 1})
        cols.append(used)
    return SparseMatrix.from_columns(F, M.cols, cols)


@dataclass
class Subquotient:
    """``ker d_out / im d_in`` with chosen representatives.

    ``homology_reps[k]`` is a cycle; every cycle reduces uniquely to
    coordinates on the reps modulo boundaries.
    """

    F: GroundField
    ambient_dim: int
    cycle_basis: list
    boundary_basis: list
    homology_reps: list
    _ech: Echelon = field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return len(self.homology_reps)

    def reduction(self, v: dict):
        """Coordinates of ``v`` on ``homology_reps`` (and on boundaries)."""
        rem, used = self._ech.reduce(v)
        if rem:
            raise NotACycle(f"vector is not a cycle (residue {dict(list(rem.items())[:4])})")
        h = tuple(self.F.norm(used.get(("h", k), 0)) for k in range(self.dim))
        b = {k[1]: c for k, c in used.items() if k[0] == "b"}
        return h, b

    def coords(self, v: dict) -> tuple:
        return self.reduction(v)[0]

    def is_cycle(self, v: dict) -> bool:
        return self._ech.contains(v)

    def is_boundary(self, v: dict) -> bool:
        return not any(self.coords(v))

    def lift(self, coords) -> dict:
        out: dict = {}
        for k, c in enumerate(coords):
            if c:
                axpy(self.F, out, c, self.homology_reps[k])
        return out


def _build_subquotient(F, ambient_dim, cycles, boundaries) -> Subquotient:
    ech = Echelon(F)
    boundary_basis = []
    for b in boundaries:
        if ech.insert(b, {("b", len(boundary_basis)): 1}):
            boundary_basis.append(b)
    reps = []
    for z in cycles:
        if ech.insert(z, {("h", len(reps)): 1}):
            reps.append(z)
    return Subquotient(F, ambient_dim, list(cycles), boundary_basis, reps, ech)


def homology_at(F: GroundField, d_in: SparseMatrix, d_out: SparseMatrix, check: bool = True) -> Subquotient:
    """Homology of ``C_prev --d_in--> C --d_out--> C_next`` at ``C``."""
    if d_in.rows != d_out.cols:
        raise ValueError(f"slice mismatch: d_in lands in dim {d_in.rows}, d_out starts from {d_out.cols}")
    if check:
        for j, col in enumerate(d_in.columns):
            img = d_out.apply(F, col)
            if img:
                raise CompositeNotZero(j, img)
    _, kernel, _ = rank_kernel_image(F, d_out)
    sq = _build_subquotient(F, d_in.rows, kernel, d_in.columns)
    assert sq.dim == len(kernel) - len(sq.boundary_basis)
    return sq


def coset_equal(s: Subquotient, v: dict, w: dict) -> bool:
    if not s.is_cycle(v) or not s.is_cycle(w):
        raise NotACycle("coset_equal needs cycles")
    return s.is_boundary(vec_sub(s.F, v, w))


class SubquotientCache:
    """On-disk cache of subquotient bases, one JSON file per key.

    Files carry ``cache_version`` and a digest of the two matrices; anything
    that does not match is ignored.  Writes go through a temp file and
    ``os.replace``.
    """

    def __init__(self, directory):
        self.dir = Path(directory)

    def _path(self, key: str) -> Path:
        return self.dir / (hashlib.sha256(key.encode()).hexdigest()[:32] + ".json")

    def get(self, F, key, d_in, d_out):
        path = self._path(key)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("cache_version") != CACHE_VERSION or data.get("key") != key:
            return None
        if data.get("digest") != [d_in.digest(F), d_out.digest(F)]:
            return None

        def vec(items):
            return {int(r): F.parse(v) for r, v in items}

        return _build_subquotient(
            F,
            data["ambient_dim"],
            [vec(v) for v in data["cycles"]],
            [vec(v) for v in data["boundaries"]],
        )

    def put(self, F, key, d_in, d_out, sq: Subquotient) -> None:
        self.dir.mkdir(parents=True, exist_ok=True)

        def enc(v):
            return [[r, F.dump(v[r])] for r in sorted(v)]

        data = {
            "cache_version": CACHE_VERSION,
            "key": key,
            "digest": [d_in.digest(F), d_out.digest(F)],
            "ambient_dim": sq.ambient_dim,
            "cycles": [enc(v) for v in sq.cycle_basis],
            "boundaries": [enc(v) for v in sq.boundary_basis],
        }
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh)
        os.replace(tmp, self._path(key))
