"""Finite-dimensional graded algebras, bimodules and Frobenius pairings.

Degrees are lower (homological) throughout; a cohomologically graded algebra
such as H*(S^2) is entered with negated degrees.  All algebras have zero
differential.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .field import FieldError, GroundField
from .linalg import SparseMatrix, axpy, rank


class AlgebraError(ValueError):
    """Invalid presentation; ``witness`` names the offending basis tuple."""

    def __init__(self, msg: str, witness=None):
        super().__init__(msg)
        self.witness = witness


def sign(n: int) -> int:
    return -1 if n & 1 else 1


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    """Basis ``names``/``degrees``, structure constants ``mult[i][j] = e_i e_j``.

    ``unit`` is the index of 1_A.  The reduced part is spanned by every other
    basis element (``reduced``); a custom augmentation is handled by
    :func:`load_algebra` rebasing onto ``e_i - aug(e_i) 1``.
    """

    field: GroundField
    names: tuple
    degrees: tuple
    unit: int
    mult: tuple  # mult[i][j] -> dict index -> scalar
    label: str = ""

    @property
    def dim(self) -> int:
        return len(self.names)

    @cached_property
    def reduced(self) -> tuple:
        return tuple(i for i in range(self.dim) if i != self.unit)

    @cached_property
    def index(self) -> dict:
        return {n: i for i, n in enumerate(self.names)}

    def product(self, x: dict, y: dict) -> dict:
        F = self.field
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                axpy(F, out, F.norm(a * b), self.mult[i][j])
        return out

    @cached_property
    def factorizations(self) -> dict:
        """``k -> [(i, j, c)]``: reduced i, j with c = coefficient of e_k in e_i e_j."""
        out: dict = {k: [] for k in range(self.dim)}
        for i in self.reduced:
            for j in self.reduced:
                for k, c in self.mult[i][j].items():
                    out[k].append((i, j, c))
        return out

    @cached_property
    def is_ungraded(self) -> bool:
        return all(d == 0 for d in self.degrees)

    @cached_property
    def digest(self) -> str:
        F = self.field
        payload = {
            "char": F.char,
            "names": list(self.names),
            "degrees": list(self.degrees),
            "unit": self.unit,
            "mult": [[sorted((k, F.dump(v)) for k, v in m.items()) for m in row] for row in self.mult],
        }
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:16]

    def validate(self) -> None:
        F, n = self.field, self.dim
        for i in range(n):
            for j in range(n):
                for k in self.mult[i][j]:
                    if self.degrees[k] != self.degrees[i] + self.degrees[j]:
                        raise AlgebraError(
                            f"grading violation: {self.names[i]}*{self.names[j]} has a "
                            f"{self.names[k]} component",
                            (self.names[i], self.names[j]),
                        )
        e = self.unit
        for i in range(n):
            if self.mult[e][i] != {i: 1} or self.mult[i][e] != {i: 1}:
                raise AlgebraError(f"unit violation at {self.names[i]}", (self.names[i],))
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = self.product(self.mult[i][j], {k: 1})
                    right = self.product({i: 1}, self.mult[j][k])
                    if left != right:
                        raise AlgebraError(
                            "associativity violation at "
                            f"({self.names[i]}, {self.names[j]}, {self.names[k]})",
                            (self.names[i], self.names[j], self.names[k]),
                        )

    def as_bimodule(self) -> "Bimodule":
        """A as a bimodule over itself; one shared object per algebra, since
        cochains only combine when their coefficient modules are identical."""
        return self._self_bimodule

    @cached_property
    def _self_bimodule(self) -> "Bimodule":
        n = self.dim
        return Bimodule(
            self,
            tuple(self.names),
            tuple(self.degrees),
            tuple(tuple(self.mult[a][m] for m in range(n)) for a in range(n)),
            tuple(tuple(self.mult[m][a] for a in range(n)) for m in range(n)),
            tag="self",
        )


@dataclass(frozen=True, eq=False)
class Bimodule:
    """Graded (A, A)-bimodule given by action tables.

    ``left[a][m]`` is ``e_a . m_m`` and ``right[m][a]`` is ``m_m . e_a`` as
    sparse vectors on the carrier basis.
    """

    algebra: GradedAlgebra
    names: tuple
    degrees: tuple
    left: tuple
    right: tuple
    tag: str = "custom"
    degree_shift: int = 0

    @property
    def dim(self) -> int:
        return len(self.names)

    def act_left(self, x: dict, v: dict) -> dict:
        F = self.algebra.field
        out: dict = {}
        for a, s in x.items():
            for m, t in v.items():
                axpy(F, out, F.norm(s * t), self.left[a][m])
        return out

    def act_right(self, v: dict, x: dict) -> dict:
        F = self.algebra.field
        out: dict = {}
        for m, t in v.items():
            for a, s in x.items():
                axpy(F, out, F.norm(s * t), self.right[m][a])
        return out

    def validate(self) -> None:
        A = self.algebra
        n, r = A.dim, self.dim
        for a in range(n):
            for m in range(r):
                for k in self.left[a][m]:
                    if self.degrees[k] != A.degrees[a] + self.degrees[m]:
                        raise AlgebraError(f"left action not homogeneous at ({A.names[a]}, {self.names[m]})")
                for k in self.right[m][a]:
                    if self.degrees[k] != A.degrees[a] + self.degrees[m]:
                        raise AlgebraError(f"right action not homogeneous at ({self.names[m]}, {A.names[a]})")
        for m in range(r):
            if self.left[A.unit][m] != {m: 1} or self.right[m][A.unit] != {m: 1}:
                raise AlgebraError(f"action not unital at {self.names[m]}")
        for a in range(n):
            for b in range(n):
                for m in range(r):
                    e = {m: 1}
                    if self.act_left(A.mult[a][b], e) != self.act_left({a: 1}, self.left[b][m]):
                        raise AlgebraError(f"left action not associative at ({A.names[a]}, {A.names[b]}, {self.names[m]})")
                    if self.act_right(e, A.mult[a][b]) != self.act_right(self.right[m][a], {b: 1}):
                        raise AlgebraError(f"right action not associative at ({self.names[m]}, {A.names[a]}, {A.names[b]})")
                    if self.act_right(self.left[a][m], {b: 1}) != self.act_left({a: 1}, self.right[m][b]):
                        raise AlgebraError(f"actions do not commute at ({A.names[a]}, {self.names[m]}, {A.names[b]})")


def dual_bimodule(A: GradedAlgebra) -> Bimodule:
    """A^v with (a.phi.b)(x) = (-1)^{|a|(|phi|+|b|+|x|)} phi(b x a).

    Basis is the dual basis ``e_i^v`` of degree ``-|e_i|``.  Memoized per
    algebra, like :meth:`GradedAlgebra.as_bimodule`.
    """
    cached = A.__dict__.get("_dual_bimodule")
    if cached is None:
        cached = A.__dict__["_dual_bimodule"] = _build_dual(A)
    return cached


def _build_dual(A: GradedAlgebra) -> Bimodule:
    n, deg = A.dim, A.degrees
    ddeg = tuple(-d for d in deg)
    left = [[{} for _ in range(n)] for _ in range(n)]
    right = [[{} for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for m in range(n):
            for x in range(n):
                # (a . e_m^v)(e_x) = sign * coeff of e_m in e_x e_a
                c = A.mult[x][a].get(m, 0)
                if c:
                    s = sign(deg[a] * (ddeg[m] + deg[x]))
                    left[a][m][x] = A.field.norm(s * c)
                # (e_m^v . a)(e_x) = coeff of e_m in e_a e_x
                c = A.mult[a][x].get(m, 0)
                if c:
                    right[m][a][x] = c
    return Bimodule(
        A,
        tuple(n_ + "^v" for n_ in A.names),
        ddeg,
        tuple(tuple(r) for r in left),
        tuple(tuple(r) for r in right),
        tag="dual",
        degree_shift=0,
    )


@dataclass(frozen=True, eq=False)
class FrobeniusStructure:
    """Nondegenerate invariant graded-symmetric pairing of degree ``d``.

    ``pairing[i][j] = <e_i, e_j>``, nonzero only when |e_i| + |e_j| = -d.
    """

    algebra: GradedAlgebra
    pairing: tuple
    degree_d: int

    def theta(self, x: dict) -> dict:
        """Theta(x) = <x, ->, as a vector on the dual basis."""
        F = self.algebra.field
        out: dict = {}
        for i, a in x.items():
            for j, p in enumerate(self.pairing[i]):
                if p:
                    out[j] = F.norm(out.get(j, 0) + a * p)
        return {k: v for k, v in out.items() if v}

    def theta_matrix(self) -> SparseMatrix:
        n = self.algebra.dim
        return SparseMatrix.from_columns(self.algebra.field, n, [self.theta({i: 1}) for i in range(n)])

    def scaled(self, lam) -> "FrobeniusStructure":
        F = self.algebra.field
        return FrobeniusStructure(
            self.algebra, tuple(tuple(F.norm(lam * p) for p in row) for row in self.pairing), self.degree_d
        )


def frobenius_from_pairing(A: GradedAlgebra, pairing_matrix, degree_d: int | None = None) -> FrobeniusStructure:
    F, n, deg = A.field, A.dim, A.degrees
    if len(pairing_matrix) != n or any(len(row) != n for row in pairing_matrix):
        raise AlgebraError(f"pairing must be {n}x{n}")
    P = tuple(tuple(F.norm(v) for v in row) for row in pairing_matrix)
    if degree_d is None:
        nz = [(i, j) for i in range(n) for j in range(n) if P[i][j]]
        degree_d = -(deg[nz[0][0]] + deg[nz[0][1]]) if nz else 0
    for i in range(n):
        for j in range(n):
            if P[i][j] and deg[i] + deg[j] != -degree_d:
                raise AlgebraError(
                    f"inhomogeneous pairing at ({A.names[i]}, {A.names[j]})", (A.names[i], A.names[j])
                )
    if rank(F, SparseMatrix.from_dense(F, [list(r) for r in P])) != n:
        raise AlgebraError("degenerate pairing")
    for i in range(n):
        for j in range(n):
            if F.norm(P[i][j] - sign(deg[i] * deg[j]) * P[j][i]):
                raise AlgebraError(f"pairing not symmetric at ({A.names[i]}, {A.names[j]})", (A.names[i], A.names[j]))

    def pair(x: dict, y: dict):
        return F.norm(sum(a * b * P[i][j] for i, a in x.items() for j, b in y.items()))

    for i in range(n):
        for j in range(n):
            for k in range(n):
                if F.norm(pair(A.mult[i][j], {k: 1}) - pair({i: 1}, A.mult[j][k])):
                    raise AlgebraError(
                        f"pairing not invariant at ({A.names[i]}, {A.names[j]}, {A.names[k]})",
                        (A.names[i], A.names[j], A.names[k]),
                    )
    fs = FrobeniusStructure(A, P, degree_d)
    check_theta_bimodule_map(fs)
    return fs


def check_theta_bimodule_map(fs: FrobeniusStructure) -> None:
    """Theta(ab) = (-1)^{d|a|} a.Theta(b) = Theta(a).b on all basis pairs."""
    A = fs.algebra
    D = dual_bimodule(A)
    F = A.field
    for a in range(A.dim):
        for b in range(A.dim):
            lhs = fs.theta(A.mult[a][b])
            via_left = D.act_left({a: 1}, fs.theta({b: 1}))
            via_left = {k: F.norm(sign(fs.degree_d * A.degrees[a]) * v) for k, v in via_left.items()}
            via_right = D.act_right(fs.theta({a: 1}), {b: 1})
            if lhs != via_left or lhs != via_right:
                raise AlgebraError(f"Theta is not a bimodule map at ({A.names[a]}, {A.names[b]})")


def _rebase(A: GradedAlgebra, aug: dict) -> GradedAlgebra:
    """Re-express ``A`` on the basis {1} + {e_i - aug(e_i) 1}."""
    F, n, u = A.field, A.dim, A.unit
    if F.norm(aug.get(u, 0) - 1):
        raise AlgebraError("augmentation must send 1 to 1")
    for i, c in aug.items():
        if c and A.degrees[i] != 0:
            raise AlgebraError(f"augmentation not homogeneous at {A.names[i]}")
    # new basis f_i = e_i - aug_i 1 (i != u), f_u = e_u
    def to_new(v: dict) -> dict:
        # e_i = f_i + aug_i f_u
        out = dict(v)
        for i, c in v.items():
            if i != u and aug.get(i):
                out[u] = F.norm(out.get(u, 0) + c * aug[i])
        return {k: x for k, x in out.items() if x}

    def from_new(i: int) -> dict:
        if i == u or not aug.get(i):
            return {i: 1}
        return {i: 1, u: F.norm(-aug[i])}

    mult = tuple(
        tuple(to_new(A.product(from_new(i), from_new(j))) for j in range(n)) for i in range(n)
    )
    names = tuple(nm if (i == u or not aug.get(i)) else f"{nm}~" for i, nm in enumerate(A.names))
    return GradedAlgebra(F, names, A.degrees, u, mult, A.label)


def load_algebra(presentation) -> tuple[GradedAlgebra, FrobeniusStructure | None]:
    """Parse and validate an algebra presentation.

    ``presentation`` is a path, a JSON string, or an already-decoded dict.
    Products with the unit may be omitted; unlisted products are zero.
    Returns the algebra and, if a ``pairing`` is present, its Frobenius
    structure.
    """
    if isinstance(presentation, Path) or (isinstance(presentation, str) and not presentation.lstrip().startswith("{")):
        data = json.loads(Path(presentation).read_text())
    elif isinstance(presentation, str):
        try:
            data = json.loads(presentation)
        except json.JSONDecodeError as exc:
            raise AlgebraError(f"parse error: {exc}") from exc
    else:
        data = presentation
    try:
        F = GroundField(int(data["field"]["char"]))
        basis = data["basis"]
        names = tuple(str(b["name"]) for b in basis)
        degrees = tuple(int(b.get("degree", 0)) for b in basis)
        unit_name = data["unit"]
    except FieldError as exc:
        raise AlgebraError(str(exc)) from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise AlgebraError(f"parse error: missing or malformed field {exc}") from exc
    if len(set(names)) != len(names):
        raise AlgebraError("duplicate basis names")
    idx = {nm: i for i, nm in enumerate(names)}
    if unit_name not in idx:
        raise AlgebraError(f"unit {unit_name!r} is not a basis element")
    u, n = idx[unit_name], len(names)

    def vec(items, where):
        out: dict = {}
        for item in items:
            try:
                k = idx[item["name"]]
                c = F.parse(item.get("coeff", 1))
            except KeyError as exc:
                raise AlgebraError(f"unknown basis element {exc} in {where}") from exc
            except FieldError as exc:
                raise AlgebraError(f"characteristic mismatch in {where}: {exc}") from exc
            out[k] = F.norm(out.get(k, 0) + c)
        return {k: v for k, v in out.items() if v}

    mult = [[{} for _ in range(n)] for _ in range(n)]
    given = set()
    for p in data.get("products", []):
        try:
            i, j = idx[p["left"]], idx[p["right"]]
        except KeyError as exc:
            raise AlgebraError(f"unknown basis element {exc} in products") from exc
        if (i, j) in given:
            raise AlgebraError(f"product {p['left']}*{p['right']} listed twice")
        given.add((i, j))
        mult[i][j] = vec(p.get("result", []), f"{p['left']}*{p['right']}")
    for i in range(n):
        if (u, i) not in given:
            mult[u][i] = {i: 1}
        if (i, u) not in given:
            mult[i][u] = {i: 1}
    A = GradedAlgebra(F, names, degrees, u, tuple(tuple(r) for r in mult), str(data.get("name", "")))
    A.validate()
    pairing = data.get("pairing")
    if "augmentation" in data:
        aug = vec(data["augmentation"], "augmentation")
        if any(aug.get(i) for i in range(n) if i != u) or aug.get(u) != 1:
            if pairing is not None:
                raise AlgebraError("a custom augmentation cannot be combined with a pairing")
            A = _rebase(A, aug)
            A.validate()
    fs = None
    if pairing is not None:
        try:
            P = [[F.parse(v) for v in row] for row in pairing]
        except (FieldError, TypeError) as exc:
            raise AlgebraError(f"characteristic mismatch in pairing: {exc}") from exc
        fs = frobenius_from_pairing(A, P, data.get("degree_d"))
    return A, fs
