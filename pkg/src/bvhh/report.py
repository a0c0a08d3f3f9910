"""Report documents for the command-line front end.

Every builder returns a plain dict with stable key names (``schema_version``
first), so the structured output can be diffed between runs; ``render``
turns the same dict into an aligned text table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import fixtures
from .algebra import dual_bimodule
from .bv import BVStructure, fundamental_cocycle
from .cyclic import HomologyProduct, MixedComplex, compute_cyclic, connes_exact_maps
from .hochschild import ChainComplex, CochainComplex, compute_HH, format_cochain, make_chain
from .verify import (
    JOINT_BUDGET,
    BracketTable,
    VerifyConfig,
    cyclic_degree_order,
    joint_size,
    lie_axiom_checks,
    run,
)

SCHEMA_VERSION = 1


class InputError(ValueError):
    """Bad command-line input (exit code 3)."""


@dataclass
class JobConfig:
    command: str
    algebra: str
    coeff: str = "self"
    max_degree: int = 4
    word_cutoff: int | None = None
    u_trunc: int | None = None
    variant: str = "negative"
    suite: str = "all"
    trials: int = 100
    seed: int = 0
    cache_dir: str | None = None
    format: str = "table"

    def __post_init__(self):
        if not 0 <= self.max_degree <= 40:
            raise InputError(f"--max-degree must be in 0..40, got {self.max_degree}")
        if self.coeff not in ("self", "dual"):
            raise InputError(f"--coeff must be self or dual, got {self.coeff!r}")
        if self.variant not in ("cyclic", "negative", "periodic"):
            raise InputError(f"--variant must be cyclic, negative or periodic, got {self.variant!r}")
        if self.u_trunc is not None and self.u_trunc < 0:
            raise InputError("--u-trunc must be >= 0")


def _dense(F, M) -> list:
    return [[F.dump(x) for x in row] for row in M.to_dense(F)]


def _coords(F, c) -> list:
    return [F.dump(x) for x in c]


def algebra_header(A, source: str) -> dict:
    return {
        "source": source,
        "label": A.label,
        "field": A.field.name,
        "dim": A.dim,
        "graded": not A.is_ungraded,
        "basis": [{"name": n, "degree": d} for n, d in zip(A.names, A.degrees)],
    }


def cochain_window(A, N: int) -> list:
    """HH^0..HH^N (lower 0..-N) when ungraded, lower -N..N otherwise."""
    return list(range(0, -N - 1, -1)) if A.is_ungraded else list(range(-N, N + 1))


# ---------------------------------------------------------------- hh


def hh_report(job: JobConfig) -> dict:
    A, _ = fixtures.load(job.algebra)
    M = A.as_bimodule() if job.coeff == "self" else dual_bimodule(A)
    C = CochainComplex(A, M, job.word_cutoff, job.cache_dir)
    degrees = cochain_window(A, job.max_degree)
    rows = []
    for r in compute_HH(A, M, degrees, job.word_cutoff, complex_=C):
        rows.append(
            {
                "lower_degree": r.degree,
                "cohomological_degree": r.cohomological_degree,
                "dim": r.dim,
                "truncated": r.truncated,
                "representatives": [format_cochain(x) for x in r.reps],
            }
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "hh",
        "algebra": algebra_header(A, job.algebra),
        "coefficients": job.coeff,
        "word_cutoff": job.word_cutoff,
        "degrees": rows,
        "dims": [r["dim"] for r in rows],
        "failures": 0,
    }


# ---------------------------------------------------------------- bv


def bv_report(job: JobConfig) -> dict:
    A, fs = fixtures.load(job.algebra)
    if fs is None:
        raise InputError(f"{job.algebra}: the bv command needs a 'pairing' in the algebra file")
    F = A.field
    fc = fundamental_cocycle(fs)
    bv = BVStructure(fc, job.word_cutoff, job.cache_dir)
    degrees = cochain_window(A, job.max_degree)
    W = set(degrees)
    rows = []
    for n in degrees:
        rows.append(
            {
                "lower_degree": n,
                "cohomological_degree": -n,
                "dual_lower_degree": n + bv.d,
                "dim": bv.dim(n),
                "representatives": [format_cochain(x) for x in bv.C.reps(n)],
                "duality_matrix": _dense(F, bv.duality_matrix(n)),
                "duality_invertible": bv.duality_invertible(n),
                "delta_matrix": _dense(F, bv.delta_matrix(n)) if bv.duality_invertible(n + 1) else None,
            }
        )
    gens = [(n, k, r) for n in degrees for k, r in enumerate(bv.C.reps(n))]
    brackets = []
    from .hochschild import gerstenhaber_bracket

    for (p, i, a), (q, j, b) in ((x, y) for x in gens for y in gens):
        if p + q + 1 in W:
            c = bv.coords(_deg(gerstenhaber_bracket(a, b), p + q + 1))
            brackets.append({"left": [p, i], "right": [q, j], "degree": p + q + 1, "coords": _coords(F, c)})
    named = {}
    for label, x in fixtures.named_cochains(job.algebra, A).items():
        named[label] = {
            "cochain": format_cochain(x),
            "degree": x.degree,
            "coords": _coords(F, bv.coords(x)),
            "delta": _coords(F, bv.delta(x)),
        }
    named_brackets = []
    nc = fixtures.named_cochains(job.algebra, A)
    for l1, x in nc.items():
        for l2, y in nc.items():
            n = x.degree + y.degree + 1
            named_brackets.append(
                {"left": l1, "right": l2, "degree": n, "coords": _coords(F, bv.coords(_deg(gerstenhaber_bracket(x, y), n)))}
            )
    cfg = VerifyConfig(
        suites=("bv", "gerstenhaber", "calculus"),
        fixtures=(job.algebra,),
        trials=job.trials,
        seed=job.seed,
        radius=job.max_degree,
        cache_dir=job.cache_dir,
        cutoff=job.word_cutoff,
    )
    checks = [_check_dict(c) for c in run(cfg)]
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "bv",
        "algebra": algebra_header(A, job.algebra),
        "fundamental_class": {"cocycle": format_cochain(fc.cocycle), "degree_d": fc.degree, "b_dual_exact": fc.b_dual_exact},
        "degrees": rows,
        "delta_of_unit": _coords(F, bv.delta_one()),
        "bracket_table": brackets,
        "named_classes": named,
        "named_brackets": named_brackets,
        "checks": checks,
        "failures": sum(1 for c in checks if c["status"] == "FAIL"),
    }


def _deg(x, n):
    from .hochschild import Cochain

    return Cochain(x.module, n, dict(x.terms))


def _check_dict(c) -> dict:
    status = "PASS" if c.ok else ("WARN" if c.info else "FAIL")
    out = {"suite": c.suite, "fixture": c.fixture, "name": c.name, "status": status, "detail": c.detail}
    if c.witness:
        out["witness"] = c.witness
    return out


# ---------------------------------------------------------------- cyclic


def cyclic_report(job: JobConfig) -> dict:
    A, fs = fixtures.load(job.algebra)
    F = A.field
    N = job.max_degree
    if job.variant == "negative":
        bv = BVStructure(fundamental_cocycle(fs), job.word_cutoff, job.cache_dir) if fs is not None else None
        complex_ = bv.Cd if bv is not None else CochainComplex(A, dual_bimodule(A), job.word_cutoff, job.cache_dir)
        mixed = MixedComplex(complex_, "dual")
    else:
        bv = None
        mixed = MixedComplex(ChainComplex(A, job.word_cutoff, job.cache_dir), "chains")
    lo = 0 if (A.is_ungraded and mixed.kind == "chains") else -N
    degrees = sorted(cyclic_degree_order(lo, N))
    groups = compute_cyclic(mixed, job.variant, degrees, U=job.u_trunc)
    rows = [
        {
            "degree": n,
            "dim": c.dim,
            "U": c.U,
            "stabilized": c.stable,
            "dims_by_U": {str(u): d for u, d in c.dims_by_U.items()},
        }
        for n, c in sorted(groups.by_degree.items())
    ]
    checks = []
    joints = []
    if job.variant != "periodic":
        for n in degrees:
            for U in (1, 2):
                size = joint_size(mixed, n, U)
                if size == 0 or size > JOINT_BUDGET:
                    continue
                e = connes_exact_maps(mixed, n, U)
                joints.append({"degree": n, "U": U, "exact": dict(sorted(e.exact.items()))})
        bad = [j for j in joints if not all(j["exact"].values())]
        checks.append(
            {
                "suite": "cyclic",
                "fixture": job.algebra,
                "name": "Connes sequence exact",
                "status": "FAIL" if bad else "PASS",
                "detail": f"{len(joints)} joints",
                **({"witness": str(bad[0])} if bad else {}),
            }
        )
    prod, bracket_note = _bracket_product(job, A, mixed, bv, degrees)
    table = []
    if prod is not None:
        br = BracketTable(groups, prod)
        for (n1, c1), (n2, c2) in br.pairs():
            table.append(
                {"left": [n1, list(c1).index(1)], "right": [n2, list(c2).index(1)], "degree": n1 + n2 + br.k, "coords": _coords(F, br(n1, c1, n2, c2))}
            )
        checks.extend(_check_dict(c) for c in lie_axiom_checks(groups, prod, "cyclic", job.algebra))
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "cyclic",
        "algebra": algebra_header(A, job.algebra),
        "variant": job.variant,
        "mixed_complex": "C*(A;A^v)" if mixed.kind == "dual" else "C_*(A;A)",
        "u_trunc": job.u_trunc,
        "degrees": rows,
        "dims": [r["dim"] for r in rows],
        "all_stabilized": all(r["stabilized"] for r in rows),
        "exact_sequence": joints,
        "bracket": {"lower_degree": (2 - prod.shift) if prod else None, "note": bracket_note, "table": table},
        "checks": checks,
        "failures": sum(1 for c in checks if c["status"] == "FAIL"),
    }


def _bracket_product(job, A, mixed, bv, degrees):
    if job.variant == "periodic":
        return None, "no bracket on the periodic variant"
    if mixed.kind == "dual":
        if bv is None:
            return None, "no pairing: the BV hypothesis cannot be checked"
        prod = HomologyProduct(mixed, bv=bv)
        span = range(min(degrees) - abs(bv.d), max(degrees) + abs(bv.d) + 1)
        if not prod.hypothesis_holds(span):
            return None, "duality with the fundamental class is not invertible on the window"
        return prod, f"lower degree {2 - bv.d}, product transported through a -> a.m"
    c = make_chain(A, {(A.unit, ()): 1})
    prod = HomologyProduct(mixed, cycle=c)
    span = range(min(degrees) - 2, max(degrees) + 3)
    try:
        ok = prod.hypothesis_holds(span)
    except Exception:  # noqa: BLE001 - any failure here just means "no duality"
        ok = False
    if not ok:
        return None, "a -> i_a(1[]) is not an isomorphism HH^* -> HH_*: no degree-2 bracket"
    return prod, "lower degree 2, product transported through a -> i_a(1[])"


# ---------------------------------------------------------------- verify


def verify_report(job: JobConfig, suites: tuple, fixture_names: tuple) -> dict:
    cfg = VerifyConfig(
        suites=suites,
        fixtures=fixture_names,
        trials=job.trials,
        seed=job.seed,
        cache_dir=job.cache_dir,
        cutoff=job.word_cutoff,
    )
    checks = [_check_dict(c) for c in run(cfg)]
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "suites": list(suites),
        "fixtures": list(fixture_names),
        "seed": job.seed,
        "trials": job.trials,
        "checks": checks,
        "failures": sum(1 for c in checks if c["status"] == "FAIL"),
    }


# ---------------------------------------------------------------- rendering


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=False, default=str) + "\n"


def render(doc: dict) -> str:
    out = [f"schema_version: {doc['schema_version']}", f"command: {doc['command']}"]
    if "algebra" in doc:
        a = doc["algebra"]
        basis = ", ".join(f"{b['name']}({b['degree']})" for b in a["basis"])
        out.append(f"algebra: {a['label'] or a['source']} over {a['field']}, dim {a['dim']}, basis {basis}")
    cmd = doc["command"]
    if cmd == "hh":
        out.append(f"coefficients: {doc['coefficients']}")
        out.append(f"{'HH^p':>6} {'lower':>6} {'dim':>5}  representatives")
        for r in doc["degrees"]:
            reps = "; ".join(r["representatives"]) or "-"
            flag = " (truncated)" if r["truncated"] else ""
            out.append(f"{r['cohomological_degree']:>6} {r['lower_degree']:>6} {r['dim']:>5}  {reps}{flag}")
        out.append(f"dims: {doc['dims']}")
    elif cmd == "bv":
        fc = doc["fundamental_class"]
        out.append(f"fundamental class: m = {fc['cocycle']} (degree d = {fc['degree_d']}, B^v[m] = 0: {fc['b_dual_exact']})")
        out.append(f"{'HH^p':>6} {'lower':>6} {'dim':>5}  duality   Delta")
        for r in doc["degrees"]:
            inv = "iso" if r["duality_invertible"] else "NOT iso"
            out.append(f"{r['cohomological_degree']:>6} {r['lower_degree']:>6} {r['dim']:>5}  {inv:<8}  {r['delta_matrix']}")
        out.append(f"Delta(1) = {doc['delta_of_unit']}")
        for label, v in doc["named_classes"].items():
            out.append(f"{label} = {v['cochain']}: class {v['coords']}, Delta({label}) = {v['delta']}")
        for b in doc["named_brackets"]:
            out.append(f"{{{b['left']},{b['right']}}} = {b['coords']} in degree {b['degree']}")
        nz = [b for b in doc["bracket_table"] if any(b["coords"])]
        out.append(f"bracket table: {len(doc['bracket_table'])} generator pairs, {len(nz)} nonzero")
        for b in nz[:40]:
            out.append(f"  {{g{b['left']}, g{b['right']}}} = {b['coords']}")
    elif cmd == "cyclic":
        out.append(f"variant: {doc['variant']} on {doc['mixed_complex']}")
        out.append(f"{'degree':>6} {'dim':>5}  stabilized")
        for r in doc["degrees"]:
            st = f"yes ({r['U']})" if r["stabilized"] else f"no ({r['U']}; lower bound; dims by U {r['dims_by_U']})"
            out.append(f"{r['degree']:>6} {r['dim']:>5}  {st}")
        out.append(f"dims: {doc['dims']}")
        out.append(f"bracket: {doc['bracket']['note']}")
        for b in doc["bracket"]["table"]:
            if any(b["coords"]):
                out.append(f"  {{x{b['left']}, x{b['right']}}} = {b['coords']} in degree {b['degree']}")
    if "checks" in doc:
        for c in doc["checks"]:
            line = f"{c['status']} {c['suite']}/{c['fixture']}/{c['name']}"
            if c["detail"]:
                line += f" ({c['detail']})"
            out.append(line)
            if "witness" in c:
                out.append(f"    witness: {c['witness']}")
        out.append(f"failures: {doc['failures']}")
    return "\n".join(out) + "\n"
