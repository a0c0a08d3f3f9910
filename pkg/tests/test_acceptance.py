"""The eight acceptance criteria, one test each.

Each test records a single PASS/FAIL line; the lines are printed together
in the terminal summary (see conftest.py).  Run just these with

    pytest tests/test_acceptance.py -v
"""

import functools
import time

from bvhh import fixtures
from bvhh.bv import BVStructure, fundamental_cocycle
from bvhh.hochschild import CochainComplex, gerstenhaber_bracket, unit_cochain
from bvhh.report import cochain_window
from bvhh.verify import (
    MUTATION_FLAGS,
    VerifyConfig,
    lie_window_checks,
    mutation_witness,
    run,
)

ALL = fixtures.ALL
RESULTS: dict = {}

# graded fixtures whose brackets are nonzero only outside -4..4
WIDE_LIE_WINDOWS = {"sphere3_sq_q": (-2, 10)}


def record(k: int, ok: bool, detail: str):
    RESULTS[k] = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"
    assert ok, RESULTS[k]


@functools.lru_cache(maxsize=None)
def suite(name: str) -> tuple:
    return tuple(run(VerifyConfig(suites=(name,), fixtures=ALL)))


def summarize(checks) -> tuple:
    failed = [c for c in checks if c.failed]
    return not failed, failed


def test_criterion_1_differentials():
    t = time.time()
    checks = suite("differentials")
    dt = time.time() - t
    ok, failed = summarize(checks)
    ok = ok and dt < 60
    detail = f"{len(checks)} slice checks over {len(ALL)} fixtures in {dt:.1f}s"
    if failed:
        detail += f"; first failure {failed[0].line()}"
    record(1, ok, detail)


def test_criterion_2_dimension_tables():
    want = {
        "dual_numbers_f2": [2] * 7,
        "dual_numbers_q": [2, 1, 1, 1, 1],
        "matrices_2x2_f3": [1, 0, 0, 0],
        "ground_field_q": [1, 0, 0, 0, 0, 0, 0],
        "ground_field_f2": [1, 0, 0, 0, 0, 0, 0],
        "ground_field_f3": [1, 0, 0, 0, 0, 0, 0],
    }
    bad = {}
    for name, dims in want.items():
        A, _ = fixtures.load(name)
        got = CochainComplex(A, A.as_bimodule()).dims(cochain_window(A, len(dims) - 1))
        if got != dims:
            bad[name] = got
    record(2, not bad, f"{len(want)} tables match" if not bad else f"mismatch {bad}")


def test_criterion_3_gerstenhaber():
    checks = suite("gerstenhaber")
    ok, failed = summarize(checks)
    record(3, ok, f"{len(checks)} checks" + (f"; {failed[0].line()}" if failed else ""))


def test_criterion_4_bv():
    checks = [c for c in suite("bv") if "module map" not in c.name]
    ok, failed = summarize(checks)
    A, fs = fixtures.load("dual_numbers_f2")
    bv = BVStructure(fundamental_cocycle(fs))
    named = fixtures.named_cochains("dual_numbers_f2", A)
    xi, eta = named["xi"], named["eta"]
    one = bv.coords(unit_cochain(A))
    hand = {
        "Delta(eta)=1": bv.delta(eta) == one,
        "Delta(xi)=0": not any(bv.delta(xi)),
        "{xi,eta}=xi": bv.coords(gerstenhaber_bracket(xi, eta)) == bv.coords(xi),
        "BV relation on (xi,eta)": bv.bv_relation(xi, eta).holds,
    }
    ok = ok and all(hand.values())
    detail = f"{len(checks)} checks; F2[x]/x^2 oracles " + ", ".join(k for k, v in hand.items() if v)
    if failed:
        detail += f"; {failed[0].line()}"
    record(4, ok, detail)


def test_criterion_5_calculus():
    checks = suite("calculus")
    ok, failed = summarize(checks)
    record(5, ok, f"{len(checks)} lemma checks x 100 seeded triples" + (f"; {failed[0].line()}" if failed else ""))


def test_criterion_6_module_map():
    checks = [c for c in suite("bv") if "module map" in c.name]
    ok, failed = summarize(checks)
    record(6, ok and len(checks) > 0, f"{len(checks)} fixtures" + (f"; {failed[0].line()}" if failed else ""))


def test_criterion_7_cyclic():
    checks = suite("cyclic")
    parts = {}
    field = [c for c in checks if c.name == "HC of the ground field"]
    parts["HC(F)"] = bool(field) and all(c.ok for c in field)
    exact = [c for c in checks if c.name == "Connes sequence exact"]
    parts["exact sequence"] = all(c.ok for c in exact)
    lie = [c for c in checks if c.name.startswith("Lie")]
    for name, (lo, hi) in WIDE_LIE_WINDOWS.items():
        lie += lie_window_checks(name, lo, hi)
    parts["Lie axioms"] = all(c.ok for c in lie)
    # the suite reports stabilization as information only; here it is asserted
    unstable = [f"{c.fixture} {c.detail}: {c.witness}" for c in checks if c.name.startswith("negative cyclic stable") and not c.ok]
    parts["stabilization U<=4"] = not unstable
    detail = "; ".join(f"{k} {'ok' if v else 'FAILED'}" for k, v in parts.items())
    detail += f" ({len(exact)} exactness checks, {len(lie)} Lie checks)"
    if unstable:
        detail += "; unstable: " + " | ".join(unstable)
    record(7, all(parts.values()), detail)


def test_criterion_8_mutations():
    caught = {f: mutation_witness(f) for f in MUTATION_FLAGS}
    missed = [f for f, c in caught.items() if c is None]
    detail = "; ".join(f"{f} -> {c.suite}/{c.fixture}/{c.name}" for f, c in caught.items() if c)
    record(8, not missed, detail + (f"; NOT caught: {missed}" if missed else ""))
