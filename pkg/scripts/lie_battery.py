"""Lie axioms for the bracket on negative cyclic homology over wide windows.

Also counts how often the alternative antisymmetry exponent
(|x|+1-d)(|y|+1-d) disagrees with the computed brackets; the exponent
(|x|-d)(|y|-d) is the one the checks use.

    python3 scripts/lie_battery.py
"""

from bvhh.cyclic import HomologyProduct, MixedComplex, compute_cyclic
from bvhh.verify import BracketTable, FixtureContext, lie_window_checks

WINDOWS = {
    "dual_numbers_q": (-4, 4),
    "truncated_cubic_q": (-4, 4),
    "cp2_q": (-6, 6),
    "sphere2_f2": (-6, 6),
    "sphere3_q": (-4, 8),
    "sphere3_sq_q": (-2, 10),
}


def alternative_exponent_failures(name, lo, hi):
    ctx = FixtureContext(name)
    mixed = MixedComplex(ctx.Cd, "dual")
    g = compute_cyclic(mixed, "negative", list(range(lo, hi + 1)))
    br = BracketTable(g, HomologyProduct(mixed, bv=ctx.bv))
    d, F, bad, total = ctx.bv.d, br.F, 0, 0
    for (n1, c1), (n2, c2) in br.pairs():
        a, b = br(n1, c1, n2, c2), br(n2, c2, n1, c1)
        s = -1 if ((n1 + 1 - d) * (n2 + 1 - d)) % 2 else 1
        total += 1
        bad += a != tuple(F.norm(-s * x) for x in b)
    return bad, total


for name, (lo, hi) in WINDOWS.items():
    for c in lie_window_checks(name, lo, hi):
        print(c.line(), flush=True)
    bad, total = alternative_exponent_failures(name, lo, hi)
    print(f"    alternative exponent: {bad}/{total} pairs disagree", flush=True)
