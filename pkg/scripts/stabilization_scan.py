"""Negative cyclic homology dims as a function of the u-truncation U.

For each fixture and degree, prints dim H_n(T_U) for U = 0..U_max+1 and
whether the sequence settled by U_max.  A dim that keeps growing by one per
step is a trivial summand of the Tor product drifting in from u^U.

    python3 scripts/stabilization_scan.py [fixture ...] [--radius 4] [--U-max 4]

With --images, an unstable degree also gets the ranks of the maps
H_n(T^U) -> H_n(T^V) induced by inclusion; ranks that keep growing with U
mean the colimit H_n(T) is infinite-dimensional, not merely slow.
"""

import argparse
import time

from bvhh import fixtures
from bvhh.cyclic import MixedComplex, TorComplex, compute_cyclic
from bvhh.linalg import SparseMatrix, rank
from bvhh.verify import FixtureContext, cyclic_degree_order

ap = argparse.ArgumentParser()
ap.add_argument("names", nargs="*", default=list(fixtures.ALL))
ap.add_argument("--radius", type=int, default=4)
ap.add_argument("--U-max", type=int, default=4)
ap.add_argument("--images", action="store_true")
args = ap.parse_args()


def image_ranks(mixed, n, V):
    """rank of H_n(T^U) -> H_n(T^V) for U < V."""
    top = TorComplex(mixed, V)
    Htop = top.homology(n)
    out = []
    for U in range(V):
        T = TorComplex(mixed, U)
        cols = []
        for r in T.homology(n).homology_reps:
            v = top.embed(n, {j: T.block(n, r, j) for j, _, _ in T.layout(n)})
            cols.append({i: c for i, c in enumerate(Htop.coords(v)) if c})
        out.append(rank(mixed.F, SparseMatrix.from_columns(mixed.F, Htop.dim, cols)))
    return out

for name in args.names:
    ctx = FixtureContext(name)
    mixed = MixedComplex(ctx.Cd, "dual")
    t = time.time()
    unstable = []
    for n in cyclic_degree_order(-args.radius, args.radius):
        c = compute_cyclic(mixed, "negative", [n], U_max=args.U_max).by_degree[n]
        tag = f"stable at U={c.U}" if c.stable else "NOT stable"
        print(f"{name:>20} n={n:>3}  dim={c.dim:>3}  {tag:<14} {c.dims_by_U}", flush=True)
        if not c.stable:
            unstable.append(n)
            if args.images:
                for V in range(1, args.U_max + 2):
                    print(f"{'':>20} ranks into U={V} from U=0..{V - 1}: {image_ranks(mixed, n, V)}", flush=True)
            break  # a larger window only repeats the same drift
    print(f"{name:>20} {'unstable at ' + str(unstable) if unstable else 'all stable'}  ({time.time() - t:.1f}s)")
