"""Standalone HH^n dimensions of an ungraded finite-dimensional algebra.

Deliberately shares no code with the package: it reads the JSON presentation
itself, uses the *unnormalized* cochain complex Hom(A^{(x)n}, A), and does its
own elimination (Fractions over Q, plain ints mod p).  Its output is frozen
into tests/test_oracles.py.

    python3 scripts/hh_oracle.py src/bvhh/fixtures/dual_numbers_q.json 4
"""

import itertools
import json
import sys
from fractions import Fraction


def load(path):
    d = json.load(open(path))
    p = d["field"]["char"]
    names = [b["name"] for b in d["basis"]]
    if any(b.get("degree", 0) for b in d["basis"]):
        raise SystemExit("oracle handles ungraded algebras only")
    k = len(names)
    idx = {n: i for i, n in enumerate(names)}
    u = idx[d["unit"]]
    conv = (lambda c: Fraction(str(c))) if p == 0 else (lambda c: int(Fraction(str(c)).numerator * pow(Fraction(str(c)).denominator, -1, p)) % p)
    mult = [[[0] * k for _ in range(k)] for _ in range(k)]
    for i in range(k):
        mult[u][i][i] = conv(1)
        mult[i][u][i] = conv(1)
    for e in d["products"]:
        row = [0] * k
        for t in e["result"]:
            row[idx[t["name"]]] = conv(t["coeff"])
        mult[idx[e["left"]]][idx[e["right"]]] = row
    return p, k, mult


def coboundary(p, k, mult, n):
    """Rows of d: C^n -> C^{n+1}.  C^n has basis (word, t), column index word*k + t;
    a row is indexed by (word', s), the e_s coefficient of (df)(word')."""
    cols = {w: i for i, w in enumerate(itertools.product(range(k), repeat=n))}
    out = []
    for w in itertools.product(range(k), repeat=n + 1):
        rows = [dict() for _ in range(k)]

        def put(s, col, v):
            rows[s][col] = rows[s].get(col, 0) + v

        for t in range(k):
            for s, v in enumerate(mult[w[0]][t]):  # w_0 f(w_1..w_n)
                if v:
                    put(s, cols[w[1:]] * k + t, v)
            for s, v in enumerate(mult[t][w[-1]]):  # f(w_0..w_{n-1}) w_n
                if v:
                    put(s, cols[w[:-1]] * k + t, (-1) ** (n + 1) * v)
        for i in range(n):
            for s2, v in enumerate(mult[w[i]][w[i + 1]]):
                if v:
                    c = cols[w[:i] + (s2,) + w[i + 2:]]
                    for t in range(k):
                        put(t, c * k + t, (-1) ** (i + 1) * v)
        for row in rows:
            row = {c: (v % p if p else v) for c, v in row.items()}
            row = {c: v for c, v in row.items() if v}
            if row:
                out.append(row)
    return out


def rank(p, rows):
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c not in pivots:
                inv = pow(row[c], -1, p) if p else 1 / row[c]
                pivots[c] = {j: (v * inv) % p if p else v * inv for j, v in row.items()}
                break
            piv, f = pivots[c], row[c]
            for j, v in piv.items():
                x = row.get(j, 0) - f * v
                x = x % p if p else x
                if x:
                    row[j] = x
                else:
                    row.pop(j, None)
    return len(pivots)


def hh_dims(path, N):
    p, k, mult = load(path)
    ranks = [0] + [rank(p, coboundary(p, k, mult, n)) for n in range(N + 1)]
    return [k ** (n + 1) - ranks[n + 1] - ranks[n] for n in range(N + 1)]


if __name__ == "__main__":
    print(hh_dims(sys.argv[1], int(sys.argv[2])))
