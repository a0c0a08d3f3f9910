"""Shipped algebra presentations.

``CORPUS`` is the reference set every verification suite runs over;
``EXTRA`` adds larger or less standard examples (odd-degree generators, a
noncommutative symmetric quiver algebra) that exercise signs the corpus
cannot see.
"""

from __future__ import annotations

from pathlib import Path

from ..algebra import AlgebraError, load_algebra

HERE = Path(__file__).parent

CORPUS = (
    "ground_field_f2",
    "ground_field_f3",
    "ground_field_q",
    "dual_numbers_f2",
    "dual_numbers_q",
    "truncated_cubic_q",
    "truncated_cubic_f3",
    "matrices_2x2_f3",
    "sphere2_f2",
    "cp2_q",
)
EXTRA = ("sphere3_q", "sphere3_sq_q", "two_cycle_q")
ALL = CORPUS + EXTRA

ALIASES = {
    "ground_field": "ground_field_q",
    "m2_f3": "matrices_2x2_f3",
    "s2_f2": "sphere2_f2",
    "cp2": "cp2_q",
}


def resolve(name_or_path: str) -> Path:
    """Fixture name, alias, or filesystem path -> path of a JSON file."""
    name = ALIASES.get(name_or_path, name_or_path)
    p = HERE / f"{name}.json"
    if p.exists():
        return p
    p = Path(name_or_path)
    if p.exists():
        return p
    raise AlgebraError(f"no fixture or file named {name_or_path!r} (fixtures: {', '.join(ALL)})")


def load(name_or_path: str):
    return load_algebra(resolve(name_or_path))


def raw(name_or_path: str) -> dict:
    import json

    return json.loads(resolve(name_or_path).read_text())


def named_cochains(name_or_path: str, A) -> dict:
    """Cochains listed under ``named_cochains`` as ``[word, value, coeff]`` terms."""
    from ..hochschild import make_cochain

    out = {}
    for label, terms in raw(name_or_path).get("named_cochains", {}).items():
        values: dict = {}
        for word, value, coeff in terms:
            values.setdefault(tuple(word), {})[value] = coeff
        out[label] = make_cochain(A.as_bimodule(), values)
    return out
