"""Exact scalar arithmetic over a prime field GF(p) or the rationals.

Scalars are plain Python objects: ``int`` in ``range(p)`` for GF(p), and
``int``/``Fraction`` for Q.  Code elsewhere combines scalars with the usual
operators and passes the result through :meth:`GroundField.norm`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


@dataclass(frozen=True)
class GroundField:
    """GF(p) for ``char = p`` prime, Q for ``char = 0``."""

    char: int

    def __post_init__(self):
        if self.char != 0 and not _is_prime(self.char):
            raise FieldError(f"characteristic must be 0 or prime, got {self.char}")

    @property
    def name(self) -> str:
        return "Q" if self.char == 0 else f"F{self.char}"

    def norm(self, x):
        if self.char:
            return x % self.char
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.char:
            return pow(x, -1, self.char)
        return Fraction(1) / x

    def parse(self, raw):
        """Read a scalar from JSON: an int, or a string ``"p/q"`` / ``"n"``."""
        if isinstance(raw, bool):
            raise FieldError(f"not a scalar: {raw!r}")
        if isinstance(raw, int):
            value = Fraction(raw)
        elif isinstance(raw, str):
            try:
                value = Fraction(raw.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError(f"not a scalar: {raw!r}") from exc
        else:
            raise FieldError(f"not a scalar: {raw!r}")
        if self.char:
            if value.denominator % self.char == 0:
                raise FieldError(f"{raw!r} has denominator divisible by {self.char}")
            return (value.numerator * pow(value.denominator, -1, self.char)) % self.char
        return self.norm(value)

    def dump(self, x):
        """Inverse of :meth:`parse`: ints stay ints, fractions become ``"p/q"``."""
        x = self.norm(x)
        if isinstance(x, Fraction):
            return f"{x.numerator}/{x.denominator}"
        return int(x)

    def show(self, x) -> str:
        x = self.norm(x)
        if self.char and x > self.char // 2:
            return str(x - self.char)
        return str(x)
