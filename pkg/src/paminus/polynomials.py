"""Integer polynomials restricted to the positive cone of Z[x].

The cone consists of the zero polynomial and every polynomial whose leading
coefficient is positive; under the eventual-dominance order (p < q iff
q - p has positive leading coefficient) these are exactly the nonnegative
elements, x exceeds every constant, and the cone is closed under + and *.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class ConeError(ValueError):
    """The coefficients describe a polynomial outside the positive cone."""


def _strip(cs) -> tuple[int, ...]:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def add_coeffs(a, b) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _strip(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def sub_coeffs(a, b) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _strip(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
    )


def mul_coeffs(a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _strip(out)


@dataclass(frozen=True)
class PolyElement:
    """A cone element; ``coeffs[i]`` is the coefficient of x**i.

    Trailing zeros are stripped on construction; the zero polynomial has
    no coefficients at all.  Construction rejects anything with a negative
    leading coefficient, so every PolyElement really is >= 0.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = _strip(int(c) for c in self.coeffs)
        if cs and cs[-1] < 0:
            raise ConeError(f"leading coefficient {cs[-1]} < 0: not in the cone")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def constant(cls, value: int) -> "PolyElement":
        return cls((value,))

    @classmethod
    def generator(cls) -> "PolyElement":
        """The indeterminate x, the canonical nonstandard element."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_value(self) -> int | None:
        """The integer value if degree <= 0, else None."""
        if len(self.coeffs) > 1:
            return None
        return self.coeffs[0] if self.coeffs else 0

    def __add__(self, other: "PolyElement") -> "PolyElement":
        return PolyElement(add_coeffs(self.coeffs, other.coeffs))

    def __mul__(self, other: "PolyElement") -> "PolyElement":
        return PolyElement(mul_coeffs(self.coeffs, other.coeffs))

    def to_text(self) -> str:
        """Exact decimal form ``[c0, c1, ..., cd]``; zero prints as ``[0]``."""
        if not self.coeffs:
            return "[0]"
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    @classmethod
    def from_text(cls, text: str) -> "PolyElement":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(f"bad polynomial literal: {e}") from None
        if not isinstance(data, list) or not all(type(c) is int for c in data):
            raise ValueError(f"bad polynomial literal {text!r}: need a list of integers")
        return cls(tuple(data))

    def __str__(self) -> str:
        return self.to_text()


def compare_cone(a: PolyElement, b: PolyElement) -> int:
    """-1, 0, or 1 as a < b, a = b, a > b in the eventual-dominance order."""
    diff = sub_coeffs(b.coeffs, a.coeffs)
    if not diff:
        return 0
    return -1 if diff[-1] > 0 else 1


def subtract_cone(a: PolyElement, b: PolyElement) -> PolyElement:
    """a - b, defined only when the difference stays in the cone."""
    return PolyElement(sub_coeffs(a.coeffs, b.coeffs))


def divides_in_poly(m: int, p: PolyElement) -> PolyElement | None:
    """The quotient q with p = m*q, present iff m divides every coefficient.

    The quotient is automatically a cone element.  This is the decision
    procedure behind the failure of "some of n..n+k is a multiple of 2" in
    the polynomial model: x itself has no coefficientwise half.
    """
    if m < 1:
        raise ValueError(f"divisor must be >= 1, got {m}")
    if any(c % m for c in p.coeffs):
        return None
    return PolyElement(tuple(c // m for c in p.coeffs))
