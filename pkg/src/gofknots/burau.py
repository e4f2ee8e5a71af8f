"""Integral 2x2 matrix images of three-strand braids.

The generator images used here send the squared half-twist to minus the
identity, so the matrix determines a braid up to the center and the pair
(matrix, exponent sum) determines it exactly.  The matrix also carries the
first homology of the double branched cover of the braid closure:
|det(M - I)| is the order of that group, with 0 standing for an infinite
group.  All arithmetic is exact over unbounded integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .words import BraidWord, exponent_sum

__all__ = [
    "IDENTITY_MATRIX",
    "SL2Matrix",
    "classify_monodromy",
    "equal_in_b3",
    "homology_order",
    "represent",
    "trace",
]

MonodromyType = Literal["periodic", "reducible", "pseudo-Anosov"]


@dataclass(frozen=True)
class SL2Matrix:
    """A 2x2 integer matrix of determinant one."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant must be 1")

    def __mul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "SL2Matrix":
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY_MATRIX = SL2Matrix(1, 0, 0, 1)

_GENERATOR_IMAGES = {
    1: SL2Matrix(1, 1, 0, 1),
    -1: SL2Matrix(1, -1, 0, 1),
    2: SL2Matrix(1, 0, -1, 1),
    -2: SL2Matrix(1, 0, 1, 1),
}


def represent(w: BraidWord) -> SL2Matrix:
    """Image of a word, letters multiplied left to right."""
    matrix = IDENTITY_MATRIX
    for letter in w.letters:
        matrix = matrix * _GENERATOR_IMAGES[letter]
    return matrix


def trace(w: BraidWord) -> int:
    return represent(w).trace


def homology_order(w: BraidWord) -> int:
    """Order of the first homology of the double branched cover of the
    closure of ``w``; 0 encodes an infinite group."""
    m = represent(w)
    return abs((m.a - 1) * (m.d - 1) - m.b * m.c)


def classify_monodromy(w: BraidWord) -> MonodromyType:
    """Nielsen-Thurston type of the mapping class of ``w`` on the
    once-punctured torus, read off the trace of its homology action."""
    t = abs(trace(w))
    if t > 2:
        return "pseudo-Anosov"
    if t == 2:
        return "reducible"
    return "periodic"


def equal_in_b3(u: BraidWord, v: BraidWord) -> bool:
    """Exact equality of braids.

    The matrix alone misses only central powers, and those shift the
    exponent sum by a nonzero multiple of twelve, so the pair decides
    equality.
    """
    return exponent_sum(u) == exponent_sum(v) and represent(u) == represent(v)
