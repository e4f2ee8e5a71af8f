"""Conjugacy decisions through the central quotient of the braid group.

The quotient of the three-strand braid group by its center is the free
product of cyclic groups of orders two and three.  Its elements have a
unique reduced syllable form over the torsion generators X (order two) and
Y, Y^2 (order three), and two elements of infinite order are conjugate
exactly when their cyclically reduced syllable words agree up to rotation.
Together with the exponent sum, which separates the central powers the
quotient forgets, this decides conjugacy of braids exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .burau import IDENTITY_MATRIX, SL2Matrix, represent
from .words import BraidWord, exponent_sum

__all__ = [
    "FreeProductWord",
    "X",
    "Y",
    "Y2",
    "are_conjugate",
    "cyclic_normal_form",
    "find_conjugator_brute",
    "project",
    "psl_matrix",
]

# Syllables.  The numeric values double as Y-exponents (X carries none) and
# order the alphabet X < Y < Y^2 for canonical rotations.
X, Y, Y2 = 0, 1, 2
_SYLLABLE_NAMES = {X: "X", Y: "Y", Y2: "Y2"}


@dataclass(frozen=True)
class FreeProductWord:
    """A reduced word in Z/2 * Z/3: no two adjacent syllables lie in the
    same free factor.  The empty word is the identity."""

    syllables: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.syllables, tuple):
            object.__setattr__(self, "syllables", tuple(self.syllables))
        for syllable in self.syllables:
            if syllable not in (X, Y, Y2):
                raise ValueError(f"invalid syllable {syllable!r}")
        for left, right in zip(self.syllables, self.syllables[1:]):
            if _same_factor(left, right):
                raise ValueError("word is not reduced")

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(_SYLLABLE_NAMES[s] for s in self.syllables)


def _same_factor(s: int, t: int) -> bool:
    return (s == X) == (t == X)


# Letter images in the quotient.  The relation check: s1 s2 s1 maps to
# (XY)(YX)(XY) = X, the same as s2 s1 s2, and each generator cancels its
# inverse.
_LETTER_IMAGES = {
    1: (X, Y),
    -1: (Y2, X),
    2: (Y, X),
    -2: (X, Y2),
}


def _push(stack: list[int], syllable: int) -> None:
    if not stack:
        stack.append(syllable)
        return
    top = stack[-1]
    if top == X or syllable == X:
        if top == X and syllable == X:
            stack.pop()
        else:
            stack.append(syllable)
        return
    merged = (top + syllable) % 3
    stack.pop()
    if merged:
        stack.append(merged)


def project(w: BraidWord) -> FreeProductWord:
    """Image of a braid word in the central quotient, fully reduced."""
    stack: list[int] = []
    for letter in w.letters:
        for syllable in _LETTER_IMAGES[letter]:
            _push(stack, syllable)
    return FreeProductWord(tuple(stack))


_PSL_IMAGES = {
    X: SL2Matrix(0, -1, 1, 0),
    Y: SL2Matrix(0, -1, 1, 1),
    Y2: SL2Matrix(-1, -1, 1, 0),
}


def psl_matrix(fw: FreeProductWord) -> SL2Matrix:
    """Matrix image of a syllable word; agrees with the braid matrix of any
    preimage up to one global sign."""
    matrix = IDENTITY_MATRIX
    for syllable in fw.syllables:
        matrix = matrix * _PSL_IMAGES[syllable]
    return matrix


def cyclic_normal_form(fw: FreeProductWord) -> FreeProductWord:
    """Canonical representative of the conjugacy class of ``fw``.

    The word is cyclically reduced by merging wrap-around syllables from
    the same factor, then the lexicographically least rotation under
    X < Y < Y^2 is chosen.  Torsion classes (length at most one) compare
    literally; in particular Y and Y^2 stay distinct.
    """
    sylls = list(fw.syllables)
    while len(sylls) >= 2 and _same_factor(sylls[0], sylls[-1]):
        first, last = sylls[0], sylls[-1]
        sylls = sylls[1:-1]
        if first == X:
            continue  # X against X cancels outright
        merged = (first + last) % 3
        if merged:
            sylls.append(merged)
    return FreeProductWord(_least_rotation(sylls))


def _least_rotation(sylls: list[int]) -> tuple[int, ...]:
    if len(sylls) <= 1:
        return tuple(sylls)
    data = bytes(sylls)
    doubled = data + data
    size = len(data)
    return tuple(min(doubled[i:i + size] for i in range(size)))


def are_conjugate(u: BraidWord, v: BraidWord) -> bool:
    """Exact conjugacy decision for three-strand braids.

    Conjugacy in the quotient is rotation of cyclically reduced words; the
    exponent sum then pins down the central factor, because conjugating in
    the braid group cannot absorb a central power.
    """
    if exponent_sum(u) != exponent_sum(v):
        return False
    return cyclic_normal_form(project(u)) == cyclic_normal_form(project(v))


_SEARCH_LETTERS = (1, -1, 2, -2)


def find_conjugator_brute(u: BraidWord, v: BraidWord, max_len: int) -> Optional[BraidWord]:
    """Exhaustive conjugator search, independent of the quotient machinery.

    Words g over the four letters are enumerated in shortlex order
    (letter order a, A, b, B) up to length ``max_len``; the first g with
    g u g^-1 equal to v as a braid is returned, or None.  Intended as a
    validation oracle for :func:`are_conjugate`.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    if exponent_sum(u) != exponent_sum(v):
        return None  # conjugation preserves the exponent sum
    source = represent(u)
    target = represent(v)
    images = {letter: represent(BraidWord((letter,))) for letter in _SEARCH_LETTERS}

    # g u g^-1 = v exactly when G A = V G: the exponent sums already match,
    # so the matrix test is equivalent to equality in the braid group.
    def search(prefix: tuple[int, ...], matrix: SL2Matrix, remaining: int) -> Optional[tuple[int, ...]]:
        if remaining == 0:
            return prefix if matrix * source == target * matrix else None
        for letter in _SEARCH_LETTERS:
            found = search(prefix + (letter,), matrix * images[letter], remaining - 1)
            if found is not None:
                return found
        return None

    for length in range(max_len + 1):
        found = search((), IDENTITY_MATRIX, length)
        if found is not None:
            return BraidWord(found)
    return None
