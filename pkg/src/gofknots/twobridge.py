"""Two-bridge link normal forms, lens spaces, and braid-index criteria.

A two-bridge link is written b(alpha, beta) with coprime parameters; the
unoriented link type depends only on alpha and the class of beta up to
inversion mod alpha, so forms are stored with the canonical representative
min(beta, beta^-1) mod alpha.  The double branched cover of b(alpha, beta)
is the lens space L(alpha, beta), which gets the same canonicalization.
Conway tuples are evaluated as exact continued fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

__all__ = [
    "ConwayTuple",
    "DegenerateNotationError",
    "LensSpace",
    "NotTwoBridgeLinkError",
    "TwoBridgeForm",
    "fraction_from_conway",
    "lens_equiv",
    "lens_space",
    "lens_space_of",
    "mirror_two_bridge",
    "murasugi_braid_index",
    "normalize_two_bridge",
    "stoimenow_form",
    "two_bridge_equiv",
]

ConwayTuple = tuple[int, ...]


class DegenerateNotationError(ValueError):
    """A Conway tuple hits a division by zero during evaluation."""


class NotTwoBridgeLinkError(ValueError):
    """The parameters name the unlink class, which has no normal form here."""


def fraction_from_conway(entries: ConwayTuple) -> tuple[int, int]:
    """Evaluate a Conway tuple as the continued fraction
    a1 + 1/(a2 + 1/(... + 1/am)), right to left and exactly.

    Returns a coprime (numerator, denominator) pair, signs arranged so the
    numerator is nonnegative.
    """
    if not entries:
        raise ValueError("Conway tuple must be nonempty")
    value = Fraction(entries[-1])
    for entry in reversed(entries[:-1]):
        if value == 0:
            raise DegenerateNotationError(f"division by zero while evaluating {entries!r}")
        value = entry + 1 / value
    numerator, denominator = value.numerator, value.denominator
    if numerator < 0:
        numerator, denominator = -numerator, -denominator
    return numerator, denominator


def _canonical_residue(alpha: int, beta: int) -> int:
    """min(beta, beta^-1) mod alpha for alpha >= 1; alpha = 1 gives 0."""
    if alpha == 1:
        return 0
    residue = beta % alpha
    return min(residue, pow(residue, -1, alpha))


@dataclass(frozen=True)
class TwoBridgeForm:
    """Canonical parameters of an unoriented two-bridge link.

    alpha >= 1; alpha = 1 is the unknot.  beta_canonical is the least of
    beta and its inverse mod alpha.
    """

    alpha: int
    beta_canonical: int

    def __post_init__(self) -> None:
        if self.alpha < 1:
            raise ValueError("alpha must be at least 1")
        if not 0 <= self.beta_canonical < max(self.alpha, 1):
            raise ValueError("beta_canonical out of range")
        if self.alpha == 1:
            if self.beta_canonical != 0:
                raise ValueError("alpha = 1 forces beta_canonical = 0")
            return
        if math.gcd(self.alpha, self.beta_canonical) != 1:
            raise ValueError("parameters must be coprime")
        if self.beta_canonical != _canonical_residue(self.alpha, self.beta_canonical):
            raise ValueError("beta_canonical is not canonical")

    def __str__(self) -> str:
        return f"b({self.alpha},{self.beta_canonical})"


def normalize_two_bridge(alpha: int, beta: int) -> TwoBridgeForm:
    """Canonical form of b(alpha, beta).

    Negative alpha is flipped through (alpha, beta) -> (-alpha, -beta);
    alpha = 0 names the unlink class and is rejected.
    """
    if alpha == 0:
        raise NotTwoBridgeLinkError("alpha = 0 names the unlink class")
    if alpha < 0:
        alpha, beta = -alpha, -beta
    if math.gcd(alpha, beta) != 1:
        raise ValueError(f"parameters ({alpha}, {beta}) are not coprime")
    return TwoBridgeForm(alpha, _canonical_residue(alpha, beta))


def two_bridge_equiv(a: TwoBridgeForm, b: TwoBridgeForm) -> bool:
    """Unoriented equivalence; canonical forms make this plain equality."""
    return a == b


def mirror_two_bridge(a: TwoBridgeForm) -> TwoBridgeForm:
    """The mirror image b(alpha, -beta)."""
    return normalize_two_bridge(a.alpha, -a.beta_canonical)


@dataclass(frozen=True)
class LensSpace:
    """Canonical parameters of a lens space L(p, q).

    p >= 0; p = 0 encodes S^1 x S^2 and p = 1 encodes S^3.  q_canonical is
    the least of q and its inverse mod p (1 when p = 0, 0 when p = 1).
    """

    p: int
    q_canonical: int

    def __post_init__(self) -> None:
        if self.p < 0:
            raise ValueError("p must be nonnegative")
        if self.p == 0:
            if self.q_canonical != 1:
                raise ValueError("p = 0 forces q_canonical = 1")
            return
        if self.p == 1:
            if self.q_canonical != 0:
                raise ValueError("p = 1 forces q_canonical = 0")
            return
        if not 0 < self.q_canonical < self.p:
            raise ValueError("q_canonical out of range")
        if math.gcd(self.p, self.q_canonical) != 1:
            raise ValueError("parameters must be coprime")
        if self.q_canonical != _canonical_residue(self.p, self.q_canonical):
            raise ValueError("q_canonical is not canonical")

    def __str__(self) -> str:
        return f"L({self.p},{self.q_canonical})"


def lens_space(p: int, q: int) -> LensSpace:
    """Canonical form of L(p, q); negative p flips both signs."""
    if p < 0:
        p, q = -p, -q
    if p == 0:
        if abs(q) != 1:
            raise ValueError("L(0, q) requires q = +-1")
        return LensSpace(0, 1)
    if math.gcd(p, q) != 1:
        raise ValueError(f"parameters ({p}, {q}) are not coprime")
    return LensSpace(p, _canonical_residue(p, q))


def lens_space_of(a: TwoBridgeForm) -> LensSpace:
    """The double branched cover of the link b(alpha, beta)."""
    return lens_space(a.alpha, a.beta_canonical)


def lens_equiv(a: LensSpace, b: LensSpace, oriented: bool = True) -> bool:
    """Homeomorphism of lens spaces: q' = q^{+-1} mod p, with the mirror
    classes -q^{+-1} also admitted when ``oriented`` is false."""
    if a.p != b.p:
        return False
    if a.q_canonical == b.q_canonical:
        return True
    if oriented or a.p <= 1:
        return False
    return b.q_canonical == _canonical_residue(a.p, -a.q_canonical)


def murasugi_braid_index(a: TwoBridgeForm, strictness: str = "relaxed") -> Optional[int]:
    """Braid index certificate for a two-bridge link: 2, 3, or None.

    The link has braid index 2 when some odd representative of the class
    is 1.  It has braid index 3 when an odd representative c = 2q+1
    satisfies alpha = p(2q+1) + q or alpha - 1 = p(2q+1) + q for positive
    integers p, q.  Under ``as-quoted`` the first clause demands p, q > 1,
    which misses boundary families such as b(7,2) that are manifestly
    closures of three-strand braids; ``relaxed`` (the default) lowers the
    bound to p, q >= 1 and certifies every closure of
    standard_form(p, q) with p, q >= 1.
    """
    if strictness not in ("as-quoted", "relaxed"):
        raise ValueError(f"unknown strictness {strictness!r}")
    alpha, beta = a.alpha, a.beta_canonical
    if alpha == 1:
        return None  # the unknot has braid index 1
    inverse = pow(beta, -1, alpha)
    representatives = {beta, inverse, (alpha - beta) % alpha, (alpha - inverse) % alpha}
    odd_reps = sorted(r for r in representatives if r % 2 == 1 and 0 < r < alpha)
    if 1 in odd_reps:
        return 2
    for c in odd_reps:
        q = (c - 1) // 2
        if (alpha - q) % c == 0:
            p = (alpha - q) // c
            bound = 1 if strictness == "as-quoted" else 0
            if p > bound and q > bound:
                return 3
        if (alpha - 1 - q) % c == 0:
            p = (alpha - 1 - q) // c
            if p >= 1 and q >= 1:
                return 3
    return None


def stoimenow_form(a: TwoBridgeForm) -> Optional[ConwayTuple]:
    """Search for a Conway tuple (p, 2, q), p, q in [1, alpha], whose
    fraction normalizes to ``a`` or to its mirror.

    Returns the lexicographically least such tuple, or None.  Links whose
    only three-entry notations need negative entries, such as the
    figure-eight class b(5,2), have none.
    """
    mirrored = mirror_two_bridge(a)
    for p in range(1, a.alpha + 1):
        for q in range(1, a.alpha + 1):
            numerator, denominator = fraction_from_conway((p, 2, q))
            form = normalize_two_bridge(numerator, denominator)
            if two_bridge_equiv(form, a) or two_bridge_equiv(form, mirrored):
                return (p, 2, q)
    return None
