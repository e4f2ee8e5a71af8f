"""Which braids beta(k, n) close to two-bridge links, and what that says
about the genus-one fibered knot living over the braid axis.

The closure of a three-strand braid is a two-bridge link exactly when the
braid or its mirror is conjugate to standard_form(p, q) for some integers
p, q, and then the closure is b(2pq+p+q, 2q+1).  Matching the exponent sum
and the homology order of a word against that shape leaves at most a
handful of (p, q) candidates, each settled by the exact conjugacy test, so
the decision is a finite closed-form computation per word.

For odd k, the lift of the braid axis of the closure of beta(k, n) is a
genus-one fibered knot with tunnel number one in the double branched
cover, and every such knot in a lens space arises this way; classify_gof
reports which (k, n) give lens spaces and labels the resulting knots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .burau import homology_order
from .modular import are_conjugate
from .twobridge import (
    LensSpace,
    TwoBridgeForm,
    lens_equiv,
    lens_space,
    lens_space_of,
    mirror_two_bridge,
    normalize_two_bridge,
)
from .words import BraidWord, beta, exponent_sum, format_braid, mirror, standard_form

__all__ = [
    "CheckResult",
    "ClassificationResult",
    "ExceptionL72",
    "HopfPlumbing",
    "Label",
    "NotLensSpace",
    "candidate_pq",
    "classify_gof",
    "exception_isolation_checks",
    "is_two_bridge_closure",
    "known_conjugate_pairs",
    "result_to_record",
    "scan_table",
    "verify_case_analysis",
]

Witness = tuple[int, int, bool]


@dataclass(frozen=True)
class HopfPlumbing:
    """Plumbing of an r-Hopf band and a (band_sign)-Hopf band; the knot
    lives in the lens space L(r, 1), reading L(r,1) as L(-r,-1) for r < 0."""

    r: int
    band_sign: int

    def __str__(self) -> str:
        return f"HopfPlumbing(r={self.r},band={self.band_sign:+d})"


@dataclass(frozen=True)
class ExceptionL72:
    """The one knot outside the plumbing family, in L(7,2) or its mirror."""

    sign: int

    def __str__(self) -> str:
        return f"ExceptionL72({self.sign:+d})"


@dataclass(frozen=True)
class NotLensSpace:
    """The double branched cover of the closure is not a lens space."""

    def __str__(self) -> str:
        return "NotLensSpace"


Label = Union[HopfPlumbing, ExceptionL72, NotLensSpace]


@dataclass(frozen=True)
class ClassificationResult:
    """The verdict for a single (k, n) cell."""

    k: int
    n: int
    word: BraidWord
    is_two_bridge: bool
    two_bridge: Optional[TwoBridgeForm]
    lens_space: Optional[LensSpace]
    witness: Optional[Witness]
    label: Label
    description: str


def candidate_pq(w: BraidWord) -> list[tuple[int, int]]:
    """All (p, q) that could make standard_form(p, q) conjugate to ``w``.

    Conjugacy forces p + q + 1 to equal the exponent sum and |2pq + p + q|
    to equal the homology order, so p and q are roots of
    z^2 - sigma z + pi with sigma = e - 1 and pi = (s d - sigma)/2 for a
    sign s.  Both root orders are returned, larger root first, duplicates
    removed; the list is a superset of every match.
    """
    e = exponent_sum(w)
    d = homology_order(w)
    sigma = e - 1
    pairs: list[tuple[int, int]] = []
    for s in (1, -1):
        doubled = s * d - sigma
        if doubled % 2:
            continue
        pi = doubled // 2
        disc = sigma * sigma - 4 * pi
        if disc < 0:
            continue
        root = math.isqrt(disc)
        if root * root != disc:
            continue
        low, high = (sigma - root) // 2, (sigma + root) // 2
        for pair in ((high, low), (low, high)):
            if pair not in pairs:
                pairs.append(pair)
    return pairs


def is_two_bridge_closure(w: BraidWord) -> Optional[tuple[TwoBridgeForm, Witness]]:
    """Decide whether the closure of ``w`` is a two-bridge link.

    The word and then its mirror are tested against every candidate
    standard form; the first conjugacy hit fixes the closure as
    b(2pq+p+q, 2q+1), mirrored back when the hit was on the mirror side.
    A homology order of zero is the unlink class, which has no normal
    form, so it short-circuits to None.
    """
    if homology_order(w) == 0:
        return None
    for mirrored, candidate_word in ((False, w), (True, mirror(w))):
        for p, q in candidate_pq(candidate_word):
            if are_conjugate(candidate_word, standard_form(p, q)):
                form = normalize_two_bridge(2 * p * q + p + q, 2 * q + 1)
                if mirrored:
                    form = mirror_two_bridge(form)
                return form, (p, q, mirrored)
    return None


def classify_gof(k: int, n: int) -> ClassificationResult:
    """Classify the genus-one fibered knot over the braid axis of the
    closure of beta(k, n); k must be odd."""
    if k % 2 == 0:
        raise ValueError(f"k must be odd, got {k}")
    word = beta(k, n)
    hit = is_two_bridge_closure(word)
    label = _label_for(k, n)
    description = _describe(label, hit)
    if hit is None:
        return ClassificationResult(k, n, word, False, None, None, None, label, description)
    form, witness = hit
    return ClassificationResult(
        k, n, word, True, form, lens_space_of(form), witness, label, description
    )


def _label_for(k: int, n: int) -> Label:
    if k in (1, -1):
        return HopfPlumbing(r=n + 2 * k, band_sign=k)
    if (k, n) in ((-3, 3), (3, -3)):
        # conjugate to beta(-+1, -+3), so the same plumbing as those rows
        sign = 1 if k > 0 else -1
        return HopfPlumbing(r=5 * sign, band_sign=sign)
    if (k, n) in ((-3, 5), (3, -5)):
        return ExceptionL72(sign=1 if k < 0 else -1)
    return NotLensSpace()


def _describe(label: Label, hit: Optional[tuple[TwoBridgeForm, Witness]]) -> str:
    if isinstance(label, HopfPlumbing):
        r_text = str(label.r) if label.r >= 0 else f"({label.r})"
        base = (
            f"plumbing of a {r_text}-Hopf band and a "
            f"({label.band_sign:+d})-Hopf band in L({label.r},1)"
        )
        if hit is None:
            return base + "; the closure is the two-component unlink, outside the two-bridge normal forms"
        return base
    if isinstance(label, ExceptionL72):
        if label.sign > 0:
            return (
                "(-1)-Dehn surgery on the plumbing of a 7-Hopf band and a "
                "(+1)-Hopf band; knot in L(7,2)"
            )
        return (
            "(+1)-Dehn surgery on the plumbing of a (-7)-Hopf band and a "
            "(-1)-Hopf band; knot in the mirror class L(7,3)"
        )
    return "the closure is not a two-bridge link, so the double branched cover is not a lens space"


def scan_table(k_values: Iterable[int], n_values: Iterable[int]) -> list[ClassificationResult]:
    """Classify every cell of a (k, n) grid, k ascending then n ascending."""
    return [
        classify_gof(k, n)
        for k in sorted(set(k_values))
        for n in sorted(set(n_values))
    ]


@dataclass(frozen=True)
class CheckResult:
    """One named boolean check with its expected and computed values."""

    name: str
    expected: bool
    computed: bool

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


# The eight documented conjugacy checks: beta(k, n) against the standard
# form on {p, q}, either order.  Rows marked True are the only conjugate ones.
_CASE_ROWS = (
    ("A", 5, -13, (-2, 3), False),
    ("A", 5, -15, (2, -3), False),
    ("A", 5, -19, (1, -6), False),
    ("A", 5, -9, (-1, 6), False),
    ("B", -3, 15, (2, 3), False),
    ("B", -3, 17, (1, 6), False),
    ("B", -3, 5, (-2, -3), True),
    ("B", -3, 3, (-1, -6), True),
)


def verify_case_analysis() -> list[CheckResult]:
    """Run the eight case-row conjugacy checks, one CheckResult per row."""
    results = []
    for case, k, n, (p, q), expected in _CASE_ROWS:
        word = beta(k, n)
        computed = any(
            are_conjugate(word, standard_form(x, y)) for x, y in ((p, q), (q, p))
        )
        name = f"case {case}: beta({k},{n}) vs standard form on {{{p},{q}}}"
        results.append(CheckResult(name, expected, computed))
    return results


def known_conjugate_pairs() -> list[CheckResult]:
    """The two beta pairs that are conjugate despite distinct (k, n)."""
    pairs = (((-3, 3), (-1, -3)), ((3, -3), (1, 3)))
    results = []
    for (k1, n1), (k2, n2) in pairs:
        computed = are_conjugate(beta(k1, n1), beta(k2, n2))
        results.append(
            CheckResult(f"beta({k1},{n1}) ~ beta({k2},{n2})", True, computed)
        )
    return results


def exception_isolation_checks() -> list[CheckResult]:
    """The exceptional rows +-(-3,5) are not plumbing rows in disguise.

    Conjugacy to beta(+-1, n) is ruled out at the unique exponent-sum
    compatible n, and the lens space L(7,2) (or its mirror) is separated
    from every L(n+-2, 1) over a wide n range.
    """
    results = []
    for k, n in ((-3, 5), (3, -5)):
        word = beta(k, n)
        e = exponent_sum(word)
        for eps in (1, -1):
            other_n = e - 3 * eps
            computed = are_conjugate(word, beta(eps, other_n))
            results.append(
                CheckResult(f"beta({k},{n}) ~ beta({eps},{other_n})", False, computed)
            )
    for exceptional in (lens_space(7, 2), lens_space(7, -2)):
        separated = all(
            not lens_equiv(exceptional, lens_space(n + 2 * eps, 1), oriented=False)
            for n in range(-40, 41)
            for eps in (1, -1)
        )
        results.append(
            CheckResult(
                f"{exceptional} differs from every L(n+-2,1), n in [-40,40]",
                True,
                separated,
            )
        )
    return results


def result_to_record(result: ClassificationResult) -> dict:
    """Flatten a ClassificationResult into its serialization record."""
    form = result.two_bridge
    space = result.lens_space
    witness = result.witness
    return {
        "k": result.k,
        "n": result.n,
        "word": format_braid(result.word),
        "is_two_bridge": result.is_two_bridge,
        "alpha": form.alpha if form else None,
        "beta": form.beta_canonical if form else None,
        "lens_p": space.p if space else None,
        "lens_q": space.q_canonical if space else None,
        "witness_p": witness[0] if witness else None,
        "witness_q": witness[1] if witness else None,
        "mirrored": witness[2] if witness else None,
        "label": str(result.label),
        "description": result.description,
    }
