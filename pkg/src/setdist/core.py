"""Finite sets of bit-strings and the combinatorial information set-distance.

All quantities are in bits (base-2 logarithms). ``delta`` is the directed
dissimilarity ``log2(t(|B - A| * |A|))`` and ``dist`` its symmetrisation by
``max``. On sets with at least two elements ``dist`` is a semi-metric, and it
obeys the triangle inequality on any triple where no set strictly contains
another.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "Element",
    "FiniteSet",
    "DegenerateSetError",
    "t_clamp",
    "delta",
    "dist",
    "entropy",
    "info",
    "info_pairs",
]

_BITS = frozenset("01")


class DegenerateSetError(ValueError):
    """A set has fewer than two elements where at least two are required."""


@dataclass(frozen=True, slots=True)
class Element:
    """An immutable non-empty bit-string, e.g. ``Element("1001")``.

    Equality is by full content, so ``0001`` and ``001`` are different.
    """

    bits: str

    def __post_init__(self):
        if not self.bits:
            raise ValueError("Element must contain at least one bit")
        if not _BITS.issuperset(self.bits):
            raise ValueError(f"Element bits must be '0'/'1', got {self.bits!r}")

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def __lt__(self, other: "Element") -> bool:
        # shortlex: shorter words first, then lexicographic
        return (len(self.bits), self.bits) < (len(other.bits), other.bits)


class FiniteSet(frozenset):
    """Deduplicated, immutable collection of :class:`Element`.

    Plain strings are promoted to elements, so ``FiniteSet(["10", "01"])``
    works. Being a ``frozenset``, membership is O(1) and the usual set
    algebra (``&``, ``-``, ``<=``, ``<``) applies.
    """

    def __new__(cls, elements: Iterable[Element | str] = ()):
        return super().__new__(
            cls, (e if isinstance(e, Element) else Element(e) for e in elements)
        )

    @property
    def cardinality(self) -> int:
        return len(self)

    @property
    def in_pf_plus(self) -> bool:
        """True when the set has at least two elements."""
        return len(self) >= 2

    def require_pf_plus(self, what: str = "set") -> "FiniteSet":
        if len(self) < 2:
            raise DegenerateSetError(
                f"{what} outside P_F+: {len(self)} distinct element(s), need at least 2"
            )
        return self

    def sorted(self) -> list[Element]:
        return sorted(self)

    def __repr__(self) -> str:
        return "FiniteSet({" + ", ".join(e.bits for e in self.sorted()) + "})"


def t_clamp(x: float) -> float:
    """Return ``x`` if ``x >= 1`` else 1."""
    return x if x >= 1 else 1


def novel_count(a: frozenset, b: frozenset) -> int:
    """``|B - A|`` computed as ``|B| - |A & B|`` without building the difference."""
    return len(b) - len(a & b)


def delta(a: frozenset, b: frozenset) -> float:
    """Directed set dissimilarity ``log2(t(|B - A| * |A|))``.

    Defined for every pair of finite sets, including empty ones. It is zero
    whenever ``B <= A`` and is not symmetric in general.
    """
    return math.log2(t_clamp(novel_count(a, b) * len(a)))


def dist(a: frozenset, b: frozenset) -> float:
    """Information set-distance ``max(delta(A, B), delta(B, A))``.

    Raises ``ValueError`` if either set is empty.
    """
    if not a or not b:
        raise ValueError("dist is defined for non-empty sets only")
    return max(delta(a, b), delta(b, a))


def entropy(a: frozenset) -> float:
    """Combinatorial entropy ``log2 |A|``."""
    if not a:
        raise ValueError("entropy undefined on empty set")
    return math.log2(len(a))


def _check_restriction(yx: frozenset, y: frozenset) -> None:
    if not yx or not y:
        raise ValueError("information undefined on empty set")
    if not yx <= y:
        raise ValueError("restriction must be a subset")


def info(yx: frozenset, y: frozenset) -> float:
    """Information the restriction ``yx`` conveys about ``y``.

    Entropy of ``y`` minus the conditional entropy ``log2 |yx|``.
    """
    _check_restriction(yx, y)
    return entropy(y) - entropy(yx)


def info_pairs(yx: frozenset, y: frozenset) -> float:
    """Same quantity as :func:`info`, counted over pairs of objects.

    ``log2(|Y|**2) - log2(|Y| * |Yx|)``: description length of an unlabelled
    pair minus that of a pair whose second member is known to lie in ``yx``.
    """
    _check_restriction(yx, y)
    n = len(y)
    return math.log2(n * n) - math.log2(n * len(yx))
