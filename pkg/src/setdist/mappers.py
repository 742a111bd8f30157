"""Mappings from binary strings to finite sets of words.

Three schemes are provided:

* ``chunk``: non-overlapping k-bit words, last word zero-padded on the right.
* ``window``: a window of ``window_symbols * symbol_width`` bits slid across
  the string in steps of ``stride_symbols * symbol_width`` bits (n-grams of
  fixed-width symbols, e.g. 7-bit letters).
* ``lz76``: the phrases of the Lempel-Ziv (1976) exhaustive history.

Every mapper raises :class:`~setdist.core.DegenerateSetError` when the
resulting set has fewer than two elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import FiniteSet, dist

__all__ = [
    "BinaryString",
    "MapperConfig",
    "MAPPER_KINDS",
    "chunk_map",
    "window_map",
    "lz76_components",
    "lz76_map",
    "map_string",
    "dist_strings",
]

MAPPER_KINDS = ("chunk", "window", "lz76")


@dataclass(frozen=True)
class BinaryString:
    """A non-empty string of '0'/'1' characters with an optional label."""

    bits: str
    source_label: Optional[str] = None

    def __post_init__(self):
        if not self.bits:
            raise ValueError("binary string must be non-empty")
        if not set(self.bits) <= {"0", "1"}:
            raise ValueError("binary string may contain only '0' and '1'")

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return self.bits


StringLike = Union[BinaryString, str]


def _bits(x: StringLike) -> str:
    if isinstance(x, BinaryString):
        return x.bits
    return BinaryString(x).bits


@dataclass(frozen=True)
class MapperConfig:
    kind: str = "chunk"
    k: int = 8
    symbol_width: int = 7
    window_symbols: int = 3
    stride_symbols: int = 1

    def __post_init__(self):
        if self.kind not in MAPPER_KINDS:
            raise ValueError(f"unknown mapper kind {self.kind!r}; expected one of {MAPPER_KINDS}")
        for name in ("k", "symbol_width", "window_symbols", "stride_symbols"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @property
    def window_bits(self) -> int:
        return self.window_symbols * self.symbol_width

    @property
    def stride_bits(self) -> int:
        return self.stride_symbols * self.symbol_width


def chunk_map(x: StringLike, k: int) -> FiniteSet:
    """Split ``x`` into consecutive k-bit words, zero-padding the last one.

    >>> sorted(str(e) for e in chunk_map("100100110", 4))
    ['0000', '0011', '1001']
    """
    if k < 1:
        raise ValueError("k must be positive")
    bits = _bits(x)
    rem = len(bits) % k
    if rem:
        bits += "0" * (k - rem)
    words = FiniteSet(bits[i:i + k] for i in range(0, len(bits), k))
    return words.require_pf_plus("mapped set")


def window_map(x: StringLike, cfg: MapperConfig) -> FiniteSet:
    """Collect every window of ``cfg.window_bits`` bits at symbol-aligned offsets."""
    bits = _bits(x)
    width, step = cfg.window_bits, cfg.stride_bits
    if len(bits) < width:
        raise ValueError(f"string shorter than window ({len(bits)} < {width} bits)")
    words = FiniteSet(bits[i:i + width] for i in range(0, len(bits) - width + 1, step))
    return words.require_pf_plus("mapped set")


def lz76_components(x: StringLike) -> list[str]:
    """Exhaustive-history decomposition of ``x``.

    Each component is the shortest extension from the current position that
    does not occur in ``x`` up to (but excluding) its own last bit; copies may
    overlap the component itself. The final component may be a copy if the
    string runs out first. The components concatenate back to ``x``.
    """
    bits = _bits(x)
    n = len(bits)
    components = []
    start = 0
    while start < n:
        end = start + 1  # exclusive end of the candidate component
        while end <= n and bits[start:end] in bits[:end - 1]:
            end += 1
        end = min(end, n)
        components.append(bits[start:end])
        start = end
    return components


def lz76_map(x: StringLike) -> FiniteSet:
    """Set of distinct exhaustive-history components of ``x``."""
    return FiniteSet(lz76_components(x)).require_pf_plus("mapped set")


def map_string(x: StringLike, cfg: MapperConfig) -> FiniteSet:
    if cfg.kind == "chunk":
        return chunk_map(x, cfg.k)
    if cfg.kind == "window":
        return window_map(x, cfg)
    return lz76_map(x)


def dist_strings(x: StringLike, y: StringLike, cfg: MapperConfig) -> float:
    """Set distance between the images of ``x`` and ``y`` under ``cfg``."""
    return dist(map_string(x, cfg), map_string(y, cfg))
