"""Combinatorial information set-distance between finite sets and binary strings."""
from .core import (
    DegenerateSetError,
    Element,
    FiniteSet,
    delta,
    dist,
    entropy,
    info,
    info_pairs,
    t_clamp,
)
from .mappers import (
    BinaryString,
    MapperConfig,
    chunk_map,
    dist_strings,
    lz76_components,
    lz76_map,
    map_string,
    window_map,
)

__version__ = "0.1.0"
