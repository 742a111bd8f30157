"""File corpora: byte encodings, pairwise distance matrices and their output formats."""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .core import DegenerateSetError, dist
from .mappers import BinaryString, MapperConfig, map_string

log = logging.getLogger(__name__)

ENCODINGS = ("bits", "bitstring-text", "ascii7")
FORMATS = ("tsv", "json", "phylip")
PHYLIP_LABEL_WIDTH = 10


class EncodingError(ValueError):
    pass


def encode(raw: bytes, mode: str = "bits") -> BinaryString:
    """Turn raw bytes into a binary string.

    ``bits``: 8 bits per byte, MSB first. ``bitstring-text``: the bytes are
    ASCII '0'/'1' with optional whitespace. ``ascii7``: low 7 bits per byte,
    rejecting bytes >= 128.
    """
    if not raw:
        raise EncodingError("empty input")
    if mode == "bits":
        bits = "".join(format(b, "08b") for b in raw)
    elif mode == "ascii7":
        for offset, b in enumerate(raw):
            if b >= 128:
                raise EncodingError(f"non-ASCII byte 0x{b:02x} at offset {offset}")
        bits = "".join(format(b, "07b") for b in raw)
    elif mode == "bitstring-text":
        chars = []
        for offset, b in enumerate(raw):
            if b in (0x30, 0x31):
                chars.append(chr(b))
            elif not chr(b).isspace():
                raise EncodingError(f"invalid character {bytes([b])!r} at byte offset {offset}")
        bits = "".join(chars)
        if not bits:
            raise EncodingError("no bits found in text input")
    else:
        raise ValueError(f"unknown encoding {mode!r}")
    return BinaryString(bits)


def decode_bits(x: BinaryString) -> bytes:
    """Inverse of ``encode(..., "bits")``."""
    if len(x) % 8:
        raise ValueError("bit length is not a multiple of 8")
    return bytes(int(x.bits[i:i + 8], 2) for i in range(0, len(x), 8))


@dataclass(frozen=True)
class Document:
    label: str
    payload: BinaryString
    byte_length: int


def load_documents(paths: Iterable[Path | str], encoding: str = "bits") -> list[Document]:
    """Read files (directories expand to their regular files, sorted by name)."""
    files: list[Path] = []
    for p in map(Path, paths):
        if p.is_dir():
            files.extend(sorted(f for f in p.iterdir() if f.is_file()))
        else:
            files.append(p)
    docs = []
    seen: dict[str, Path] = {}
    for f in files:
        label = f.name
        if label in seen:
            raise EncodingError(f"duplicate document label {label!r} ({seen[label]} and {f})")
        seen[label] = f
        raw = f.read_bytes()
        try:
            payload = encode(raw, encoding)
        except EncodingError as exc:
            raise EncodingError(f"{f}: {exc}") from None
        docs.append(Document(label, BinaryString(payload.bits, label), len(raw)))
    return docs


@dataclass
class DistanceMatrix:
    labels: list[str]
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        n = len(self.labels)
        if self.values.shape != (n, n):
            raise ValueError(f"matrix shape {self.values.shape} does not match {n} labels")

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.values, self.values.T))

    def has_zero_diagonal(self) -> bool:
        return bool(np.all(np.diag(self.values) == 0))


def matrix(docs: Sequence[Document], cfg: MapperConfig,
           skip_degenerate: bool = False) -> DistanceMatrix:
    """Pairwise distances between the mapped sets of ``docs``.

    Each document is mapped once. Documents whose mapped set has fewer than
    two elements abort the run, or are dropped with a warning when
    ``skip_degenerate`` is set.
    """
    sets, labels, bad = [], [], []
    for doc in docs:
        try:
            sets.append(map_string(doc.payload, cfg))
            labels.append(doc.label)
        except DegenerateSetError:
            bad.append(doc.label)
    if bad:
        if not skip_degenerate:
            raise DegenerateSetError(f"degenerate mapped set for: {', '.join(bad)}")
        log.warning("skipping degenerate documents: %s", ", ".join(bad))
    if len(sets) < 2:
        raise ValueError(f"need at least 2 documents, have {len(sets)}")
    n = len(sets)
    values = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            values[i, j] = values[j, i] = dist(sets[i], sets[j])
    return DistanceMatrix(labels, values)


def emit(m: DistanceMatrix, fmt: str = "tsv") -> bytes:
    if fmt == "tsv":
        lines = ["\t".join([""] + m.labels)]
        for label, row in zip(m.labels, m.values):
            lines.append("\t".join([label] + [f"{v:.6f}" for v in row]))
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        text = json.dumps({"labels": m.labels, "matrix": m.values.tolist()}) + "\n"
    elif fmt == "phylip":
        lines = [str(len(m.labels))]
        for label, row in zip(m.labels, m.values):
            if len(label) > PHYLIP_LABEL_WIDTH:
                log.warning("phylip label %r truncated to %d characters", label, PHYLIP_LABEL_WIDTH)
            name = label[:PHYLIP_LABEL_WIDTH].ljust(PHYLIP_LABEL_WIDTH)
            lines.append(name + " " + " ".join(f"{v:.6f}" for v in row))
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return text.encode("utf-8")


def parse(data: bytes, fmt: str) -> DistanceMatrix:
    """Read back a TSV or JSON matrix written by :func:`emit`."""
    text = data.decode("utf-8")
    if fmt == "json":
        obj = json.loads(text)
        return DistanceMatrix(list(obj["labels"]), np.array(obj["matrix"], dtype=float))
    if fmt == "tsv":
        rows = [line.split("\t") for line in text.splitlines() if line]
        labels = rows[0][1:]
        values = np.array([[float(v) for v in r[1:]] for r in rows[1:]])
        return DistanceMatrix(labels, values)
    raise ValueError(f"cannot parse format {fmt!r}")
