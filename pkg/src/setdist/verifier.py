"""Brute-force oracles and property suites for the set distance.

The suites check, by exhaustive enumeration over small universes and by
seeded random search over larger ones:

* when the directed dissimilarity vanishes (``remark1``),
* symmetry, identity and positivity of ``dist`` (``semimetric``),
* the triangle inequality on containment-free triples, for both ``delta``
  and ``dist`` (``triangle-exhaustive``, ``triangle-random``),
* the counting inequality ``|C-A| <= 2 |B-A| |C-B|`` (``key-inequality``),
* the max-combination step for ``dist`` (``max-combination``),
* agreement of the LZ76 parser with an independent oracle (``lz76``).

Random suites are split into a fixed number of shards, each with its own
generator spawned from the seed, so results do not depend on ``workers``.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from .core import Element, FiniteSet, delta, dist
from .mappers import StringLike, _bits, lz76_components

TOL = 1e-9
DEFAULT_SHARDS = 8
MAX_INFORMATIONAL = 10
SUITES = ("remark1", "semimetric", "triangle-exhaustive", "triangle-random",
          "key-inequality", "max-combination", "lz76")


@dataclass
class PropertyReport:
    suite: str
    trials: int = 0
    applicable: int = 0
    violations: list = field(default_factory=list)
    informational: list = field(default_factory=list)
    informational_count: int = 0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def note_informational(self, record: dict) -> None:
        self.informational_count += 1
        if len(self.informational) < MAX_INFORMATIONAL:
            self.informational.append(record)

    def merge(self, other: "PropertyReport") -> "PropertyReport":
        if other.suite != self.suite:
            raise ValueError(f"cannot merge {self.suite!r} with {other.suite!r}")
        informational = (self.informational + other.informational)[:MAX_INFORMATIONAL]
        notes = self.notes + [n for n in other.notes if n not in self.notes]
        return PropertyReport(
            self.suite,
            self.trials + other.trials,
            self.applicable + other.applicable,
            self.violations + other.violations,
            informational,
            self.informational_count + other.informational_count,
            notes,
        )

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (f"[{status}] {self.suite}: trials={self.trials} "
                f"applicable={self.applicable} violations={len(self.violations)}")
        if self.informational_count:
            line += f" informational={self.informational_count}"
        return line


class TripleCondition(NamedTuple):
    """Strict-containment flags for a triple; ``a_in_b`` means A < B."""

    a_in_b: bool
    b_in_a: bool
    a_in_c: bool
    c_in_a: bool
    b_in_c: bool
    c_in_b: bool

    @classmethod
    def of(cls, a: frozenset, b: frozenset, c: frozenset) -> "TripleCondition":
        return cls(a < b, b < a, a < c, c < a, b < c, c < b)

    @property
    def containment_free(self) -> bool:
        return not any(self)


class TriangleCheck(NamedTuple):
    condition: TripleCondition
    holds: bool
    slack: float


def _describe(*sets: frozenset) -> list:
    return [sorted(e.bits for e in s) for s in sets]


# ---------------------------------------------------------------------------
# Single-instance checks
# ---------------------------------------------------------------------------

def check_triangle(a: FiniteSet, b: FiniteSet, c: FiniteSet) -> TriangleCheck:
    """Evaluate ``dist(A, C) <= dist(A, B) + dist(B, C)`` and the containment flags."""
    for s in (a, b, c):
        if len(s) < 2:
            raise ValueError("triangle check needs sets with at least 2 elements")
    slack = dist(a, b) + dist(b, c) - dist(a, c)
    return TriangleCheck(TripleCondition.of(a, b, c), slack >= -TOL, slack)


def check_key_inequality(a: frozenset, b: frozenset, c: frozenset) -> Optional[bool]:
    """``|C-A| <= 2 |B-A| |C-B|`` in exact integers.

    Returns None when one of the three counts is zero (not applicable).
    """
    ca, ba, cb = len(c - a), len(b - a), len(c - b)
    if min(ca, ba, cb) < 1:
        return None
    return ca <= 2 * ba * cb


def check_max_combination(a1: float, a2: float, a3: float,
                          b1: float, b2: float, b3: float) -> Optional[bool]:
    """``max(a1, b1) <= max(a2, b2) + max(a3, b3)`` given ``a1 <= a2 + a3``
    and ``b1 <= b2 + b3``.

    Returns None when an input is negative or a premise fails.
    """
    if min(a1, a2, a3, b1, b2, b3) < 0:
        return None
    if a1 > a2 + a3 + TOL or b1 > b2 + b3 + TOL:
        return None
    return max(a1, b1) <= max(a2, b2) + max(a3, b3) + TOL


def lz76_oracle(x: StringLike) -> list[str]:
    """Exhaustive history recomputed by explicit copy-source scanning.

    For a component starting at ``i`` every source ``p < i`` is a candidate;
    sources are dropped bit by bit as soon as ``x[p + m] != x[i + m]``.
    Overlapping copies fall out naturally since ``p + m`` may pass ``i``.
    """
    bits = [int(ch) for ch in _bits(x)]
    n = len(bits)
    out = []
    i = 0
    while i < n:
        sources = list(range(i))
        length = 0
        while i + length < n:
            sources = [p for p in sources if bits[p + length] == bits[i + length]]
            if not sources:
                break
            length += 1
        end = min(i + length + 1, n)
        out.append("".join(map(str, bits[i:end])))
        i = end
    return out


# ---------------------------------------------------------------------------
# Universes and random sets
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def universe(size: int) -> tuple[Element, ...]:
    """Fixed-width binary words for 0..size-1."""
    if size < 1:
        raise ValueError("universe size must be positive")
    width = max(1, (size - 1).bit_length())
    return tuple(Element(format(i, f"0{width}b")) for i in range(size))


def all_subsets(size: int, min_card: int = 0) -> list[FiniteSet]:
    items = universe(size)
    return [
        FiniteSet(itertools.compress(items, ((mask >> i) & 1 for i in range(size))))
        for mask in range(1 << size)
        if bin(mask).count("1") >= min_card
    ]


@lru_cache(maxsize=None)
def _cardinality_weights(size: int, min_card: int) -> tuple[np.ndarray, np.ndarray]:
    ks = np.arange(min_card, size + 1)
    w = np.array([math.comb(size, int(k)) for k in ks], dtype=float)
    return ks, w / w.sum()


def random_set(universe_size: int, min_card: int, rng: np.random.Generator) -> FiniteSet:
    """Uniform draw among subsets of the universe with at least ``min_card`` elements."""
    if min_card > universe_size:
        raise ValueError(f"min_card {min_card} exceeds universe size {universe_size}")
    items = universe(universe_size)
    if min_card <= universe_size // 2:
        # rejection on uniform bitmasks: acceptance >= 1/2, exactly uniform
        while True:
            mask = int(rng.integers(0, 1 << universe_size))
            if bin(mask).count("1") >= min_card:
                return FiniteSet(items[i] for i in range(universe_size) if (mask >> i) & 1)
    ks, p = _cardinality_weights(universe_size, min_card)
    k = int(rng.choice(ks, p=p))
    idx = rng.choice(universe_size, size=k, replace=False)
    return FiniteSet(items[int(i)] for i in idx)


def _shard_sizes(trials: int, shards: int) -> list[int]:
    base, extra = divmod(trials, shards)
    return [base + (i < extra) for i in range(shards)]


def _run_sharded(worker: Callable, suite: str, trials: int, seed: int,
                 shards: int, workers: int, *args) -> PropertyReport:
    seeds = np.random.SeedSequence(seed).spawn(shards)
    jobs = [(n, s, *args) for n, s in zip(_shard_sizes(trials, shards), seeds)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(worker, jobs))
    else:
        parts = [worker(job) for job in jobs]
    report = PropertyReport(suite)
    for part in parts:
        report = report.merge(part)
    return report


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def remark1_suite(size: int = 5) -> PropertyReport:
    """Exhaustive zero-set of ``delta`` over all ordered subset pairs.

    ``delta(A, B) == 0`` exactly when ``|B - A| * |A| <= 1``. Pairs where the
    shorter rule "B - A empty or A empty or B empty" gives the wrong answer
    (a singleton A with one novel element in B) are recorded as informational.
    """
    report = PropertyReport("remark1")
    report.notes.append("delta(A,B) == 0  <=>  |B-A| * |A| <= 1")
    subsets = all_subsets(size)
    for a, b in itertools.product(subsets, repeat=2):
        report.trials += 1
        report.applicable += 1
        novel = b - a
        value = delta(a, b)
        expected_zero = len(novel) * len(a) <= 1
        if (value == 0.0) != expected_zero:
            report.violations.append({"A": _describe(a)[0], "B": _describe(b)[0], "delta": value})
        reference = math.log2(max(1, len(novel) * len(a)))
        if value != reference:
            report.violations.append({"A": _describe(a)[0], "B": _describe(b)[0],
                                      "delta": value, "materialized": reference})
        short_rule = not novel or not a or not b
        if (value == 0.0) != short_rule:
            report.note_informational({"A": _describe(a)[0], "B": _describe(b)[0], "delta": value})
    return report


def semimetric_suite(size: int = 5) -> PropertyReport:
    """Symmetry and identity over non-empty subsets, positivity over sets of size >= 2."""
    report = PropertyReport("semimetric")
    subsets = all_subsets(size, min_card=1)
    for a, b in itertools.product(subsets, repeat=2):
        report.trials += 1
        dab, dba = dist(a, b), dist(b, a)
        problems = []
        if dab != dba:
            problems.append("symmetry")
        if a == b and dab != 0.0:
            problems.append("identity")
        if len(a) >= 2 and len(b) >= 2:
            report.applicable += 1
            if a != b and not dab > 0:
                problems.append("positivity")
        if problems:
            a_bits, b_bits = _describe(a, b)
            report.violations.append({"A": a_bits, "B": b_bits, "d_ab": dab, "d_ba": dba,
                                      "failed": problems})
    return report


def _triangle_record(report: PropertyReport, a, b, c) -> None:
    report.trials += 1
    cond = TripleCondition.of(a, b, c)
    d_slack = dist(a, b) + dist(b, c) - dist(a, c)
    delta_slack = delta(a, b) + delta(b, c) - delta(a, c)
    failed = [name for name, s in (("dist", d_slack), ("delta", delta_slack)) if s < -TOL]
    if cond.containment_free:
        report.applicable += 1
        if failed:
            report.violations.append({"A": _describe(a)[0], "B": _describe(b)[0],
                                      "C": _describe(c)[0], "dist_slack": d_slack,
                                      "delta_slack": delta_slack, "failed": failed})
    elif d_slack < -TOL:
        report.note_informational({"A": _describe(a)[0], "B": _describe(b)[0],
                                   "C": _describe(c)[0], "dist_slack": d_slack,
                                   "condition": cond._asdict()})


def triangle_exhaustive_suite(size: int = 5) -> PropertyReport:
    """All ordered triples of subsets with at least 2 elements.

    Containment-free triples must satisfy the triangle inequality for both
    ``delta`` and ``dist``; failures elsewhere are only informational.
    """
    report = PropertyReport("triangle-exhaustive")
    subsets = all_subsets(size, min_card=2)
    for a, b, c in itertools.product(subsets, repeat=3):
        _triangle_record(report, a, b, c)
    return report


def _triangle_shard(job) -> PropertyReport:
    trials, seed_seq, size = job
    rng = np.random.default_rng(seed_seq)
    report = PropertyReport("triangle-random")
    for _ in range(trials):
        a, b, c = (random_set(size, 2, rng) for _ in range(3))
        _triangle_record(report, a, b, c)
    return report


def triangle_random_suite(trials: int = 100_000, size: int = 12, seed: int = 0,
                          shards: int = DEFAULT_SHARDS, workers: int = 1) -> PropertyReport:
    return _run_sharded(_triangle_shard, "triangle-random", trials, seed, shards, workers, size)


def key_inequality_suite(size: int = 4) -> PropertyReport:
    """Exhaustive ``|C-A| <= 2 |B-A| |C-B|`` over all subset triples with nonzero counts."""
    report = PropertyReport("key-inequality")
    subsets = all_subsets(size)
    for a, b, c in itertools.product(subsets, repeat=3):
        report.trials += 1
        result = check_key_inequality(a, b, c)
        if result is None:
            continue
        report.applicable += 1
        if not result:
            report.violations.append({"A": _describe(a)[0], "B": _describe(b)[0],
                                      "C": _describe(c)[0]})
    return report


def _max_combination_shard(job) -> PropertyReport:
    trials, seed_seq, scale = job
    rng = np.random.default_rng(seed_seq)
    report = PropertyReport("max-combination")
    draws = rng.random((trials, 6))
    for a2, a3, b2, b3, u, v in draws:
        a2, a3, b2, b3 = a2 * scale, a3 * scale, b2 * scale, b3 * scale
        a1, b1 = (a2 + a3) * u, (b2 + b3) * v
        report.trials += 1
        result = check_max_combination(a1, a2, a3, b1, b2, b3)
        if result is None:
            continue
        report.applicable += 1
        if not result:
            report.violations.append({"a": [a1, a2, a3], "b": [b1, b2, b3]})
    return report


def max_combination_suite(trials: int = 100_000, seed: int = 0, scale: float = 10.0,
                          shards: int = DEFAULT_SHARDS, workers: int = 1) -> PropertyReport:
    report = _run_sharded(_max_combination_shard, "max-combination", trials, seed,
                          shards, workers, scale)
    report.notes.append("premises: a1 <= a2 + a3 and b1 <= b2 + b3 "
                        "(corrected from the printed 'b1 <= b1 + b2')")
    return report


def _lz76_compare(report: PropertyReport, bits: str) -> None:
    report.trials += 1
    report.applicable += 1
    got, want = lz76_components(bits), lz76_oracle(bits)
    if got != want or "".join(got) != bits:
        report.violations.append({"x": bits, "parser": got, "oracle": want})


def _lz76_shard(job) -> PropertyReport:
    trials, seed_seq, max_len = job
    rng = np.random.default_rng(seed_seq)
    report = PropertyReport("lz76")
    for _ in range(trials):
        n = int(rng.integers(1, max_len + 1))
        bits = "".join("1" if b else "0" for b in rng.integers(0, 2, n))
        _lz76_compare(report, bits)
    return report


def lz76_suite(max_len: int = 14, random_trials: int = 10_000, random_max_len: int = 256,
               seed: int = 0, shards: int = DEFAULT_SHARDS, workers: int = 1) -> PropertyReport:
    """Parser vs oracle on every string up to ``max_len`` bits plus random longer ones."""
    report = PropertyReport("lz76")
    for n in range(1, max_len + 1):
        for value in range(1 << n):
            _lz76_compare(report, format(value, f"0{n}b"))
    if random_trials:
        report = report.merge(_run_sharded(_lz76_shard, "lz76", random_trials, seed,
                                           shards, workers, random_max_len))
    return report


def run_all(trials: int = 100_000, size: int = 5, seed: int = 0, random_size: int = 12,
            lz_max_len: int = 14, lz_trials: int = 10_000, workers: int = 1,
            suites: Optional[Sequence[str]] = None) -> list[PropertyReport]:
    runners = {
        "remark1": lambda: remark1_suite(size),
        "semimetric": lambda: semimetric_suite(size),
        "triangle-exhaustive": lambda: triangle_exhaustive_suite(size),
        "triangle-random": lambda: triangle_random_suite(trials, random_size, seed, workers=workers),
        "key-inequality": lambda: key_inequality_suite(size),
        "max-combination": lambda: max_combination_suite(trials, seed, workers=workers),
        "lz76": lambda: lz76_suite(lz_max_len, lz_trials, seed=seed, workers=workers),
    }
    names = list(SUITES) if suites is None else list(suites)
    unknown = set(names) - set(runners)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    return [runners[name]() for name in names]


def format_reports(reports: Sequence[PropertyReport], seed: int) -> str:
    lines = [f"seed: {seed}"]
    for r in reports:
        lines.append(r.summary())
        lines.extend(f"    note: {n}" for n in r.notes)
        for v in r.violations[:MAX_INFORMATIONAL]:
            lines.append(f"    violation: {v}")
        for v in r.informational[:3]:
            lines.append(f"    informational: {v}")
    ok = all(r.passed for r in reports)
    lines.append("ALL PASSED" if ok else "PROPERTY VIOLATIONS FOUND")
    return "\n".join(lines)
