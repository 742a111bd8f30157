import itertools
import math

import pytest
from hypothesis import given, strategies as st

from setdist.core import (
    Element,
    FiniteSet,
    DegenerateSetError,
    delta,
    dist,
    entropy,
    info,
    info_pairs,
    t_clamp,
)


def delta_oracle(a, b):
    # explicit element-by-element difference, no set algebra
    novel = [e for e in b if e not in a]
    product = len(novel) * len(a)
    return math.log2(product) if product >= 1 else 0.0


words = st.text(alphabet="01", min_size=1, max_size=4)
finite_sets = st.frozensets(words, max_size=8).map(FiniteSet)
pf_plus_sets = st.frozensets(words, min_size=2, max_size=8).map(FiniteSet)


def test_element_validation():
    with pytest.raises(ValueError):
        Element("")
    with pytest.raises(ValueError):
        Element("012")
    assert Element("0001") != Element("001")
    assert str(Element("101")) == "101"


def test_finite_set_dedups_and_promotes_strings():
    s = FiniteSet(["10", "01", "10", Element("01")])
    assert s.cardinality == 2
    assert Element("10") in s
    assert s.in_pf_plus
    assert not FiniteSet(["1"]).in_pf_plus
    with pytest.raises(DegenerateSetError):
        FiniteSet(["1"]).require_pf_plus()


@pytest.mark.parametrize("x, expected", [(0.5, 1), (1, 1), (6, 6), (-3, 1), (0, 1)])
def test_t_clamp(x, expected):
    assert t_clamp(x) == expected


@pytest.mark.parametrize("a, b, expected", [
    (["10", "01"], ["10", "01"], 0.0),
    (["1001", "0011", "0000"], ["1001"], 0.0),
    (["10", "01"], ["11", "00", "01"], 2.0),
    (["10", "01"], ["11", "00", "10", "01", "111"], math.log2(6)),
    ([], ["1", "0"], 0.0),
    (["1", "0"], [], 0.0),
])
def test_delta_examples(a, b, expected):
    a, b = FiniteSet(a), FiniteSet(b)
    assert delta_oracle(a, b) == pytest.approx(expected, abs=1e-9)
    assert delta(a, b) == pytest.approx(expected, abs=1e-9)


def test_delta_log6_value():
    a = FiniteSet(["10", "01"])
    b = FiniteSet(["11", "00", "10", "01", "111"])
    assert delta(a, b) == pytest.approx(2.5849625, abs=1e-7)


@pytest.mark.parametrize("a, b, expected", [
    (["10", "01"], ["10", "01"], 0.0),
    (["10", "01"], ["10", "01", "11"], 1.0),
    (["10", "01"], ["11", "00"], 2.0),
])
def test_dist_examples(a, b, expected):
    a, b = FiniteSet(a), FiniteSet(b)
    assert dist(a, b) == pytest.approx(max(delta_oracle(a, b), delta_oracle(b, a)), abs=1e-12)
    assert dist(a, b) == pytest.approx(expected, abs=1e-9)


def test_dist_rejects_empty():
    with pytest.raises(ValueError):
        dist(FiniteSet(), FiniteSet(["1", "0"]))


@pytest.mark.parametrize("n, expected", [(4, 2.0), (1, 0.0), (6, math.log2(6))])
def test_entropy(n, expected):
    s = FiniteSet(format(i, "03b") for i in range(n))
    assert entropy(s) == pytest.approx(expected, abs=1e-12)


def test_entropy_empty():
    with pytest.raises(ValueError, match="empty"):
        entropy(FiniteSet())


@pytest.mark.parametrize("ny, nyx, expected", [(8, 8, 0.0), (8, 2, 2.0), (8, 1, 3.0)])
def test_info(ny, nyx, expected):
    y = FiniteSet(format(i, "03b") for i in range(ny))
    yx = FiniteSet(sorted(y)[:nyx])
    assert info(yx, y) == pytest.approx(expected, abs=1e-12)
    assert info_pairs(yx, y) == pytest.approx(expected, abs=1e-12)


def test_info_errors():
    y = FiniteSet(["00", "01"])
    with pytest.raises(ValueError, match="subset"):
        info(FiniteSet(["11"]), y)
    with pytest.raises(ValueError):
        info(FiniteSet(), y)


def test_delta_zero_set_exhaustive_4():
    universe = [format(i, "02b") for i in range(4)]
    subsets = [FiniteSet(c) for r in range(5) for c in itertools.combinations(universe, r)]
    for a, b in itertools.product(subsets, repeat=2):
        novel = len([e for e in b if e not in a])
        assert (delta(a, b) == 0.0) == (novel * len(a) <= 1)
        if b <= a:
            assert delta(a, b) == 0.0


@given(finite_sets, finite_sets)
def test_delta_nonnegative_and_consistent(a, b):
    value = delta(a, b)
    assert value >= 0
    assert value == math.log2(max(1, len(b - a) * len(a)))
    assert value == pytest.approx(delta_oracle(a, b), abs=1e-12)


@given(pf_plus_sets, pf_plus_sets)
def test_dist_semimetric(a, b):
    assert dist(a, b) == dist(b, a)
    assert dist(a, a) == 0.0
    assert dist(a, b) >= 0
    if a != b:
        assert dist(a, b) > 0


@given(pf_plus_sets, finite_sets)
def test_two_term_decomposition(a, b):
    novel = len(b - a)
    if novel >= 1:
        assert delta(a, b) == pytest.approx(math.log2(novel) + math.log2(len(a)), abs=1e-9)


@given(st.frozensets(words, min_size=1, max_size=10), st.data())
def test_info_forms_agree(y, data):
    y = FiniteSet(y)
    yx = FiniteSet(data.draw(st.frozensets(st.sampled_from(sorted(y)), min_size=1)))
    n, m = len(y), len(yx)
    assert info(yx, y) == pytest.approx(math.log2(n) - math.log2(m), abs=1e-12)
    assert info(yx, y) == pytest.approx(math.log2(n ** 2) - math.log2(n * m), abs=1e-12)
    assert info_pairs(yx, y) == pytest.approx(info(yx, y), abs=1e-12)
