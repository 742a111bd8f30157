import math

import pytest
from hypothesis import given, strategies as st

from setdist.core import DegenerateSetError, FiniteSet
from setdist.mappers import (
    BinaryString,
    MapperConfig,
    chunk_map,
    dist_strings,
    lz76_components,
    lz76_map,
    map_string,
    window_map,
)
from setdist.verifier import lz76_oracle

bitstrings = st.text(alphabet="01", min_size=1, max_size=64)


def as_bits(s):
    return sorted(str(e) for e in s)


def test_binary_string_validation():
    with pytest.raises(ValueError):
        BinaryString("")
    with pytest.raises(ValueError):
        BinaryString("10a")
    assert len(BinaryString("101", "doc")) == 3


def test_mapper_config_validation():
    with pytest.raises(ValueError):
        MapperConfig("zip")
    with pytest.raises(ValueError):
        MapperConfig("chunk", k=0)
    with pytest.raises(ValueError):
        MapperConfig("window", stride_symbols=0)
    assert MapperConfig("window", symbol_width=7, window_symbols=3).window_bits == 21


# chunk

def test_chunk_worked_example():
    assert as_bits(chunk_map("100100110", 4)) == ["0000", "0011", "1001"]


def test_chunk_exact_split():
    assert as_bits(chunk_map("10010110", 4)) == ["0110", "1001"]


def test_chunk_repetition_is_degenerate():
    with pytest.raises(DegenerateSetError):
        chunk_map("10011001", 4)


@given(bitstrings, st.integers(1, 8))
def test_chunk_properties(x, k):
    padded = x + "0" * (-len(x) % k)
    aligned = {padded[i:i + k] for i in range(0, len(padded), k)}
    try:
        s = chunk_map(x, k)
    except DegenerateSetError:
        assert len(aligned) < 2
        return
    assert all(len(e) == k for e in s)
    assert len(s) <= math.ceil(len(x) / k)
    assert set(as_bits(s)) == aligned


# window

def ascii7(text):
    return "".join(format(ord(c), "07b") for c in text)


def test_window_bigrams_of_three_letters():
    s = window_map(ascii7("abc"), MapperConfig("window", symbol_width=7, window_symbols=2))
    assert as_bits(s) == sorted([ascii7("ab"), ascii7("bc")])
    assert all(len(e) == 14 for e in s)


def test_window_single_bit_symbols():
    cfg = MapperConfig("window", symbol_width=1, window_symbols=2)
    assert as_bits(window_map("0101", cfg)) == ["01", "10"]


def test_window_too_short():
    with pytest.raises(ValueError, match="shorter than window"):
        window_map("01", MapperConfig("window", symbol_width=1, window_symbols=3))


def test_window_degenerate():
    with pytest.raises(DegenerateSetError):
        window_map("0000", MapperConfig("window", symbol_width=1, window_symbols=2))


@given(bitstrings, st.integers(1, 3), st.integers(1, 4), st.integers(1, 3))
def test_window_elements_at_aligned_offsets(x, width, n, stride):
    cfg = MapperConfig("window", symbol_width=width, window_symbols=n, stride_symbols=stride)
    try:
        s = window_map(x, cfg)
    except (DegenerateSetError, ValueError):
        return
    step = width * stride
    offsets = range(0, len(x) - cfg.window_bits + 1, step)
    for e in s:
        assert len(e) == cfg.window_bits
        assert any(x[o:o + cfg.window_bits] == e.bits for o in offsets)


# lz76

@pytest.mark.parametrize("x, components", [
    ("01", ["0", "1"]),
    ("0001101001000101", ["0", "001", "10", "100", "1000", "101"]),
    ("0000", ["0", "000"]),
    ("0", ["0"]),
])
def test_lz76_components(x, components):
    assert lz76_oracle(x) == components
    assert lz76_components(x) == components


def test_lz76_map_set():
    assert as_bits(lz76_map("01")) == ["0", "1"]
    assert len(lz76_map("0001101001000101")) == 6
    assert as_bits(lz76_map("0000")) == ["0", "000"]


@pytest.mark.parametrize("x", ["0", "1", "00", "11"])
def test_lz76_degenerate(x):
    with pytest.raises(DegenerateSetError):
        lz76_map(x)


@given(bitstrings)
def test_lz76_component_rule(x):
    comps = lz76_components(x)
    assert "".join(comps) == x
    pos = 0
    for idx, c in enumerate(comps):
        end = pos + len(c)
        if idx < len(comps) - 1:
            # all but the last bit is copyable from earlier, the whole is not
            assert c[:-1] in x[:end - 2] or len(c) == 1
            assert c not in x[:end - 1]
        pos = end


def test_lz76_matches_oracle_up_to_16_bits():
    for n in range(1, 17):
        for v in range(1 << n):
            x = format(v, f"0{n}b")
            assert lz76_components(x) == lz76_oracle(x), x


# dispatch and string distance

def test_map_string_dispatch():
    assert as_bits(map_string("100100110", MapperConfig("chunk", k=4))) == ["0000", "0011", "1001"]
    assert as_bits(map_string("01", MapperConfig("lz76"))) == ["0", "1"]
    cfg = MapperConfig("window", symbol_width=1, window_symbols=2)
    assert as_bits(map_string("0101", cfg)) == ["01", "10"]


def test_dist_strings_examples():
    cfg = MapperConfig("chunk", k=4)
    assert dist_strings("10010110", "10010110", cfg) == 0.0
    assert dist_strings("10010110", "01101001", cfg) == 0.0
    assert dist_strings("10010110", "11110000", cfg) == pytest.approx(2.0, abs=1e-9)


def test_dist_strings_propagates_errors():
    with pytest.raises(DegenerateSetError):
        dist_strings("10011001", "10010110", MapperConfig("chunk", k=4))


@given(bitstrings, bitstrings, st.sampled_from([MapperConfig("chunk", k=3), MapperConfig("lz76"),
                                                MapperConfig("window", symbol_width=2, window_symbols=2)]))
def test_dist_strings_symmetry_identity(x, y, cfg):
    try:
        d = dist_strings(x, y, cfg)
    except ValueError:
        return
    assert d == dist_strings(y, x, cfg)
    assert dist_strings(x, x, cfg) == 0.0
    assert d == 0.0 or map_string(x, cfg) != map_string(y, cfg)
    assert isinstance(map_string(x, cfg), FiniteSet)
