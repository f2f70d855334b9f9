import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vertex_extrema import GenSpec, random_generic_convex
from vertex_extrema.errors import UnsupportedSize
from vertex_extrema.extremality import analyze
from vertex_extrema.generator import SplitMix64, derive_seed, mix64
from vertex_extrema.polygon import build_polygon, check_genericity, is_convex

MASK = (1 << 64) - 1


def splitmix_oracle(seed, count):
    """Reference recurrence written out longhand."""
    out, state = [], seed
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        out.append(z ^ (z >> 31))
    return out


def test_reference_vectors():
    assert SplitMix64(0).next_u64() == 16294208416658607535
    assert SplitMix64(1234567).next_u64() == 6457827717110365317


@given(st.integers(0, MASK))
def test_stream_matches_longhand_recurrence(seed):
    rng = SplitMix64(seed)
    assert [rng.next_u64() for _ in range(5)] == splitmix_oracle(seed, 5)


def test_uniform_and_below_ranges():
    rng = SplitMix64(9)
    for _ in range(1000):
        assert 0.0 <= rng.uniform() < 1.0
        assert 0 <= rng.below(7) < 7


def test_derived_seeds_differ():
    assert len({derive_seed(5, t) for t in range(1000)}) == 1000
    assert derive_seed(5, 0) == mix64(5 + 0x9E3779B97F4A7C15)


def test_frozen_outputs():
    assert random_generic_convex(GenSpec(6, 42)).to_json()["vertices"] == [
        ["945981", "230446"], ["189351", "941270"], ["-494603", "780117"],
        ["-900802", "-76000"], ["-427220", "-724043"], ["-44074", "-830814"]]
    assert random_generic_convex(GenSpec(4, 0)).to_json()["vertices"] == [
        ["980496", "164363"], ["439285", "847192"], ["26824", "990043"], ["658569", "-593147"]]


def test_deterministic():
    assert random_generic_convex(GenSpec(6, 42)) == random_generic_convex(GenSpec(6, 42))
    assert random_generic_convex(GenSpec(6, 42)) != random_generic_convex(GenSpec(6, 43))


def test_too_small():
    with pytest.raises(UnsupportedSize):
        GenSpec(3, 0)


def test_radius_band():
    P = random_generic_convex(GenSpec(12, 3, radius_scale=1000))
    for v in P:
        r2 = v.x * v.x + v.y * v.y
        # rounding moves each coordinate by at most 1/2
        assert (800 - 1) ** 2 <= r2 <= (1000 + 1) ** 2


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 14), st.integers(0, MASK))
def test_output_is_valid(n, seed):
    P = random_generic_convex(GenSpec(n, seed))
    assert P.n == n
    assert build_polygon(P.vertices) == P
    assert is_convex(P)
    assert check_genericity(P).violations == []


@pytest.mark.slow
def test_distribution_is_not_degenerate():
    values = {analyze(random_generic_convex(GenSpec(8, derive_seed(77, t)))).s_minus
              for t in range(1000)}
    assert len(values) >= 3
