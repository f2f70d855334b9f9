"""Seeded generation of generic convex polygons with integer coordinates.

The random stream is SplitMix64, defined by its integer recurrence so any
implementation can reproduce a polygon from ``(n, seed, radius_scale)``::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output = z ^ (z >> 31)

A uniform double is ``(output >> 11) / 2**53``.  Each vertex draws an angle
fraction and then a radius fraction, in that order; a rejected vertex redraws
both from the same stream.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GenerationExhausted, UnsupportedSize
from .polygon import Polygon, build_polygon, check_genericity

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, bound: int) -> int:
        return self.next_u64() % bound


def derive_seed(base: int, index: int) -> int:
    """Seed for the ``index``-th independent sub-stream of ``base``."""
    return mix64((base + (index + 1) * GOLDEN) & MASK64)


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int
    radius_scale: int = 10**6
    max_retries: int = 64

    def __post_init__(self):
        if self.n < 4:
            raise UnsupportedSize(f"generator needs n >= 4, got {self.n}")
        if self.radius_scale <= 0 or self.max_retries <= 0:
            raise ValueError("radius_scale and max_retries must be positive")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def _draw(rng: SplitMix64) -> tuple[float, float]:
    return rng.uniform(), 0.8 + 0.2 * rng.uniform()


def _place(sample, scale: int) -> tuple[int, int]:
    u, r = sample
    theta = 2.0 * math.pi * u
    return round(scale * r * math.cos(theta)), round(scale * r * math.sin(theta))


def _reflex(pts: list[tuple[int, int]]) -> int | None:
    n = len(pts)
    for k in range(n):
        (ax, ay), (bx, by), (cx, cy) = pts[k - 1], pts[k], pts[(k + 1) % n]
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) <= 0:
            return k
    return None


def random_generic_convex(spec: GenSpec) -> Polygon:
    """Generic, strictly convex polygon with ``spec.n`` integer vertices near a circle.

    Vertices are placed in increasing angle order, so a polygon with every
    turn strictly left is already counterclockwise.  A vertex making a
    non-left turn, or the highest index of the first genericity violation, is
    redrawn; each redraw counts as one retry.
    """
    rng = SplitMix64(spec.seed)
    samples = [_draw(rng) for _ in range(spec.n)]
    for _ in range(spec.max_retries + 1):
        samples.sort()
        pts = [_place(s, spec.radius_scale) for s in samples]
        bad = _reflex(pts)
        if bad is None:
            candidate = build_polygon(pts)
            report = check_genericity(candidate)
            if report.is_generic:
                return candidate
            bad = max(report.violations[0].indices)
        samples[bad] = _draw(rng)
    raise GenerationExhausted(f"no generic convex {spec.n}-gon after {spec.max_retries} retries")


def random_points(rng: SplitMix64, count: int, scale: int) -> list[tuple[int, int]]:
    """``count`` integer points uniform in the square [-scale, scale]^2."""
    return [(rng.below(2 * scale + 1) - scale, rng.below(2 * scale + 1) - scale)
            for _ in range(count)]
