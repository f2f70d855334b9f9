from fractions import Fraction

import pytest

from vertex_extrema import GenSpec, build_polygon, random_generic_convex
from vertex_extrema.generator import derive_seed

Q1_POINTS = [(0, 0), (5, 0), (6, 4), (1, 5)]
HEXAGON = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]
REFLEX = [(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)]


@pytest.fixture
def q1():
    return build_polygon(Q1_POINTS)


@pytest.fixture
def generic_hexagon():
    return random_generic_convex(GenSpec(6, 1))


def corpus(count, n_min, n_max, base_seed=2024):
    """Generated polygons with vertex counts cycling through [n_min, n_max]."""
    span = n_max - n_min + 1
    for t in range(count):
        yield random_generic_convex(GenSpec(n_min + t % span, derive_seed(base_seed, t)))


# -- independent oracles -----------------------------------------------------

def det(m):
    """Laplace expansion; slow and obviously correct."""
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** c * m[0][c] * det([row[:c] + row[c + 1:] for row in m[1:]])
               for c in range(len(m)))


def circumcenter_oracle(a, b, c):
    """Solve |P-a|^2 = |P-b|^2 = |P-c|^2 by Cramer's rule."""
    a, b, c = [(Fraction(x), Fraction(y)) for x, y in (a, b, c)]
    a11, a12 = 2 * (b[0] - a[0]), 2 * (b[1] - a[1])
    a21, a22 = 2 * (c[0] - a[0]), 2 * (c[1] - a[1])
    r1 = b[0] ** 2 + b[1] ** 2 - a[0] ** 2 - a[1] ** 2
    r2 = c[0] ** 2 + c[1] ** 2 - a[0] ** 2 - a[1] ** 2
    d = a11 * a22 - a12 * a21
    return ((r1 * a22 - a12 * r2) / d, (a11 * r2 - r1 * a21) / d)


def inside_by_distance(a, b, c, x):
    """+1 inside, 0 on, -1 outside the circumcircle, by squared distances."""
    cx, cy = circumcenter_oracle(a, b, c)
    r2 = (Fraction(a[0]) - cx) ** 2 + (Fraction(a[1]) - cy) ** 2
    d2 = (Fraction(x[0]) - cx) ** 2 + (Fraction(x[1]) - cy) ** 2
    return (d2 < r2) - (d2 > r2)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("tests.test_acceptance")
    if module and module.VERDICTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(module.VERDICTS):
            terminalreporter.write_line(module.VERDICTS[number])
