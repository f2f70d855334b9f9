"""Exact orientation, in-circle and half-plane predicates.

Coordinates are :class:`fractions.Fraction` values.  Every predicate clears
denominators and evaluates its determinant over Python integers, so the sign
is exact; there is no epsilon anywhere.  The ``*_sign`` kernels take plain
integer (or any exact numeric) coordinates and are what the polygon-level
modules call in their inner loops.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Union

from .errors import DegenerateCircle, DegenerateLine, DegenerateReference, NonGenericInput

Number = Union[int, Fraction, str]


def coordinate(value: Number) -> Fraction:
    """Parse an int, Fraction or string (``"5"``, ``"1.25"``, ``"5/6"``) exactly."""
    if isinstance(value, float):
        raise TypeError("float coordinates are not accepted; pass a string or Fraction")
    return Fraction(value)


def format_coordinate(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: Number, y: Number) -> "Point":
        return cls(coordinate(x), coordinate(y))

    def __repr__(self):
        return f"Point({format_coordinate(self.x)}, {format_coordinate(self.y)})"


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class CircleSide(enum.Enum):
    INSIDE = "inside"
    ON = "on"
    OUTSIDE = "outside"


class HalfPlaneSide(enum.Enum):
    POSITIVE_SIDE = "positive"
    ON_LINE = "on"
    NEGATIVE_SIDE = "negative"


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


# -- integer kernels ---------------------------------------------------------

def orient_sign(ax, ay, bx, by, cx, cy) -> int:
    """Sign of the cross product (b - a) x (c - a)."""
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def lifted_det(ax, ay, bx, by, cx, cy, dx, dy):
    """The 4x4 lifted (paraboloid) determinant, expanded relative to ``d``.

    Positive when ``d`` is inside the circle through a counterclockwise
    triangle ``a, b, c``.
    """
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (adx * (bdy * clift - blift * cdy)
            - ady * (bdx * clift - blift * cdx)
            + alift * (bdx * cdy - bdy * cdx))


def incircle_sign(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    """+1 inside, 0 on, -1 outside the circle through a, b, c (any order).

    Returns None when a, b, c are collinear.
    """
    o = orient_sign(ax, ay, bx, by, cx, cy)
    if o == 0:
        return None
    return o * _sgn(lifted_det(ax, ay, bx, by, cx, cy, dx, dy))


def common_denominator(points) -> int:
    den = 1
    for p in points:
        den = lcm(den, p.x.denominator, p.y.denominator)
    return den


def to_integers(points, den: int | None = None) -> list[tuple[int, int]]:
    """Scale points by the lcm of their denominators; predicate signs are preserved."""
    if den is None:
        den = common_denominator(points)
    if den == 1:
        return [(p.x.numerator, p.y.numerator) for p in points]
    return [(int(p.x * den), int(p.y * den)) for p in points]


# -- point-level predicates --------------------------------------------------

def orient(a: Point, b: Point, c: Point) -> Sign:
    (ax, ay), (bx, by), (cx, cy) = to_integers((a, b, c))
    return Sign(orient_sign(ax, ay, bx, by, cx, cy))


_SIDE = {1: CircleSide.INSIDE, 0: CircleSide.ON, -1: CircleSide.OUTSIDE}


def in_circle(a: Point, b: Point, c: Point, x: Point) -> CircleSide:
    """Position of ``x`` relative to the circle through ``a, b, c``.

    The answer does not depend on the order of ``a, b, c``.
    """
    s = incircle_sign(*(v for p in to_integers((a, b, c, x)) for v in p))
    if s is None:
        raise DegenerateCircle(f"{a}, {b}, {c} are collinear")
    return _SIDE[s]


def are_concyclic(a: Point, b: Point, c: Point, d: Point) -> bool:
    pts = to_integers((a, b, c, d))
    flat = [v for p in pts for v in p]
    if lifted_det(*flat) != 0:
        return False
    triples = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
    if all(orient_sign(*pts[i], *pts[j], *pts[k]) == 0 for i, j, k in triples):
        raise DegenerateCircle("all four points are collinear")
    return True


def half_plane_side(a: Point, b: Point, reference: Point, query: Point) -> HalfPlaneSide:
    """Side of line ``ab`` that ``query`` lies on; the positive side holds ``reference``."""
    if a == b:
        raise DegenerateLine(f"{a} repeated")
    (ax, ay), (bx, by), (rx, ry), (qx, qy) = to_integers((a, b, reference, query))
    ref = orient_sign(ax, ay, bx, by, rx, ry)
    if ref == 0:
        raise DegenerateReference(f"{reference} lies on the line through {a}, {b}")
    s = ref * orient_sign(ax, ay, bx, by, qx, qy)
    if s > 0:
        return HalfPlaneSide.POSITIVE_SIDE
    if s < 0:
        return HalfPlaneSide.NEGATIVE_SIDE
    return HalfPlaneSide.ON_LINE


def is_generic_quadruple(a: Point, b: Point, c: Point, d: Point) -> bool:
    pts = to_integers((a, b, c, d))
    for i, j, k in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        if orient_sign(*pts[i], *pts[j], *pts[k]) == 0:
            return False
    return lifted_det(*(v for p in pts for v in p)) != 0


def prop24_verify(A: Point, B: Point, C: Point, X: Point) -> bool:
    """Check the circle/half-plane implication for one generic configuration.

    With ``C_B`` the circle through A, B, C, ``C_A`` the circle through X, A, B
    and ``H+`` the side of line AB containing C:

    ==================  ========================
    X                   C
    ==================  ========================
    in C_B, in H+       in H+, outside C_A
    out of C_B, in H+   inside C_A
    in C_B, in H-       inside C_A
    out of C_B, in H-   in H+, outside C_A
    ==================  ========================
    """
    if not is_generic_quadruple(A, B, C, X):
        raise NonGenericInput("points must have no collinear triple and not be concyclic")
    x_upper = half_plane_side(A, B, C, X) is HalfPlaneSide.POSITIVE_SIDE
    x_in_cb = in_circle(A, B, C, X) is CircleSide.INSIDE
    c_in_ca = in_circle(X, A, B, C) is CircleSide.INSIDE
    # C is on its own half-plane by construction, so only the disc matters.
    expect_inside = x_upper != x_in_cb
    return c_in_ca == expect_inside


def circumcenter(a: Point, b: Point, c: Point) -> Point:
    """Exact circumcenter of a non-degenerate triangle."""
    bx, by = b.x - a.x, b.y - a.y
    cx, cy = c.x - a.x, c.y - a.y
    d = 2 * (bx * cy - by * cx)
    if d == 0:
        raise DegenerateCircle(f"{a}, {b}, {c} are collinear")
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    return Point(a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d)
