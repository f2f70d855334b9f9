"""Validated, counterclockwise polygons and their vertex-level classifications."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (DegenerateAngle, DuplicateVertex, NotSimple, TooFewVertices,
                     ZeroArea)
from .predicates import (Point, common_denominator, coordinate, format_coordinate,
                         lifted_det, orient_sign, to_integers)


class VertexSign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


class ViolationKind(enum.Enum):
    COLLINEAR_TRIPLE = "collinear"
    CONCYCLIC_QUADRUPLE = "concyclic"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    indices: tuple[int, ...]


@dataclass(frozen=True)
class GenericityReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def is_generic(self) -> bool:
        return not self.violations


class Polygon:
    """An immutable simple polygon with counterclockwise vertex order.

    Use :func:`build_polygon` to construct one from untrusted input.  Indices
    passed to the accessor methods are reduced modulo ``n``.
    """

    __slots__ = ("vertices", "n", "ints", "scale", "_genericity", "_convex", "cache")

    def __init__(self, vertices: Sequence[Point]):
        self.vertices: tuple[Point, ...] = tuple(vertices)
        self.n = len(self.vertices)
        # Common-denominator integer image of the vertices; all predicates run on it.
        self.scale = common_denominator(self.vertices)
        self.ints: tuple[tuple[int, int], ...] = tuple(to_integers(self.vertices, self.scale))
        self._genericity = None
        self._convex = None
        # Memo for derived structures (triangulations) keyed by the computing module.
        self.cache: dict = {}

    def __getitem__(self, i: int) -> Point:
        return self.vertices[i % self.n]

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Polygon({list(self.vertices)!r})"

    def orient(self, i: int, j: int, k: int) -> int:
        n, p = self.n, self.ints
        return orient_sign(*p[i % n], *p[j % n], *p[k % n])

    def twice_area(self) -> Fraction:
        return Fraction(_twice_area(self.ints), self.scale ** 2)

    def area(self) -> Fraction:
        return self.twice_area() / 2

    def subpolygon(self, indices: Iterable[int]) -> "Polygon":
        """Polygon on a subset of vertices, in the given order, without revalidation."""
        return Polygon([self[i] for i in indices])

    def to_json(self) -> dict:
        return {"vertices": [[format_coordinate(p.x), format_coordinate(p.y)]
                             for p in self.vertices]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _twice_area(pts) -> int:
    s = 0
    n = len(pts)
    for k in range(n):
        x0, y0 = pts[k]
        x1, y1 = pts[(k + 1) % n]
        s += x0 * y1 - x1 * y0
    return s


def _on_segment(p, q, r) -> bool:
    """r collinear with pq lies within the closed segment pq."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_intersect(p1, p2, q1, q2) -> bool:
    """Closed-segment intersection test on exact coordinates."""
    d1 = orient_sign(*q1, *q2, *p1)
    d2 = orient_sign(*q1, *q2, *p2)
    d3 = orient_sign(*p1, *p2, *q1)
    d4 = orient_sign(*p1, *p2, *q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return ((d1 == 0 and _on_segment(q1, q2, p1)) or (d2 == 0 and _on_segment(q1, q2, p2))
            or (d3 == 0 and _on_segment(p1, p2, q1)) or (d4 == 0 and _on_segment(p1, p2, q2)))


def _check_simple(pts) -> None:
    n = len(pts)
    for e in range(n):
        a, b, c = pts[e], pts[(e + 1) % n], pts[(e + 2) % n]
        # Adjacent edges may only share their common vertex: no fold-back.
        if orient_sign(*a, *b, *c) == 0:
            if (a[0] - b[0]) * (c[0] - b[0]) + (a[1] - b[1]) * (c[1] - b[1]) > 0:
                raise NotSimple((e, (e + 1) % n), ((e + 1) % n, (e + 2) % n))
    for e in range(n):
        for f in range(e + 2, n):
            if e == 0 and f == n - 1:
                continue
            if segments_intersect(pts[e], pts[(e + 1) % n], pts[f], pts[(f + 1) % n]):
                raise NotSimple((e, (e + 1) % n), (f, (f + 1) % n))


def parse_points(raw: Iterable) -> list[Point]:
    return [Point(coordinate(x), coordinate(y)) for x, y in raw]


def build_polygon(points: Sequence) -> Polygon:
    """Validate a vertex cycle and normalize it to counterclockwise order.

    ``points`` may hold :class:`Point` values or ``(x, y)`` pairs of anything
    :func:`~vertex_extrema.predicates.coordinate` accepts.  A clockwise input
    is reversed keeping its first vertex in place.
    """
    pts = [p if isinstance(p, Point) else Point(coordinate(p[0]), coordinate(p[1]))
           for p in points]
    if len(pts) < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {len(pts)}")
    seen = {}
    for k, p in enumerate(pts):
        if p in seen:
            raise DuplicateVertex(seen[p], k)
        seen[p] = k
    ints = to_integers(pts)
    area = _twice_area(ints)
    if area == 0:
        raise ZeroArea("polygon has zero signed area")
    _check_simple(ints)
    if area < 0:
        pts = [pts[0]] + pts[:0:-1]
    return Polygon(pts)


def polygon_from_json(doc) -> Polygon:
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    raw = doc["vertices"]
    for pair in raw:
        if len(pair) != 2 or any(isinstance(v, float) for v in pair):
            raise ValueError(f"bad vertex {pair!r}: expected two integer/decimal/fraction strings")
    return build_polygon([(str(x), str(y)) for x, y in raw])


def is_convex(P: Polygon) -> bool:
    if P._convex is None:
        P._convex = all(P.orient(i - 1, i, i + 1) > 0 for i in range(P.n))
    return P._convex


def check_genericity(P: Polygon) -> GenericityReport:
    """Brute-force test of every vertex triple and quadruple."""
    if P._genericity is not None:
        return P._genericity
    pts = P.ints
    violations = []
    collinear = set()
    for t in combinations(range(P.n), 3):
        i, j, k = t
        if orient_sign(*pts[i], *pts[j], *pts[k]) == 0:
            collinear.add(t)
            violations.append(Violation(ViolationKind.COLLINEAR_TRIPLE, t))
    for q in combinations(range(P.n), 4):
        i, j, k, m = q
        if lifted_det(*pts[i], *pts[j], *pts[k], *pts[m]) == 0:
            if all(t in collinear for t in combinations(q, 3)):
                continue
            violations.append(Violation(ViolationKind.CONCYCLIC_QUADRUPLE, q))
    P._genericity = GenericityReport(violations)
    return P._genericity


def vertex_sign(P: Polygon, i: int) -> VertexSign:
    s = P.orient(i - 1, i, i + 1)
    if s == 0:
        raise DegenerateAngle(f"vertex {i % P.n} has a straight angle")
    return VertexSign.POSITIVE if s > 0 else VertexSign.NEGATIVE
