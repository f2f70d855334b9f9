"""Delaunay and anti-Delaunay (farthest-point) triangulations of convex polygons.

Both are built by brute force: every vertex triple is tested against every
other vertex and the certified triangles are kept.  Under genericity the
result is unique, and the tiling invariants are asserted before returning,
so the construction is its own oracle.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import IdenticalIndices, NotConvex, NotGeneric, TilingViolation, UnsupportedSize
from .polygon import Polygon, _twice_area, is_convex
from .predicates import incircle_sign, orient_sign


class TriangulationKind(enum.Enum):
    DELAUNAY = "delaunay"
    ANTI = "anti"


def _pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Triangulation:
    n: int
    kind: Optional[TriangulationKind]
    triangles: frozenset
    diagonals: frozenset

    @property
    def edges(self) -> frozenset:
        """Boundary edges and diagonals, as sorted index pairs."""
        return self.diagonals | {_pair(i, (i + 1) % self.n) for i in range(self.n)}

    def to_json(self) -> dict:
        return {"kind": self.kind.value if self.kind else "other",
                "triangles": [list(t) for t in sorted(self.triangles)],
                "diagonals": [list(d) for d in sorted(self.diagonals)]}


def _triangle_area2(pts, t) -> int:
    (ax, ay), (bx, by), (cx, cy) = (pts[k] for k in t)
    return abs((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def check_tiling(P: Polygon, triangles: Iterable[tuple[int, int, int]]) -> frozenset:
    """Verify that ``triangles`` tile the convex polygon ``P``; return the diagonals.

    Checks the triangle count, the exact area sum, and that each boundary
    edge is used once and each interior edge exactly twice.
    """
    triangles = list(triangles)
    n = P.n
    if len(triangles) != n - 2:
        raise TilingViolation(f"expected {n - 2} triangles, got {len(triangles)}")
    area = sum(_triangle_area2(P.ints, t) for t in triangles)
    if area != _twice_area(P.ints):
        raise TilingViolation("triangle areas do not sum to the polygon area")
    uses: dict[tuple[int, int], int] = {}
    for i, j, k in triangles:
        for e in (_pair(i, j), _pair(j, k), _pair(i, k)):
            uses[e] = uses.get(e, 0) + 1
    boundary = {_pair(i, (i + 1) % n) for i in range(n)}
    diagonals = set()
    for e, count in uses.items():
        expected = 1 if e in boundary else 2
        if count != expected:
            raise TilingViolation(f"edge {e} used {count} times, expected {expected}")
        if e not in boundary:
            diagonals.add(e)
    if not boundary <= uses.keys():
        raise TilingViolation("some boundary edge is not covered")
    if len(diagonals) != n - 3:
        raise TilingViolation(f"expected {n - 3} diagonals, got {len(diagonals)}")
    return frozenset(diagonals)


def _certified(P: Polygon, kind: TriangulationKind) -> Triangulation:
    if P.n < 4:
        raise UnsupportedSize("triangulation needs at least four vertices")
    if not is_convex(P):
        raise NotConvex("triangulations are only built for convex polygons")
    pts = P.ints
    want = 0 if kind is TriangulationKind.DELAUNAY else P.n - 3
    kept = []
    for t in combinations(range(P.n), 3):
        a, b, c = (pts[k] for k in t)
        if orient_sign(*a, *b, *c) == 0:
            raise NotGeneric(f"vertices {t} are collinear")
        inside = 0
        for k in range(P.n):
            if k in t:
                continue
            s = incircle_sign(*a, *b, *c, *pts[k])
            if s == 0:
                raise NotGeneric(f"vertex {k} is concyclic with {t}")
            inside += s > 0
        if inside == want:
            kept.append(t)
    diagonals = check_tiling(P, kept)
    return Triangulation(P.n, kind, frozenset(kept), diagonals)


def delaunay_triangulation(P: Polygon) -> Triangulation:
    key = ("triangulation", TriangulationKind.DELAUNAY)
    if key not in P.cache:
        P.cache[key] = _certified(P, TriangulationKind.DELAUNAY)
    return P.cache[key]


def anti_delaunay_triangulation(P: Polygon) -> Triangulation:
    key = ("triangulation", TriangulationKind.ANTI)
    if key not in P.cache:
        P.cache[key] = _certified(P, TriangulationKind.ANTI)
    return P.cache[key]


def triangulate(P: Polygon, kind: TriangulationKind | str) -> Triangulation:
    kind = TriangulationKind(kind)
    if kind is TriangulationKind.DELAUNAY:
        return delaunay_triangulation(P)
    return anti_delaunay_triangulation(P)


def from_diagonals(P: Polygon, diagonals: Iterable[tuple[int, int]]) -> Triangulation:
    """An arbitrary triangulation of a convex polygon given by its diagonals."""
    n = P.n
    diags = frozenset(_pair(i % n, j % n) for i, j in diagonals)
    edges = diags | {_pair(i, (i + 1) % n) for i in range(n)}
    triangles = [t for t in combinations(range(n), 3)
                 if all(e in edges for e in combinations(t, 2))]
    check_tiling(P, triangles)
    return Triangulation(n, None, frozenset(triangles), diags)


def _edge_key(P: Polygon, i: int, j: int) -> tuple[int, int]:
    i, j = i % P.n, j % P.n
    if i == j:
        raise IdenticalIndices(f"edge endpoints coincide ({i})")
    return _pair(i, j)


def edge_is_delaunay(P: Polygon, i: int, j: int) -> bool:
    """Whether some empty circle passes through ``V[i]`` and ``V[j]``."""
    return _edge_key(P, i, j) in delaunay_triangulation(P).edges


def edge_is_anti_delaunay(P: Polygon, i: int, j: int) -> bool:
    """Whether some full circle passes through ``V[i]`` and ``V[j]``."""
    return _edge_key(P, i, j) in anti_delaunay_triangulation(P).edges
