"""Global and local extremality of polygon vertices.

``C_i`` is the circle through ``V[i-1], V[i], V[i+1]``.  A vertex is globally
maximal when ``C_i`` is empty (no other vertex strictly inside) and globally
minimal when ``C_i`` is full (every other vertex strictly inside).  Local
extremality compares the discrete curvature of adjacent vertices.

Sign conventions follow the literature: maxima are counted by ``s_minus`` and
``l_minus``, minima by ``s_plus`` and ``l_plus``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateAngle, NotGeneric, UnsupportedSize
from .polygon import Polygon, VertexSign, vertex_sign
from .predicates import incircle_sign


class NeighborCircleClass(enum.Enum):
    EMPTY = "empty"
    FULL = "full"
    NEITHER = "neither"


class CurvatureOrder(enum.Enum):
    GREATER = ">"
    LESS = "<"


class Extremum(enum.Enum):
    MAX = "max"
    MIN = "min"
    NONE = "none"


@dataclass(frozen=True)
class ExtremalityReport:
    n: int
    global_labels: Optional[tuple[Extremum, ...]] = None
    local_labels: Optional[tuple[Extremum, ...]] = None

    @staticmethod
    def _count(labels, kind):
        return None if labels is None else sum(1 for x in labels if x is kind)

    @property
    def s_minus(self):
        return self._count(self.global_labels, Extremum.MAX)

    @property
    def s_plus(self):
        return self._count(self.global_labels, Extremum.MIN)

    @property
    def l_minus(self):
        return self._count(self.local_labels, Extremum.MAX)

    @property
    def l_plus(self):
        return self._count(self.local_labels, Extremum.MIN)

    def to_json(self) -> dict:
        vertices = []
        for i in range(self.n):
            entry = {"index": i}
            if self.global_labels is not None:
                entry["global"] = self.global_labels[i].value
            if self.local_labels is not None:
                entry["local"] = self.local_labels[i].value
            vertices.append(entry)
        return {"n": self.n, "s_plus": self.s_plus, "s_minus": self.s_minus,
                "l_plus": self.l_plus, "l_minus": self.l_minus, "vertices": vertices}


def _require_size(P: Polygon) -> None:
    if P.n < 4:
        raise UnsupportedSize("extremality needs at least four vertices")


def circle_side(P: Polygon, i: int, k: int) -> int:
    """+1 if vertex ``k`` is strictly inside ``C_i``, -1 if strictly outside."""
    n, p = P.n, P.ints
    s = incircle_sign(*p[(i - 1) % n], *p[i % n], *p[(i + 1) % n], *p[k % n])
    if s is None:
        raise NotGeneric(f"vertices {(i - 1) % n}, {i % n}, {(i + 1) % n} are collinear")
    if s == 0:
        raise NotGeneric(f"vertex {k % n} lies on the circle C_{i % n}")
    return s


def classify_neighbor_circle(P: Polygon, i: int) -> NeighborCircleClass:
    _require_size(P)
    inside = 0
    for k in range(i + 2, i + P.n - 1):
        if circle_side(P, i, k) > 0:
            inside += 1
    if inside == 0:
        return NeighborCircleClass.EMPTY
    if inside == P.n - 3:
        return NeighborCircleClass.FULL
    return NeighborCircleClass.NEITHER


_GLOBAL = {NeighborCircleClass.EMPTY: Extremum.MAX,
           NeighborCircleClass.FULL: Extremum.MIN,
           NeighborCircleClass.NEITHER: Extremum.NONE}


def global_classification(P: Polygon) -> ExtremalityReport:
    labels = tuple(_GLOBAL[classify_neighbor_circle(P, i)] for i in range(P.n))
    return ExtremalityReport(P.n, global_labels=labels)


def _sign(P: Polygon, i: int) -> VertexSign:
    try:
        return vertex_sign(P, i)
    except DegenerateAngle as exc:
        raise NotGeneric(str(exc)) from exc


def curvature_compare(P: Polygon, i: int) -> CurvatureOrder:
    """Discrete curvature order between ``V[i]`` and ``V[i+1]``.

    With ``V[i]`` positive: ``V[i] > V[i+1]`` when ``V[i+1]`` is positive and
    ``V[i+2]`` is outside ``C_i``, or ``V[i+1]`` is negative and ``V[i+2]`` is
    inside.  For a negative ``V[i]`` the rule swaps greater/less together with
    inside/outside; the two swaps cancel, so the table is the same.  Only the
    all-positive row is exercised by convex polygons.
    """
    _require_size(P)
    _sign(P, i)
    outside = circle_side(P, i, i + 2) < 0
    if _sign(P, i + 1) is VertexSign.POSITIVE:
        greater = outside
    else:
        greater = not outside
    return CurvatureOrder.GREATER if greater else CurvatureOrder.LESS


def local_classification(P: Polygon) -> ExtremalityReport:
    order = [curvature_compare(P, i) for i in range(P.n)]
    labels = []
    for i in range(P.n):
        before, after = order[i - 1], order[i]
        if before is CurvatureOrder.LESS and after is CurvatureOrder.GREATER:
            labels.append(Extremum.MAX)
        elif before is CurvatureOrder.GREATER and after is CurvatureOrder.LESS:
            labels.append(Extremum.MIN)
        else:
            labels.append(Extremum.NONE)
    return ExtremalityReport(P.n, local_labels=tuple(labels))


def local_by_circle_criterion(P: Polygon) -> tuple[Extremum, ...]:
    """Local labels of a convex polygon read off ``C_i`` directly.

    ``V[i]`` is a local maximum iff ``V[i-2]`` and ``V[i+2]`` are both outside
    ``C_i`` and a local minimum iff both are inside.  Independent of
    :func:`curvature_compare`; used to cross-check it.
    """
    _require_size(P)
    labels = []
    for i in range(P.n):
        a = circle_side(P, i, i - 2)
        b = circle_side(P, i, i + 2)
        if a < 0 and b < 0:
            labels.append(Extremum.MAX)
        elif a > 0 and b > 0:
            labels.append(Extremum.MIN)
        else:
            labels.append(Extremum.NONE)
    return tuple(labels)


def analyze(P: Polygon) -> ExtremalityReport:
    report = P.cache.get("extremality")
    if report is None:
        report = ExtremalityReport(P.n, global_classification(P).global_labels,
                                   local_classification(P).local_labels)
        P.cache["extremality"] = report
    return report
