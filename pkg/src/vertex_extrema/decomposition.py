"""Cutting a convex polygon along a vertex-to-vertex diagonal."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import AdjacentVertices, DiagonalOutside, NotGeneric, PartTooSmall
from .polygon import Polygon, check_genericity, is_convex


@dataclass(frozen=True, order=True)
class Diagonal:
    i: int
    j: int

    def __post_init__(self):
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    def as_list(self) -> list[int]:
        return [self.i, self.j]


def part_sizes(n: int, d: Diagonal) -> tuple[int, int]:
    return d.j - d.i + 1, n - (d.j - d.i) + 1


def valid_diagonals(P: Polygon) -> list[Diagonal]:
    """Diagonals leaving at least four vertices on each side; empty when n <= 5."""
    n = P.n
    return [Diagonal(i, j) for i in range(n) for j in range(i + 3, n)
            if n - (j - i) + 1 >= 4]


@dataclass(frozen=True)
class Decomposition:
    """The two parts of ``parent`` on either side of ``diagonal``.

    ``p1`` runs ``V[i], ..., V[j]`` and ``p2`` runs ``V[j], ..., V[i]``
    cyclically; ``p1_map[k]`` / ``p2_map[k]`` give the parent index of the
    part's ``k``-th vertex.
    """
    parent: Polygon
    diagonal: Diagonal
    p1: Polygon
    p2: Polygon
    p1_map: tuple[int, ...]
    p2_map: tuple[int, ...]

    def part(self, which: int) -> tuple[Polygon, tuple[int, ...]]:
        return (self.p1, self.p1_map) if which == 1 else (self.p2, self.p2_map)

    def local_index(self, which: int, parent_index: int) -> int:
        return self.part(which)[1].index(parent_index % self.parent.n)


def decompose(P: Polygon, d: Diagonal | tuple[int, int]) -> Decomposition:
    """Split a generic convex polygon along ``d``.

    Both parts are checked for convexity.  They are generic because their
    vertex sets are subsets of the parent's, which is checked here.
    """
    if not isinstance(d, Diagonal):
        d = Diagonal(*d)
    n = P.n
    i, j = d.i % n, d.j % n
    d = Diagonal(i, j)
    i, j = d.i, d.j
    if j - i <= 1 or (i == 0 and j == n - 1):
        raise AdjacentVertices(f"{i} and {j} are adjacent or equal")
    if min(part_sizes(n, d)) < 4:
        raise PartTooSmall(f"diagonal {i},{j} leaves a part with fewer than 4 vertices")
    if not is_convex(P):
        raise DiagonalOutside("decomposition is only supported for convex polygons")
    if not check_genericity(P).is_generic:
        raise NotGeneric("parent polygon is not generic")
    m1 = tuple(range(i, j + 1))
    m2 = tuple(k % n for k in range(j, i + n + 1))
    p1, p2 = P.subpolygon(m1), P.subpolygon(m2)
    assert is_convex(p1) and is_convex(p2)
    return Decomposition(P, d, p1, p2, m1, m2)
