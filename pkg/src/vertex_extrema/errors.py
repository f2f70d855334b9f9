"""Exception hierarchy shared by every module of the package."""


class GeometryError(ValueError):
    """Base class for every error raised by :mod:`vertex_extrema`."""


class DegenerateCircle(GeometryError):
    """Three points that should define a circle are collinear."""


class DegenerateLine(GeometryError):
    """The two points defining a line coincide."""


class DegenerateReference(GeometryError):
    """The reference point used to orient a half-plane lies on its boundary line."""


class NonGenericInput(GeometryError):
    """A collinear or concyclic tie prevents a strict classification."""


class TooFewVertices(GeometryError):
    pass


class DuplicateVertex(GeometryError):
    def __init__(self, i, j):
        super().__init__(f"vertices {i} and {j} coincide")
        self.indices = (i, j)


class NotSimple(GeometryError):
    def __init__(self, e, f):
        super().__init__(f"edges {e} and {f} intersect")
        self.edges = (e, f)


class ZeroArea(GeometryError):
    pass


class DegenerateAngle(GeometryError):
    """A vertex angle is exactly pi (its two neighbours are collinear with it)."""


class NotGeneric(GeometryError):
    """The polygon has a collinear triple or a concyclic quadruple."""


class NotConvex(GeometryError):
    pass


class TilingViolation(GeometryError):
    """Certified triangles failed to tile the polygon; indicates a predicate bug."""


class IdenticalIndices(GeometryError):
    pass


class InvalidDiagonal(GeometryError):
    pass


class PartTooSmall(InvalidDiagonal):
    pass


class AdjacentVertices(InvalidDiagonal):
    pass


class DiagonalOutside(InvalidDiagonal):
    pass


class UnsupportedSize(GeometryError):
    pass


class GenerationExhausted(GeometryError):
    pass
