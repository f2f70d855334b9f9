"""Exact extremal-vertex analysis and decomposition checks for generic polygons."""
from .decomposition import Decomposition, Diagonal, decompose, valid_diagonals
from .extremality import (CurvatureOrder, ExtremalityReport, Extremum, NeighborCircleClass, analyze,
                          classify_neighbor_circle, curvature_compare, global_classification,
                          local_by_circle_criterion, local_classification)
from .generator import GenSpec, random_generic_convex
from .polygon import (GenericityReport, Polygon, VertexSign, build_polygon, check_genericity,
                      is_convex, polygon_from_json, vertex_sign)
from .predicates import (CircleSide, HalfPlaneSide, Point, Sign, are_concyclic, half_plane_side,
                         in_circle, orient, prop24_verify)
from .triangulation import (Triangulation, TriangulationKind, anti_delaunay_triangulation,
                            delaunay_triangulation, edge_is_anti_delaunay, edge_is_delaunay)
from .verification import (VerificationRecord, check_four_vertex, check_lemma_3_1,
                           check_lemma_3_2, check_local_lemmas, check_theorem_3_1,
                           check_theorem_4_1)

__version__ = "0.1.0"
