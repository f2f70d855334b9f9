"""Mechanical checks of the extremality inequalities and lemmas.

Every check returns :class:`VerificationRecord` values that encode a claim as
a material implication: a record passes when its hypotheses fail or its
conclusion holds.  Claim tags name the statement being checked, e.g.
``"thm3.1-minus"`` or ``"lemma4.2-max"``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .decomposition import Decomposition, Diagonal, decompose, part_sizes, valid_diagonals
from .errors import UnsupportedSize
from .extremality import Extremum, analyze, local_by_circle_criterion
from .polygon import Polygon, is_convex
from .predicates import Point, is_generic_quadruple, prop24_verify
from .triangulation import Triangulation, delaunay_triangulation, edge_is_anti_delaunay, edge_is_delaunay

CLAIM_FAMILIES = (
    "prop2.1", "prop2.2", "prop2.3", "prop2.4", "remark2.1",
    "thm3.1", "lemma3.1", "lemma3.2", "cor3.1",
    "thm4.1", "lemma4.1", "lemma4.2", "lemma4.3", "cor4.1", "locality",
)
DECOMPOSITION_FAMILIES = ("thm3.1", "lemma3.2", "thm4.1", "lemma4.1", "lemma4.2", "lemma4.3",
                          "locality")


@dataclass(frozen=True)
class VerificationRecord:
    claim: str
    n: int
    hypotheses_hold: bool
    conclusion_holds: bool
    diagonal: Optional[tuple[int, int]] = None
    witness: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.hypotheses_hold or self.conclusion_holds

    def to_json(self) -> dict:
        return {"claim": self.claim, "n": self.n,
                "diagonal": list(self.diagonal) if self.diagonal else None,
                "hypotheses": self.hypotheses_hold, "conclusion": self.conclusion_holds,
                "passed": self.passed, "witness": self.witness}

    def sort_key(self):
        return (self.claim, self.diagonal or (-1, -1), repr(sorted(self.witness.items())))


def claim_selected(tag: str, claims: Optional[Iterable[str]]) -> bool:
    """Whether ``tag`` matches one of ``claims`` exactly or as a ``family-variant``."""
    if claims is None:
        return True
    return any(tag == c or tag.startswith(c + "-") for c in claims)


def family_wanted(family: str, claims: Optional[Iterable[str]]) -> bool:
    return claims is None or any(c.split("-")[0] == family for c in claims)


def _counts(P: Polygon) -> dict:
    r = analyze(P)
    return {"s_plus": r.s_plus, "s_minus": r.s_minus, "l_plus": r.l_plus, "l_minus": r.l_minus}


# -- single-polygon claims ---------------------------------------------------

def check_prop_2_1(P: Polygon) -> VerificationRecord:
    r = analyze(P)
    return VerificationRecord("prop2.1", P.n, is_convex(P), r.l_plus == r.l_minus,
                              witness={"l_plus": r.l_plus, "l_minus": r.l_minus})


def check_prop_2_2(P: Polygon) -> VerificationRecord:
    """Global maxima are local maxima and global minima are local minima."""
    r = analyze(P)
    bad = [i for i, (g, loc) in enumerate(zip(r.global_labels, r.local_labels))
           if g is not Extremum.NONE and g is not loc]
    return VerificationRecord("prop2.2", P.n, is_convex(P), not bad, witness={"vertices": bad})


def check_prop_2_3(P: Polygon) -> VerificationRecord:
    counts = _counts(P)
    return VerificationRecord("prop2.3", P.n, P.n == 4 and is_convex(P),
                              all(v == 2 for v in counts.values()), witness=counts)


def check_remark_2_1(P: Polygon) -> VerificationRecord:
    """The circle criterion and the curvature-order definition give the same local labels."""
    by_order = analyze(P).local_labels
    by_circle = local_by_circle_criterion(P)
    bad = [i for i in range(P.n) if by_order[i] is not by_circle[i]]
    return VerificationRecord("remark2.1", P.n, is_convex(P), not bad, witness={"vertices": bad})


def check_prop_2_4(A: Point, B: Point, C: Point, X: Point) -> VerificationRecord:
    generic = is_generic_quadruple(A, B, C, X)
    ok = prop24_verify(A, B, C, X) if generic else False
    pts = [[str(p.x), str(p.y)] for p in (A, B, C, X)]
    return VerificationRecord("prop2.4", 4, generic, ok, witness={"points": pts})


def check_four_vertex(P: Polygon) -> tuple[VerificationRecord, VerificationRecord]:
    """The global and local four-vertex inequalities.

    Quadrilaterals are accepted and checked for exactly four extremal
    vertices of each kind; pentagons are outside the claims.
    """
    if P.n == 5 or P.n < 4:
        raise UnsupportedSize(f"four-vertex claims cover n = 4 and n >= 6, not n = {P.n}")
    r = analyze(P)
    counts = _counts(P)
    convex = is_convex(P)
    s, l = r.s_plus + r.s_minus, r.l_plus + r.l_minus
    if P.n == 4:
        return (VerificationRecord("prop2.3-global", 4, convex, s == 4 and r.s_plus == 2, witness=counts),
                VerificationRecord("prop2.3-local", 4, convex, l == 4 and r.l_plus == 2, witness=counts))
    return (VerificationRecord("cor3.1", P.n, convex, s >= 4, witness=counts),
            VerificationRecord("cor4.1", P.n, convex, l >= 4, witness=counts))


def check_lemma_3_1(P: Polygon, T: Triangulation) -> VerificationRecord:
    """Some diagonal of ``T`` splits ``P`` into two parts of at least four vertices.

    The claim is only made for n >= 7; callers keep to that.  On a hexagon the
    record can fail, which is how the zigzag counterexample shows up.
    """
    witness = None
    for i, j in sorted(T.diagonals):
        if min(part_sizes(P.n, Diagonal(i, j))) >= 4:
            witness = [i, j]
            break
    return VerificationRecord("lemma3.1", P.n, is_convex(P), witness is not None,
                              witness={"diagonal": witness,
                                       "triangulation": T.kind.value if T.kind else "other"})


# -- decomposition claims ----------------------------------------------------

def _dec_witness(dec: Decomposition, key_minus: str, key_plus: str) -> dict:
    r, r1, r2 = analyze(dec.parent), analyze(dec.p1), analyze(dec.p2)
    return {"P": [getattr(r, key_minus), getattr(r, key_plus)],
            "P1": [getattr(r1, key_minus), getattr(r1, key_plus)],
            "P2": [getattr(r2, key_minus), getattr(r2, key_plus)]}


def _gain_inequality(dec: Decomposition, attr: str) -> bool:
    r, r1, r2 = analyze(dec.parent), analyze(dec.p1), analyze(dec.p2)
    return getattr(r, attr) >= getattr(r1, attr) + getattr(r2, attr) - 2


def _hyp_base(dec: Decomposition) -> bool:
    return dec.parent.n >= 6 and is_convex(dec.parent)


def check_theorem_3_1(dec: Decomposition) -> tuple[VerificationRecord, VerificationRecord]:
    """Delaunay diagonal: s_minus gains at most two.  Anti-Delaunay: s_plus likewise."""
    P, d = dec.parent, dec.diagonal
    base = _hyp_base(dec)
    w = _dec_witness(dec, "s_minus", "s_plus")
    dl = edge_is_delaunay(P, d.i, d.j)
    adl = edge_is_anti_delaunay(P, d.i, d.j)
    return (VerificationRecord("thm3.1-minus", P.n, base and dl, _gain_inequality(dec, "s_minus"),
                               (d.i, d.j), {**w, "delaunay": dl}),
            VerificationRecord("thm3.1-plus", P.n, base and adl, _gain_inequality(dec, "s_plus"),
                               (d.i, d.j), {**w, "anti_delaunay": adl}))


def check_lemma_3_2(dec: Decomposition) -> tuple[VerificationRecord, VerificationRecord]:
    """Hexagons: both global inequalities hold for every diagonal."""
    P, d = dec.parent, dec.diagonal
    hyp = P.n == 6 and is_convex(P)
    w = _dec_witness(dec, "s_minus", "s_plus")
    return (VerificationRecord("lemma3.2-minus", P.n, hyp, _gain_inequality(dec, "s_minus"), (d.i, d.j), w),
            VerificationRecord("lemma3.2-plus", P.n, hyp, _gain_inequality(dec, "s_plus"), (d.i, d.j), w))


def check_theorem_4_1(dec: Decomposition) -> tuple[VerificationRecord, VerificationRecord]:
    """l_minus gains at most two; the l_plus record is the mirrored consequence."""
    P, d = dec.parent, dec.diagonal
    base = _hyp_base(dec)
    w = _dec_witness(dec, "l_minus", "l_plus")
    return (VerificationRecord("thm4.1-minus", P.n, base, _gain_inequality(dec, "l_minus"), (d.i, d.j), w),
            VerificationRecord("thm4.1-plus", P.n, base, _gain_inequality(dec, "l_plus"), (d.i, d.j), w))


@dataclass(frozen=True)
class _Placement:
    """Named vertices of one lemma configuration, as parent indices."""
    B: int
    D: int
    A: int  # neighbour of B in the first part
    C: int  # neighbour of B in the second part
    E: int  # neighbour of D in the first part
    F: int  # neighbour of D in the second part
    first: int  # which part plays P1 (1 or 2)


def lemma_placements(dec: Decomposition) -> list[_Placement]:
    """All four ways to name the diagonal endpoints and parts."""
    n = dec.parent.n
    i, j = dec.diagonal.i, dec.diagonal.j
    out = []
    # p1 holds i+1 .. j-1, p2 holds j+1 .. i-1
    for B, D, b1, b2, d1, d2 in ((i, j, i + 1, i - 1, j - 1, j + 1),
                                 (j, i, j - 1, j + 1, i + 1, i - 1)):
        for first in (1, 2):
            if first == 1:
                A, C, E, F = b1, b2, d1, d2
            else:
                A, C, E, F = b2, b1, d2, d1
            out.append(_Placement(B, D, A % n, C % n, E % n, F % n, first))
    return out


def check_local_lemmas(dec: Decomposition) -> list[VerificationRecord]:
    """Every placement of the three local-decomposition lemmas, max and min variants.

    The maximal versions are the stated lemmas; the minimal versions are the
    same implications with every "maximal" read as "minimal".
    """
    P = dec.parent
    n = P.n
    base = _hyp_base(dec)
    in_parent = analyze(P).local_labels
    parts = {1: analyze(dec.p1).local_labels, 2: analyze(dec.p2).local_labels}

    def in_part(which, v):
        return parts[which][dec.local_index(which, v)]

    records = []
    d = (dec.diagonal.i, dec.diagonal.j)
    for pl in lemma_placements(dec):
        one, two = pl.first, 3 - pl.first
        for kind in (Extremum.MAX, Extremum.MIN):
            gained_a = in_part(one, pl.A) is kind and in_parent[pl.A] is not kind
            h41 = gained_a and in_part(two, pl.C) is kind and in_parent[pl.C] is not kind
            h42 = gained_a and in_part(two, pl.B) is kind
            h43 = (in_part(one, pl.A) is kind and in_part(one, pl.D) is kind
                   and in_part(two, pl.D) is kind and in_parent[pl.D] is not kind)
            witness = {"A": pl.A, "B": pl.B, "C": pl.C, "D": pl.D, "E": pl.E, "F": pl.F,
                       "P1": "first" if one == 1 else "second"}
            v = kind.value
            records.append(VerificationRecord(f"lemma4.1-{v}", n, base and h41,
                                              in_parent[pl.B] is kind, d, witness))
            records.append(VerificationRecord(f"lemma4.2-{v}", n, base and h42,
                                              in_parent[pl.B] is kind, d, witness))
            records.append(VerificationRecord(f"lemma4.3-{v}", n, base and h43,
                                              in_parent[pl.A] is kind, d, witness))
    return records


def check_locality(dec: Decomposition) -> VerificationRecord:
    """Only the diagonal endpoints and their neighbours can change local label."""
    n = dec.parent.n
    i, j = dec.diagonal.i, dec.diagonal.j
    affected = {i % n, j % n, (i + 1) % n, (i - 1) % n, (j + 1) % n, (j - 1) % n}
    in_parent = analyze(dec.parent).local_labels
    changed = []
    for which in (1, 2):
        poly, m = dec.part(which)
        labels = analyze(poly).local_labels
        changed += [v for k, v in enumerate(m) if v not in affected and labels[k] is not in_parent[v]]
    return VerificationRecord("locality", n, _hyp_base(dec), not changed, (i, j),
                              {"changed": sorted(changed)})


# -- drivers -----------------------------------------------------------------

def decomposition_records(dec: Decomposition, claims=None) -> list[VerificationRecord]:
    records = []
    if family_wanted("thm3.1", claims):
        records += check_theorem_3_1(dec)
    if dec.parent.n == 6 and family_wanted("lemma3.2", claims):
        records += check_lemma_3_2(dec)
    if family_wanted("thm4.1", claims):
        records += check_theorem_4_1(dec)
    if any(family_wanted(f, claims) for f in ("lemma4.1", "lemma4.2", "lemma4.3")):
        records += check_local_lemmas(dec)
    if family_wanted("locality", claims):
        records.append(check_locality(dec))
    return [r for r in records if claim_selected(r.claim, claims)]


def polygon_records(P: Polygon, claims=None) -> list[VerificationRecord]:
    """Every applicable claim on one generic convex polygon, sorted by claim tag."""
    records = [check_prop_2_1(P), check_prop_2_2(P), check_remark_2_1(P)]
    if P.n == 4:
        records.append(check_prop_2_3(P))
    if P.n >= 6:
        records += check_four_vertex(P)
    if P.n >= 7:
        records.append(check_lemma_3_1(P, delaunay_triangulation(P)))
    records = [r for r in records if claim_selected(r.claim, claims)]
    if any(family_wanted(f, claims) for f in DECOMPOSITION_FAMILIES):
        for d in valid_diagonals(P):
            records += decomposition_records(decompose(P, d), claims)
    return sorted(records, key=VerificationRecord.sort_key)
