"""Acceptance criteria, each run at full size with exact arithmetic.

Every test records a one-line verdict in ``VERDICTS``; the terminal summary
hook in ``conftest.py`` prints them after the run.
"""
import time
from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest

from vertex_extrema import GenSpec, random_generic_convex
from vertex_extrema.cli import main
from vertex_extrema.decomposition import decompose, valid_diagonals
from vertex_extrema.extremality import Extremum, analyze, local_by_circle_criterion
from vertex_extrema.generator import SplitMix64, derive_seed, random_points
from vertex_extrema.predicates import Point, is_generic_quadruple, prop24_verify
from vertex_extrema.triangulation import (anti_delaunay_triangulation, check_tiling,
                                          delaunay_triangulation, from_diagonals)
from vertex_extrema.verification import (check_four_vertex, check_lemma_3_1, check_lemma_3_2,
                                         check_local_lemmas, check_theorem_3_1, check_theorem_4_1)

from .conftest import corpus

VERDICTS: dict[int, str] = {}


def verdict(number, name, ok, detail=""):
    VERDICTS[number] = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {name}" + (
        f" ({detail})" if detail else "")
    print(VERDICTS[number])
    assert ok, VERDICTS[number]


@pytest.fixture(scope="module")
def corpus_4_12():
    started = time.perf_counter()
    polys = [(P, analyze(P)) for P in corpus(5000, 4, 12, base_seed=101)]
    return polys, time.perf_counter() - started


@pytest.fixture(scope="module")
def corpus_6_12():
    return list(corpus(5000, 6, 12, base_seed=202))


@pytest.fixture(scope="module")
def sweep():
    """Every valid diagonal of 2000 polygons with n in [6, 12]."""
    decs = []
    for P in corpus(2000, 6, 12, base_seed=303):
        decs += [decompose(P, d) for d in valid_diagonals(P)]
    return decs


def test_01_local_max_min_balance(corpus_4_12):
    polys, elapsed = corpus_4_12
    bad = sum(r.l_plus != r.l_minus for _, r in polys)
    verdict(1, "l+ = l- on 5000 polygons, n in [4, 12]", bad == 0 and elapsed < 60,
            f"{bad} exceptions, {elapsed:.1f}s")


def test_02_global_implies_local(corpus_4_12):
    polys, _ = corpus_4_12
    bad = sum(1 for _, r in polys for g, loc in zip(r.global_labels, r.local_labels)
              if g is not Extremum.NONE and loc is not g)
    verdict(2, "global extrema are local extrema of the same kind", bad == 0, f"{bad} exceptions")


def test_03_quadrilateral_counts():
    bad = 0
    for P in corpus(1000, 4, 4, base_seed=404):
        r = analyze(P)
        bad += (r.s_plus, r.s_minus, r.l_plus, r.l_minus) != (2, 2, 2, 2)
    verdict(3, "quadrilaterals: s+ = s- = l+ = l- = 2 over 1000", bad == 0, f"{bad} exceptions")


def test_04_circle_half_plane_table():
    rng = SplitMix64(505)
    trials = bad = 0
    while trials < 10_000:
        pts = [Point.of(x, y) for x, y in random_points(rng, 4, 1000)]
        if not is_generic_quadruple(*pts):
            continue
        trials += 1
        bad += not prop24_verify(*pts)
    verdict(4, "circle/half-plane implication on 10000 quadruples", bad == 0, f"{bad} failures")


def test_05_four_vertex(corpus_6_12):
    bad = 0
    for P in corpus_6_12:
        bad += sum(not r.passed for r in check_four_vertex(P))
    verdict(5, "s+ + s- >= 4 and l+ + l- >= 4 on 5000 polygons, n in [6, 12]", bad == 0,
            f"{bad} violations")


def test_06_global_decomposition_inequalities(sweep):
    tally = Counter()
    for dec in sweep:
        records = list(check_theorem_3_1(dec))
        if dec.parent.n == 6:
            records += check_lemma_3_2(dec)
        for r in records:
            tally[r.claim, "fired"] += r.hypotheses_hold
            tally[r.claim, "bad"] += not r.passed
    bad = sum(v for (_, k), v in tally.items() if k == "bad")
    fired = {c: v for (c, k), v in sorted(tally.items()) if k == "fired"}
    verdict(6, "global decomposition inequalities on Delaunay / anti-Delaunay diagonals",
            bad == 0 and all(fired.values()), f"{bad} violations, fired {fired}")


def test_07_local_decomposition_inequalities(sweep):
    bad = sum(not r.passed for dec in sweep for r in check_theorem_4_1(dec))
    verdict(7, "l- and l+ decomposition inequalities on every valid diagonal", bad == 0,
            f"{bad} violations over {len(sweep)} diagonals")


def test_08_local_lemmas(sweep):
    fired, bad = Counter(), Counter()
    for dec in sweep:
        for r in check_local_lemmas(dec):
            fired[r.claim] += r.hypotheses_hold
            bad[r.claim] += not r.passed
    non_vacuous = all(fired[f"lemma4.{k}-max"] > 0 for k in (1, 2))
    detail = ", ".join(f"{c} fired {fired[c]}" for c in sorted(fired))
    if fired["lemma4.3-max"] == 0:
        detail += "; lemma4.3-max never fired"
    verdict(8, "local-decomposition lemmas as implications", sum(bad.values()) == 0 and non_vacuous,
            detail)


def _twice_area(pts):
    return sum(a.x * b.y - b.x * a.y for a, b in zip(pts, pts[1:] + pts[:1]))


def test_09_triangulation_oracle():
    bad = []
    for P in corpus(1000, 4, 12, base_seed=606):
        r = analyze(P)
        whole = _twice_area(list(P.vertices))
        for T, kind in ((delaunay_triangulation(P), Extremum.MAX),
                        (anti_delaunay_triangulation(P), Extremum.MIN)):
            edges = Counter(e for t in T.triangles for e in combinations(t, 2))
            boundary = {tuple(sorted((i, (i + 1) % P.n))) for i in range(P.n)}
            ok = (len(T.triangles) == P.n - 2
                  and sum(_twice_area([P[a], P[b], P[c]]) for a, b, c in T.triangles) == whole
                  and all(edges[e] == (1 if e in boundary else 2) for e in edges)
                  and boundary <= set(edges)
                  and check_tiling(P, T.triangles) == T.diagonals)
            for i in range(P.n):
                ear = tuple(sorted({(i - 1) % P.n, i, (i + 1) % P.n}))
                ok &= (r.global_labels[i] is kind) == (ear in T.triangles)
            if not ok:
                bad.append(P.n)
    verdict(9, "both triangulations tile with n-2 triangles; ears match global extrema",
            not bad, f"{len(bad)} failures over 1000 polygons")


def test_10_circle_criterion_agreement(corpus_4_12):
    polys, _ = corpus_4_12
    bad = sum(local_by_circle_criterion(P) != r.local_labels for P, r in polys)
    verdict(10, "circle criterion agrees with curvature-order local labels", bad == 0,
            f"{bad} disagreeing polygons")


def test_11_splitting_diagonals(corpus_6_12):
    big = [P for P in corpus_6_12 if P.n >= 7]
    bad = sum(not check_lemma_3_1(P, delaunay_triangulation(P)).conclusion_holds for P in big)
    P6 = random_generic_convex(GenSpec(6, derive_seed(707, 0)))
    zigzag = check_lemma_3_1(P6, from_diagonals(P6, [(0, 2), (2, 4), (4, 0)]))
    verdict(11, "Delaunay triangulations (n >= 7) split; n = 6 zigzag does not",
            bad == 0 and not zigzag.conclusion_holds,
            f"{bad} of {len(big)} without a splitting diagonal")


def test_12_determinism(tmp_path, capsys):
    streams = []
    for run in range(2):
        out = tmp_path / f"run{run}.jsonl"
        code = main(["search", "--trials", "200", "--n-min", "6", "--n-max", "10", "--seed", "1",
                     "--out", str(out), "--no-figures"])
        assert code == 0
        streams.append(out.read_bytes())
    capsys.readouterr()
    verdict(12, "search record streams are byte-identical across runs",
            streams[0] == streams[1] and len(streams[0]) > 0, f"{len(streams[0])} bytes")
