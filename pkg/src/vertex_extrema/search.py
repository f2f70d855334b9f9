"""Seeded counterexample search over generated polygons.

Trial ``t`` of a search with base seed ``s`` uses the polygon seed
``derive_seed(s, t)``; its vertex count and its random four-point
configuration come from sub-streams of that seed.  A violation therefore
replays from ``(seed, n, diagonal)`` alone.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import IO, Iterator, Optional

from .decomposition import decompose
from .errors import GeometryError
from .extremality import analyze
from .generator import GenSpec, SplitMix64, derive_seed, random_generic_convex, random_points
from .predicates import Point, is_generic_quadruple
from .verification import (CLAIM_FAMILIES, VerificationRecord, check_prop_2_4, claim_selected,
                           decomposition_records, polygon_records)

THREADS_ENV = "VERTEX_EXTREMA_THREADS"
PROP24_SCALE = 1000


@dataclass(frozen=True)
class SearchConfig:
    trials: int
    n_min: int = 6
    n_max: int = 10
    seed: int = 1
    claims: Optional[tuple[str, ...]] = None
    output: Optional[str] = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.n_min < 4 or self.n_max < self.n_min:
            raise ValueError("need 4 <= n_min <= n_max")
        if self.claims is not None:
            unknown = [c for c in self.claims if c.split("-")[0] not in CLAIM_FAMILIES]
            if unknown:
                raise ValueError(f"unknown claims: {', '.join(unknown)}")


@dataclass
class ClaimTally:
    records: int = 0
    fired: int = 0
    violations: int = 0


@dataclass
class SearchReport:
    trials_run: int = 0
    records_evaluated: int = 0
    violations: list[dict] = field(default_factory=list)
    claims: dict[str, ClaimTally] = field(default_factory=dict)
    # (n, s_minus, s_plus, l_minus) per trial polygon, for the summary figure
    counts: list[tuple[int, int, int, int]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"trials_run": self.trials_run, "records_evaluated": self.records_evaluated,
                "violations": self.violations,
                "claims": {k: asdict(v) for k, v in sorted(self.claims.items())},
                "elapsed": round(self.elapsed, 3)}


def trial_parameters(cfg: SearchConfig, t: int) -> tuple[int, int]:
    """(polygon seed, vertex count) of trial ``t``."""
    seed = derive_seed(cfg.seed, t)
    span = cfg.n_max - cfg.n_min + 1
    return seed, cfg.n_min + derive_seed(seed, 0) % span


def random_quadruple(seed: int) -> list[Point]:
    rng = SplitMix64(derive_seed(seed, 1))
    while True:
        pts = [Point.of(x, y) for x, y in random_points(rng, 4, PROP24_SCALE)]
        if is_generic_quadruple(*pts):
            return pts


def run_trial(cfg: SearchConfig, t: int) -> tuple[list[dict], Optional[tuple]]:
    """Records of one trial as JSON-ready dicts, plus the polygon's counts."""
    seed, n = trial_parameters(cfg, t)
    rows: list[VerificationRecord] = []
    counts = None
    try:
        P = random_generic_convex(GenSpec(n, seed))
        rows = polygon_records(P, cfg.claims)
        r = analyze(P)
        counts = (n, r.s_minus, r.s_plus, r.l_minus)
    except GeometryError as exc:
        rows = [VerificationRecord("internal-error", n, True, False,
                                   witness={"error": f"{type(exc).__name__}: {exc}"})]
    if claim_selected("prop2.4", cfg.claims):
        rows.append(check_prop_2_4(*random_quadruple(seed)))
    out = []
    for r in sorted(rows, key=VerificationRecord.sort_key):
        doc = r.to_json()
        doc["trial"] = t
        doc["seed"] = seed
        out.append(doc)
    return out, counts


def _run_chunk(args) -> list:
    cfg, start, stop = args
    return [run_trial(cfg, t) for t in range(start, stop)]


def worker_count(requested: Optional[int] = None) -> int:
    workers = requested or os.cpu_count() or 1
    cap = os.environ.get(THREADS_ENV)
    if cap:
        workers = min(workers, max(1, int(cap)))
    return max(1, workers)


def iter_trials(cfg: SearchConfig, workers: int = 1, chunk: int = 64) -> Iterator[tuple]:
    """Trial results in trial order, whatever the worker count."""
    if workers <= 1 or cfg.trials <= chunk:
        for t in range(cfg.trials):
            yield run_trial(cfg, t)
        return
    jobs = [(cfg, s, min(s + chunk, cfg.trials)) for s in range(0, cfg.trials, chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for results in pool.map(_run_chunk, jobs):
            yield from results


def execute_search(cfg: SearchConfig, stream: Optional[IO[str]] = None,
                   workers: int = 1) -> SearchReport:
    """Run every trial; write one JSON record per line to ``stream`` if given."""
    report = SearchReport()
    started = time.perf_counter()
    for rows, counts in iter_trials(cfg, workers):
        report.trials_run += 1
        if counts is not None:
            report.counts.append(counts)
        for doc in rows:
            report.records_evaluated += 1
            tally = report.claims.setdefault(doc["claim"], ClaimTally())
            tally.records += 1
            tally.fired += doc["hypotheses"]
            if not doc["passed"]:
                tally.violations += 1
                report.violations.append({"claim": doc["claim"], "seed": doc["seed"],
                                          "n": doc["n"], "diagonal": doc["diagonal"],
                                          "witness": doc["witness"]})
            if stream is not None:
                stream.write(json.dumps(doc, sort_keys=True) + "\n")
    report.elapsed = time.perf_counter() - started
    return report


def replay(seed: int, n: int, claims=None, diagonal=None) -> list[VerificationRecord]:
    """Recompute the records of one polygon, optionally for a single diagonal."""
    P = random_generic_convex(GenSpec(n, seed))
    if diagonal is None:
        return polygon_records(P, claims)
    return decomposition_records(decompose(P, tuple(diagonal)), claims)
