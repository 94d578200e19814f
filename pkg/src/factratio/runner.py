"""Sweep driver: runs a claim over its parameter ranges.

Points are generated in ascending lexicographic order and results merged
in exactly that order, so the report content never depends on the worker
count.  Workers are stateless separate processes; only (claim id, point)
tuples cross the boundary, and each worker resolves the checker from its
own imported registry.
"""

from __future__ import annotations

import concurrent.futures
import os
import time

from .registry import ClaimRecord, check_point, get_claim, points_for, resolve_ranges
from .reports import RunReport

DEFAULT_WORKERS_ENV = "FACTRATIO_WORKERS"


def default_workers() -> int:
    value = os.environ.get(DEFAULT_WORKERS_ENV, "")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def _eval_point(task: tuple[str, tuple[int, ...]]) -> tuple[int, list[dict]]:
    claim_id, point = task
    return check_point(claim_id, point)


def run_claim(
    claim_id: str,
    ranges: dict[str, int] | None = None,
    workers: int | None = None,
) -> RunReport:
    claim: ClaimRecord = get_claim(claim_id)
    resolved = resolve_ranges(claim, ranges)
    if workers is None:
        workers = default_workers()
    workers = max(1, workers)

    points = points_for(claim, resolved)
    tasks = [(claim.id, point) for point in points]

    start = time.perf_counter()
    if workers == 1 or len(points) < 2:
        outcomes = [_eval_point(task) for task in tasks]
    else:
        chunk = max(1, len(tasks) // (workers * 8))
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_eval_point, tasks, chunksize=chunk))
    wall = time.perf_counter() - start

    report = RunReport(
        claim_id=claim.id,
        kind=claim.kind,
        description=claim.description,
        anchor=claim.anchor,
        conjecture=claim.conjecture,
        ranges=resolved,
        wall_time_s=wall,
    )
    for checked, failures in outcomes:
        report.checked += checked
        report.failed += len(failures)
        report.counterexamples.extend(failures)
    report.passed = report.checked - report.failed
    return report
