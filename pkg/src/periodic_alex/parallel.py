"""Deterministic process fan-out for exhaustive scans.

Scans partition on the values of one coordinate; each worker returns a
set and the results merge by union, so the outcome is identical for any
job count.  The fork start method (where available) keeps workers usable
from unguarded scripts and interactive sessions.
"""

from __future__ import annotations

import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")


def merged_union(
    worker: Callable[[tuple[int, ...]], set[T]], values: Iterable[int], jobs: int
) -> set[T]:
    values = list(values)
    if jobs <= 1 or len(values) <= 1:
        return worker(tuple(values))
    chunks = [tuple(values[i::jobs]) for i in range(jobs) if values[i::jobs]]
    method = "fork" if "fork" in multiprocessing.get_all_start_methods() else None
    ctx = multiprocessing.get_context(method)
    with ProcessPoolExecutor(max_workers=len(chunks), mp_context=ctx) as pool:
        return set().union(*pool.map(worker, chunks))
