"""Deterministic order-preserving parallel map over picklable jobs."""

from __future__ import annotations

import multiprocessing
import os


def worker_count(requested: int | None = None) -> int:
    """Resolve a worker count: explicit argument, then OCC_WORKERS, then 1."""
    if requested is not None and requested > 0:
        return requested
    env = os.environ.get("OCC_WORKERS", "")
    if env.isdigit() and int(env) > 0:
        return int(env)
    return 1


def parallel_map(fn, items, workers: int):
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    ctx = multiprocessing.get_context("fork" if "fork" in
                                      multiprocessing.get_all_start_methods() else "spawn")
    chunk = max(1, len(items) // (workers * 4))
    with ctx.Pool(workers) as pool:
        return pool.map(fn, items, chunksize=chunk)
