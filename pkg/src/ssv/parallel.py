"""Deterministic map over independent check cells.

Workers receive picklable argument tuples and return plain dicts; results
come back in submission order, so the emitted report never depends on the
worker count or scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence


def pmap(func: Callable, args_list: Sequence, workers: int = 1) -> list:
    """Apply ``func`` to each argument, order-preserving.

    ``workers <= 1`` runs inline; otherwise a process pool is used (the
    checks are CPU-bound exact arithmetic, so threads would not help).
    """
    if workers <= 1 or len(args_list) <= 1:
        return [func(a) for a in args_list]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, args_list))
