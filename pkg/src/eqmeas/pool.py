"""Optional process-pool fan-out for verification sweeps.

Results always come back in input order, so parallel runs are
indistinguishable from serial ones.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def thread_cap() -> int:
    """Parallelism cap from EQMEAS_THREADS; unset means serial."""
    raw = os.environ.get("EQMEAS_THREADS")
    if raw is None:
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise ValueError("EQMEAS_THREADS must be a positive integer, got %r" % (raw,))
    if jobs < 1:
        raise ValueError("EQMEAS_THREADS must be a positive integer, got %r" % (raw,))
    return jobs


def ordered_map(fn, items, jobs: int = 1) -> list:
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as ex:
        chunk = max(1, len(items) // (jobs * 4))
        return list(ex.map(fn, items, chunksize=chunk))
