"""Thread-pool plumbing shared by the enumeration and sampling drivers.

Work is always split into fixed-size chunks and merged in chunk order, so
results are identical for every thread count; threads only change the wall
time.  The compiled kernels release the GIL, which is what makes threads
(rather than processes) worthwhile here.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

THREADS_ENV_VAR = "LITTLEWOOD_THREADS"


def default_threads(threads: int | None = None) -> int:
    """Explicit argument, else the environment default, else the CPU count."""
    if threads is not None:
        if threads < 1:
            raise ValueError(f"thread count must be positive, got {threads}")
        return threads
    env = os.environ.get(THREADS_ENV_VAR)
    if env:
        value = int(env)
        if value < 1:
            raise ValueError(f"{THREADS_ENV_VAR} must be positive, got {env}")
        return value
    return os.cpu_count() or 1


def map_ordered(fn: Callable, args_list: Sequence[tuple], threads: int) -> list:
    """fn(*args) for each tuple, results in input order regardless of threads."""
    if threads <= 1 or len(args_list) <= 1:
        return [fn(*args) for args in args_list]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(fn, *args) for args in args_list]
        return [f.result() for f in futures]
