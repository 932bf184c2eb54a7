"""Thread pool helper; results always come back in input order."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def default_threads() -> int:
    env = os.environ.get("QRD_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


_threads: int | None = None


def set_threads(n: int | None) -> None:
    global _threads
    _threads = n


def map_chunks(fn, chunks, threads: int | None = None) -> list:
    n = threads or _threads or default_threads()
    if n <= 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    # numpy kernels release the GIL, so threads give real speedup here
    with ThreadPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, chunks))
