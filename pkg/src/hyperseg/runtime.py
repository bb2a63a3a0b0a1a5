"""Process-wide execution settings: worker pool size and backend report.

Worker count only affects how patch tiles are distributed; every kernel
is bit-deterministic across any worker count, so this is purely a speed
knob. Resolution order: explicit set_workers() > HYPERSEG_WORKERS > 1.
"""

import os
from concurrent.futures import ThreadPoolExecutor

from . import _kernels

_workers = None
_pool = None
_pool_size = 0


def set_workers(n):
    global _workers
    if n is not None and n < 1:
        raise ValueError("worker count must be >= 1")
    _workers = n


def get_workers():
    if _workers is not None:
        return _workers
    env = os.environ.get("HYPERSEG_WORKERS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"HYPERSEG_WORKERS must be an integer, got {env!r}")
        if n < 1:
            raise ValueError("HYPERSEG_WORKERS must be >= 1")
        return n
    return 1


def pool(n):
    """Shared thread pool, resized lazily; callers pass the resolved count."""
    global _pool, _pool_size
    if _pool is None or _pool_size < n:
        if _pool is not None:
            _pool.shutdown(wait=True)
        _pool = ThreadPoolExecutor(max_workers=n)
        _pool_size = n
    return _pool


def backend():
    """Name of the active kernel backend ('cython' or 'python')."""
    return _kernels.BACKEND
