"""Kernel backend selection.

The compiled core is used when importable; HYPERSEG_BACKEND=python forces
the numpy fallback, HYPERSEG_BACKEND=cython makes a missing extension an
error instead of a silent fallback. Both backends implement the same
signatures and produce bit-identical forward results.
"""

import os

from . import pykernels

BACKEND = "python"
_impl = pykernels

_forced = os.environ.get("HYPERSEG_BACKEND", "auto")
if _forced not in ("auto", "python", "cython"):
    raise RuntimeError(f"HYPERSEG_BACKEND must be auto|python|cython, got {_forced!r}")

if _forced != "python":
    try:
        from . import _fast

        BACKEND = "cython"
        _impl = _fast
    except ImportError:
        if _forced == "cython":
            raise RuntimeError(
                "HYPERSEG_BACKEND=cython but the compiled extension is not built")


def active():
    """Returns (backend name, module) for the selected implementation."""
    return BACKEND, _impl
