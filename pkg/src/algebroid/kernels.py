"""Kernel selection.

The compiled extension is used when it imports; setting
``ALGEBROID_PURE_PYTHON=1`` forces the pure-Python twin. Either way a call
that overflows int64 in the compiled path is retried in pure Python, so
results never depend on which backend ran.
"""

from __future__ import annotations

import os

from . import _pykernels

COMPILED = None
if not os.environ.get("ALGEBROID_PURE_PYTHON"):
    try:
        from . import _kernels as COMPILED  # type: ignore[no-redef]
    except ImportError:  # extension not built
        COMPILED = None

BACKEND = "compiled" if COMPILED is not None else "python"


def _dispatch(name, *args):
    if COMPILED is not None:
        try:
            return getattr(COMPILED, name)(*args)
        except OverflowError:
            pass
    return getattr(_pykernels, name)(*args)


def echelon_rows(rows, ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free reduced echelon basis of the span of integer ``rows``."""
    rows = [list(r) for r in rows]
    if COMPILED is not None:
        try:
            ech = COMPILED.Echelon(ncols)
            for r in rows:
                ech.insert(r)
            return ech.rows(), ech.pivots()
        except OverflowError:
            pass
    ech = _pykernels.Echelon(ncols)
    for r in rows:
        ech.insert(r)
    return ech.rows(), ech.pivots()


def spin_closure(seeds, ops, n: int, max_rounds: int) -> list[list[int]]:
    return _dispatch("spin_closure", seeds, ops, n, max_rounds)


def envelope_closure(ops, n: int, max_rounds: int) -> list[list[int]]:
    return _dispatch("envelope_closure", ops, n, max_rounds)
