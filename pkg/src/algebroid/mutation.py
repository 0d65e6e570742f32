"""Single-entry mutants of structure-constant tables, for testing the checkers."""

from __future__ import annotations

from dataclasses import replace
from itertools import product
from typing import Iterator

from .calg import CommAlg
from .tca import TCA
from .valgd import VertexAlgebroid

VA_TABLES = ("mul", "mact", "brk", "pair", "act", "partial")
TCA_TABLES = ("act0", "brk0", "pair1", "partial")


def _bump_matrix(m, r: int, c: int):
    rows = [list(row) for row in m]
    rows[r][c] += 1
    return tuple(tuple(row) for row in rows)


def _table_mutants(obj, name: str):
    if name == "partial":
        p = obj.partial
        for r, c in product(range(len(p)), range(len(p[0]) if p else 0)):
            yield (name, r, c), replace(obj, partial=_bump_matrix(p, r, c))
        return
    t = obj.a.mul if name == "mul" else getattr(obj, name)
    for i, j, k in product(*(range(n) for n in t.dims)):
        bumped = t.with_entry(i, j, k, t.get(i, j, k) + 1)
        if name == "mul":
            yield (name, i, j, k), replace(obj, a=CommAlg(obj.a.dim, obj.a.unit, bumped))
        else:
            yield (name, i, j, k), replace(obj, **{name: bumped})


def mutants(obj) -> Iterator[tuple[tuple, object]]:
    """Every mutant obtained by adding 1 to one dense table entry.

    Yields (where, mutant) with ``where`` = (table, indices...). The unit of
    A is not a table and is left alone.
    """
    if isinstance(obj, VertexAlgebroid):
        names = VA_TABLES
    elif isinstance(obj, TCA):
        names = TCA_TABLES
    else:
        raise TypeError("no mutation scheme for %r" % type(obj))
    for name in names:
        yield from _table_mutants(obj, name)
