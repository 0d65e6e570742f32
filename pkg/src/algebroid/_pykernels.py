"""Pure-Python integer kernels.

Same interface as the compiled ``_kernels`` extension. Rows are lists of
Python ints; every stored row is primitive (content 1) with a positive pivot,
and pivot columns are cleared in all other rows, so the row space is held in
a fraction-free reduced echelon form.
"""

from __future__ import annotations

from math import gcd


def _primitive(row: list[int], piv: int) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if row[piv] < 0:
        g = -g
    if g not in (0, 1):
        row = [x // g for x in row]
    return row


class Echelon:
    """Incremental fraction-free Gauss-Jordan basis of a row space."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, row) -> list[int]:
        v = list(row)
        if len(v) != self.ncols:
            raise ValueError("row length %d != %d" % (len(v), self.ncols))
        for p, r in zip(self._pivots, self._rows):
            c = v[p]
            if c:
                rp = r[p]
                g = gcd(c, rp)
                a, b = rp // g, c // g
                v = [a * x - b * y for x, y in zip(v, r)]
        return v

    def insert(self, row) -> bool:
        return self.insert_residual(row) is not None

    def insert_residual(self, row) -> list[int] | None:
        """Insert ``row``; return its primitive residual if the rank grew."""
        v = self.reduce(row)
        piv = next((i for i, x in enumerate(v) if x), -1)
        if piv < 0:
            return None
        v = _primitive(v, piv)
        for idx, r in enumerate(self._rows):
            c = r[piv]
            if c:
                g = gcd(c, v[piv])
                a, b = v[piv] // g, c // g
                r = [a * x - b * y for x, y in zip(r, v)]
                self._rows[idx] = _primitive(r, self._pivots[idx])
        pos = 0
        while pos < len(self._pivots) and self._pivots[pos] < piv:
            pos += 1
        self._rows.insert(pos, v)
        self._pivots.insert(pos, piv)
        return list(v)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def pivots(self) -> list[int]:
        return list(self._pivots)


def _matmul_flat(x: list[int], y: list[int], n: int) -> list[int]:
    out = [0] * (n * n)
    for i in range(n):
        xi = x[i * n:(i + 1) * n]
        for k in range(n):
            c = xi[k]
            if c:
                yk = y[k * n:(k + 1) * n]
                base = i * n
                for j in range(n):
                    if yk[j]:
                        out[base + j] += c * yk[j]
    return out


def _matvec(m: list[int], v: list[int], n: int) -> list[int]:
    out = [0] * n
    for i in range(n):
        s = 0
        base = i * n
        for j in range(n):
            if v[j]:
                s += m[base + j] * v[j]
        out[i] = s
    return out


def spin_closure(seeds, ops, n: int, max_rounds: int) -> list[list[int]]:
    """Reduced basis of the smallest op-invariant space containing ``seeds``.

    ``ops`` are flattened row-major n x n integer matrices acting on columns.
    """
    ech = Echelon(n)
    frontier = []
    for s in seeds:
        r = ech.insert_residual(s)
        if r is not None:
            frontier.append(r)
    rounds = 0
    while frontier:
        rounds += 1
        if rounds > max_rounds:
            raise RuntimeError("spin closure did not stabilise")
        nxt = []
        for v in frontier:
            for op in ops:
                r = ech.insert_residual(_matvec(op, v, n))
                if r is not None:
                    nxt.append(r)
        frontier = nxt
    return ech.rows()


def envelope_closure(ops, n: int, max_rounds: int) -> list[list[int]]:
    """Reduced basis of the unital associative algebra generated by ``ops``."""
    nn = n * n
    ech = Echelon(nn)
    ident = [0] * nn
    for i in range(n):
        ident[i * n + i] = 1
    frontier = [ech.insert_residual(ident)]
    rounds = 0
    while frontier:
        rounds += 1
        if rounds > max_rounds:
            raise RuntimeError("envelope closure did not stabilise")
        nxt = []
        for x in frontier:
            for op in ops:
                r = ech.insert_residual(_matmul_flat(op, x, n))
                if r is not None:
                    nxt.append(r)
        frontier = nxt
    return ech.rows()
