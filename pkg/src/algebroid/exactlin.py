"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`, vectors are tuples of Fractions and
matrices are tuples of row tuples acting on column vectors. Subspaces are
stored as their reduced row-echelon basis, so equality is syntactic.

Row reduction, spinning and envelope closure run through the integer kernels
in :mod:`algebroid.kernels`. Each row (or operator) is scaled to integers
first, which never changes a span.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from . import kernels

Rat = Fraction
Vector = tuple
Matrix = tuple

_RAT_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


class DimensionError(ValueError):
    """Raised when operands live in spaces of different dimensions."""


def parse_rat(text) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (ints are accepted as-is)."""
    if isinstance(text, bool):
        raise ValueError("not a rational: %r" % (text,))
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValueError("not a rational: %r" % (text,))
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError("not a rational: %r" % (text,))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError("zero denominator: %r" % (text,))
    return Fraction(int(m.group(1)), den)


def format_rat(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


# -- vectors -----------------------------------------------------------------

def vector(xs: Iterable) -> Vector:
    return tuple(Fraction(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError("length %d != %d" % (len(u), len(v)))
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError("length %d != %d" % (len(u), len(v)))
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in v)


def lincomb(terms: Iterable[tuple], n: int) -> Vector:
    """Sum of ``c * v`` over ``(c, v)`` pairs, in dimension ``n``."""
    out = [Fraction(0)] * n
    for c, v in terms:
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return tuple(out)


def is_zero(v: Iterable) -> bool:
    return not any(v)


def support(v: Sequence) -> Iterator[tuple[int, Fraction]]:
    return ((i, x) for i, x in enumerate(v) if x)


# -- matrices ----------------------------------------------------------------

def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vector(r) for r in rows)


def zeros(r: int, c: int) -> Matrix:
    return tuple(zero_vector(c) for _ in range(r))


def identity(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def shape(m: Matrix, cols: int | None = None) -> tuple[int, int]:
    if not m:
        return 0, (cols or 0)
    return len(m), len(m[0])


def transpose(m: Matrix, cols: int | None = None) -> Matrix:
    r, c = shape(m, cols)
    return tuple(tuple(m[i][j] for i in range(r)) for j in range(c))


def matvec(m: Matrix, v: Sequence) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, v) if a and b), Fraction(0)) for row in m)


def matmul(x: Matrix, y: Matrix) -> Matrix:
    yt = transpose(y)
    return tuple(
        tuple(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in yt)
        for row in x
    )


def mat_sub(x: Matrix, y: Matrix) -> Matrix:
    return tuple(sub(a, b) for a, b in zip(x, y))


def mat_scale(c, m: Matrix) -> Matrix:
    return tuple(scale(c, r) for r in m)


def trace(m: Matrix) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def flatten(m: Matrix) -> Vector:
    return tuple(x for row in m for x in row)


def unflatten(v: Sequence, n: int) -> Matrix:
    return tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n))


def _integer_row(v: Sequence) -> list[int]:
    den = 1
    for x in v:
        if x:
            den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in v]


def _integer_matrix(m: Matrix) -> list[int]:
    return _integer_row(flatten(m))


def _to_rref(int_rows: list[list[int]], pivots: list[int]) -> Matrix:
    return tuple(
        tuple(Fraction(x, row[p]) for x in row) for row, p in zip(int_rows, pivots)
    )


def rref(m: Matrix, cols: int | None = None) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row-echelon form of ``m`` with zero rows dropped.

    Returns ``(rows, rank, pivots)``. ``cols`` fixes the width when ``m`` has
    no rows.
    """
    ncols = len(m[0]) if m else (cols or 0)
    int_rows, pivots = kernels.echelon_rows([_integer_row(r) for r in m], ncols)
    return _to_rref(int_rows, pivots), len(pivots), tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def nullspace(m: Matrix, cols: int | None = None) -> list[Vector]:
    """Basis of ``{x : m x = 0}``; one vector per free column."""
    ncols = len(m[0]) if m else (cols or 0)
    rows, _, pivots = rref(m, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * ncols
        x[fcol] = Fraction(1)
        for row, p in zip(rows, pivots):
            x[p] = -row[fcol]
        basis.append(tuple(x))
    return basis


# -- subspaces ---------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held as its RREF basis."""

    ambient_dim: int
    basis: Matrix = ()

    def __post_init__(self):
        piv = []
        for row in self.basis:
            if len(row) != self.ambient_dim:
                raise DimensionError("basis row of length %d in Q^%d" % (len(row), self.ambient_dim))
            p = next((j for j, x in enumerate(row) if x), None)
            if p is None or row[p] != 1 or (piv and p <= piv[-1]):
                raise ValueError("basis is not in reduced row-echelon form")
            piv.append(p)
        object.__setattr__(self, "pivots", tuple(piv))

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vs = [vector(v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise DimensionError("vector of length %d in Q^%d" % (len(v), ambient_dim))
        rows, _, piv = rref(tuple(vs), ambient_dim)
        return cls(ambient_dim, rows)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, identity(n))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls.span((unit_vector(n, i) for i in sorted(set(indices))), n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after clearing every pivot coordinate."""
        out = list(vector(v))
        if len(out) != self.ambient_dim:
            raise DimensionError("vector of length %d in Q^%d" % (len(out), self.ambient_dim))
        for row, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] -= c * x
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return is_zero(self.reduce(v))

    __contains__ = contains

    def issubset(self, other: "Subspace") -> bool:
        _check_same(self, other)
        return all(other.contains(r) for r in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubset(other)

    def complement_indices(self) -> tuple[int, ...]:
        """Non-pivot coordinates; they index the canonical quotient basis."""
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in piv)

    def quotient_coords(self, v: Sequence) -> Vector:
        r = self.reduce(v)
        return tuple(r[j] for j in self.complement_indices())

    def lift(self, coords: Sequence) -> Vector:
        out = [Fraction(0)] * self.ambient_dim
        for j, c in zip(self.complement_indices(), coords):
            out[j] = Fraction(c)
        return tuple(out)

    def coords_in_basis(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` in this subspace's RREF basis (v must lie in it)."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return tuple(Fraction(v[p]) for p in self.pivots)


def _check_same(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise DimensionError("ambient dimensions %d and %d differ" % (u.ambient_dim, v.ambient_dim))


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_same(u, v)
    return Subspace.span(u.basis + v.basis, u.ambient_dim)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection via the kernel of ``[U^T | -V^T]``."""
    _check_same(u, v)
    n = u.ambient_dim
    if u.is_zero() or v.is_zero():
        return Subspace.zero(n)
    du = u.dim
    stacked = tuple(
        tuple(u.basis[a][i] for a in range(du)) + tuple(-v.basis[b][i] for b in range(v.dim))
        for i in range(n)
    )
    kern = nullspace(stacked, du + v.dim)
    vecs = [lincomb(((k[a], u.basis[a]) for a in range(du)), n) for k in kern]
    return Subspace.span(vecs, n)


def contains(u: Subspace, w: Sequence) -> bool:
    return u.contains(w)


def image(m: Matrix, cols: int) -> Subspace:
    """Column space of ``m`` (rows = output coordinates)."""
    return Subspace.span(transpose(m, cols), len(m))


def kernel(m: Matrix, cols: int) -> Subspace:
    return Subspace.span(nullspace(m, cols), cols)


# -- closures ----------------------------------------------------------------

def _check_ops(ops: Sequence[Matrix], n: int) -> None:
    for op in ops:
        if len(op) != n or any(len(r) != n for r in op):
            raise DimensionError("operator is not %dx%d" % (n, n))


def spin(seeds: Iterable[Sequence], ops: Sequence[Matrix], n: int) -> Subspace:
    """Smallest subspace containing ``seeds`` and invariant under ``ops``."""
    ops = list(ops)
    _check_ops(ops, n)
    seed_rows = []
    for s in seeds:
        if len(s) != n:
            raise DimensionError("seed of length %d in Q^%d" % (len(s), n))
        seed_rows.append(_integer_row(s))
    int_rows = kernels.spin_closure(seed_rows, [_integer_matrix(op) for op in ops], n, n + 1)
    return Subspace.span(int_rows, n)


def envelope(ops: Sequence[Matrix], n: int) -> Subspace:
    """Unital associative algebra generated by ``ops``, inside Q^(n*n).

    Operators are flattened row-major.
    """
    ops = list(ops)
    _check_ops(ops, n)
    int_rows = kernels.envelope_closure([_integer_matrix(op) for op in ops], n, n * n + 1)
    return Subspace.span(int_rows, n * n)


# -- linear systems ----------------------------------------------------------

@dataclass(frozen=True)
class LinearSolution:
    particular: Vector
    kernel: tuple[Vector, ...]


def solve_linear(a: Matrix, b: Sequence, cols: int | None = None) -> LinearSolution | None:
    """Solve ``a x = b`` exactly; ``None`` when inconsistent."""
    ncols = len(a[0]) if a else (cols or 0)
    if len(b) != len(a):
        raise DimensionError("rhs length %d != %d rows" % (len(b), len(a)))
    aug = tuple(tuple(row) + (Fraction(bi),) for row, bi in zip(a, b))
    rows, _, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(rows, pivots):
        x[p] = row[ncols]
    return LinearSolution(tuple(x), tuple(nullspace(a, ncols)))


# -- eigenvalues -------------------------------------------------------------

def char_poly(m: Matrix) -> list[Fraction]:
    """Coefficients of det(tI - m), highest degree first (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [Fraction(1)]
    mk = zeros(n, n)
    ident = identity(n)
    c = Fraction(1)
    for k in range(1, n + 1):
        mk = matmul(m, tuple(add(r, scale(c, e)) for r, e in zip(mk, ident)))
        c = -trace(mk) / k
        coeffs.append(c)
    return coeffs


def rational_roots(coeffs: Sequence) -> list[Fraction]:
    """Distinct rational roots of a polynomial, sorted."""
    import sympy

    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction)
                       else sympy.Rational(c) for c in coeffs], t, domain="QQ")
    if poly.is_zero:
        raise ValueError("zero polynomial")
    roots = sympy.roots(poly, filter="Q")
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


def rational_eigenvalues(m: Matrix) -> list[Fraction]:
    if not m:
        return []
    return rational_roots(char_poly(m))


# -- bilinear tables ---------------------------------------------------------

@dataclass(frozen=True)
class Trilinear:
    """Structure constants of a bilinear map: b_i o b_j = sum_k c[i,j,k] b_k."""

    dims: tuple[int, int, int]
    entries: Mapping = field(default_factory=dict)

    def __post_init__(self):
        dl, dr, do = self.dims
        clean = {}
        for key, c in dict(self.entries).items():
            i, j, k = key
            if not (0 <= i < dl and 0 <= j < dr and 0 <= k < do):
                raise IndexError("entry %r outside dims %r" % (key, self.dims))
            c = Fraction(c)
            if c:
                clean[(i, j, k)] = c
        pairs: dict = {}
        for (i, j, k), c in sorted(clean.items()):
            pairs.setdefault((i, j), []).append((k, c))
        object.__setattr__(self, "entries", clean)
        object.__setattr__(self, "_pairs", {key: tuple(v) for key, v in pairs.items()})

    @classmethod
    def from_entries(cls, dims, items: Iterable[tuple]) -> "Trilinear":
        data: dict = {}
        for i, j, k, c in items:
            data[(i, j, k)] = data.get((i, j, k), Fraction(0)) + Fraction(c)
        return cls(tuple(dims), data)

    @classmethod
    def from_function(cls, dims, fn) -> "Trilinear":
        """Build from ``fn(i, j) -> vector`` on basis pairs."""
        dl, dr, do = dims
        data = {}
        for i in range(dl):
            for j in range(dr):
                for k, c in enumerate(fn(i, j)):
                    if c:
                        data[(i, j, k)] = Fraction(c)
        return cls(tuple(dims), data)

    def get(self, i: int, j: int, k: int) -> Fraction:
        return self.entries.get((i, j, k), Fraction(0))

    def basis_product(self, i: int, j: int) -> Vector:
        out = [Fraction(0)] * self.dims[2]
        for k, c in self._pairs.get((i, j), ()):
            out[k] = c
        return tuple(out)

    def __call__(self, x: Sequence, y: Sequence) -> Vector:
        out = [Fraction(0)] * self.dims[2]
        ys = [(j, b) for j, b in enumerate(y) if b]
        pairs = self._pairs
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in ys:
                terms = pairs.get((i, j))
                if terms:
                    ab = a * b
                    for k, c in terms:
                        out[k] += ab * c
        return tuple(out)

    def left_operator(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> x o y`` (d_out x d_right)."""
        dr, do = self.dims[1], self.dims[2]
        cols = [self(x, unit_vector(dr, j)) for j in range(dr)]
        return tuple(tuple(cols[j][k] for j in range(dr)) for k in range(do))

    def right_operator(self, y: Sequence) -> Matrix:
        """Matrix of ``x -> x o y`` (d_out x d_left)."""
        dl, do = self.dims[0], self.dims[2]
        cols = [self(unit_vector(dl, i), y) for i in range(dl)]
        return tuple(tuple(cols[i][k] for i in range(dl)) for k in range(do))

    def sorted_entries(self) -> list[tuple[int, int, int, Fraction]]:
        return [(i, j, k, c) for (i, j, k), c in sorted(self.entries.items())]

    def with_entry(self, i: int, j: int, k: int, value) -> "Trilinear":
        data = dict(self.entries)
        data[(i, j, k)] = Fraction(value)
        return Trilinear(self.dims, data)

    def is_zero(self) -> bool:
        return not self.entries
