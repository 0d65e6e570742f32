"""Unital commutative associative algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .exactlin import (
    DimensionError, Subspace, Trilinear, kernel, lincomb, matmul, rational_eigenvalues,
    scale, sub, trace, unit_vector, vector,
)
from .report import AxiomViolation, PreconditionError


@dataclass(frozen=True)
class CommAlg:
    dim: int
    unit: tuple
    mul: Trilinear

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("an algebra with unit has dimension >= 1")
        object.__setattr__(self, "unit", vector(self.unit))
        if len(self.unit) != self.dim:
            raise DimensionError("unit has length %d, expected %d" % (len(self.unit), self.dim))
        if tuple(self.mul.dims) != (self.dim, self.dim, self.dim):
            raise DimensionError("product table dims %r do not match %d" % (self.mul.dims, self.dim))

    def basis(self, i: int) -> tuple:
        return unit_vector(self.dim, i)

    def times(self, x: Sequence, y: Sequence) -> tuple:
        return self.mul(x, y)

    def left_mult(self, x: Sequence):
        return self.mul.left_operator(x)

    def power(self, x: Sequence, k: int) -> tuple:
        out = self.unit
        for _ in range(k):
            out = self.mul(out, x)
        return out


def check_comm_assoc(a: CommAlg) -> list[AxiomViolation]:
    out = []
    n = a.dim
    e = [a.basis(i) for i in range(n)]
    for i in range(n):
        lhs, rhs = a.mul(a.unit, e[i]), e[i]
        if lhs != rhs:
            out.append(AxiomViolation("unit", (("A", i),), lhs, rhs))
    for i in range(n):
        for j in range(i + 1, n):
            lhs, rhs = a.mul.basis_product(i, j), a.mul.basis_product(j, i)
            if lhs != rhs:
                out.append(AxiomViolation("comm", (("A", i), ("A", j)), lhs, rhs))
    for i, j, k in product(range(n), repeat=3):
        lhs = a.mul(a.mul.basis_product(i, j), e[k])
        rhs = a.mul(e[i], a.mul.basis_product(j, k))
        if lhs != rhs:
            out.append(AxiomViolation("assoc", (("A", i), ("A", j), ("A", k)), lhs, rhs))
    return out


def _require_valid(a: CommAlg) -> None:
    bad = check_comm_assoc(a)
    if bad:
        raise PreconditionError("not a unital commutative associative algebra: " + bad[0].describe())


def jacobson_radical(a: CommAlg) -> Subspace:
    """Radical of the trace form (x, y) -> tr(L_x L_y).

    In characteristic zero this is the nilradical of a finite-dimensional
    commutative algebra.
    """
    _require_valid(a)
    n = a.dim
    ops = [a.left_mult(a.basis(i)) for i in range(n)]
    gram = tuple(tuple(trace(matmul(ops[b], ops[x])) for x in range(n)) for b in range(n))
    return kernel(gram, n)


def is_local_over_C(a: CommAlg) -> bool:
    return a.dim - jacobson_radical(a).dim == 1


def is_assoc_ideal(a: CommAlg, s: Subspace) -> bool:
    if s.ambient_dim != a.dim:
        raise DimensionError("subspace of Q^%d in algebra of dim %d" % (s.ambient_dim, a.dim))
    return all(s.contains(a.mul(a.basis(i), v)) for i in range(a.dim) for v in s.basis)


def _quotient_mult_matrix(a: CommAlg, x: Sequence, j: Subspace):
    comp = j.complement_indices()
    cols = [j.quotient_coords(a.mul(x, a.basis(c))) for c in comp]
    q = len(comp)
    return tuple(tuple(cols[c][r] for c in range(q)) for r in range(q))


def _candidates(n: int):
    for i in range(n):
        yield unit_vector(n, i)
    for t in range(1, 6):
        yield tuple(Fraction((i + 1) ** t + i) for i in range(n))


def _lift_idempotent(a: CommAlg, e: tuple) -> tuple:
    for _ in range(a.dim + 2):
        sq = a.mul(e, e)
        if sq == e:
            return e
        cube = a.mul(sq, e)
        e = sub(scale(3, sq), scale(2, cube))
    if a.mul(e, e) != e:
        raise RuntimeError("idempotent lifting did not converge")
    return e


def primitive_idempotents(a: CommAlg) -> list[tuple] | None:
    """Primitive idempotents when A/J splits over Q, else ``None``.

    A separating element x of A/J is searched among a few fixed candidates;
    once x has dim(A/J) distinct rational eigenvalues, the Lagrange
    polynomials in x give the idempotents mod J, which are then lifted.
    """
    _require_valid(a)
    j = jacobson_radical(a)
    q = a.dim - j.dim
    if q == 1:
        return [a.unit]
    for x in _candidates(a.dim):
        eig = rational_eigenvalues(_quotient_mult_matrix(a, x, j))
        if len(eig) != q:
            continue
        out = []
        for lam in eig:
            e = a.unit
            for mu in eig:
                if mu != lam:
                    factor = scale(Fraction(1) / (lam - mu), sub(x, scale(mu, a.unit)))
                    e = a.mul(e, factor)
            out.append(_lift_idempotent(a, e))
        return out
    return None


def idempotents_in(a: CommAlg, s: Subspace) -> bool | None:
    """Whether ``s`` holds every idempotent of ``a``; ``None`` if undetermined.

    The idempotents are the subset sums of the primitive ones, so it is
    enough to test the primitives.
    """
    if s.ambient_dim != a.dim:
        raise DimensionError("subspace of Q^%d in algebra of dim %d" % (s.ambient_dim, a.dim))
    prims = primitive_idempotents(a)
    if prims is None:
        return None
    return all(s.contains(e) for e in prims)


def all_idempotents(a: CommAlg) -> list[tuple] | None:
    prims = primitive_idempotents(a)
    if prims is None:
        return None
    out = []
    for mask in product((0, 1), repeat=len(prims)):
        out.append(lincomb(((m, e) for m, e in zip(mask, prims)), a.dim))
    return sorted(set(out))


def trivial_algebra() -> CommAlg:
    return CommAlg(1, (1,), Trilinear.from_entries((1, 1, 1), [(0, 0, 0, 1)]))


def product_algebra(k: int) -> CommAlg:
    """C^k with componentwise product; unit (1, ..., 1)."""
    return CommAlg(k, (1,) * k, Trilinear.from_entries((k, k, k), [(i, i, i, 1) for i in range(k)]))


def dual_numbers() -> CommAlg:
    """span{1, x} with x*x = 0."""
    return CommAlg(2, (1, 0), Trilinear.from_entries(
        (2, 2, 2), [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]))


def square_zero_extension(n: int) -> CommAlg:
    """span{1, x_1..x_n} with x_i * x_j = 0."""
    d = n + 1
    items = [(0, 0, 0, 1)]
    for i in range(1, d):
        items += [(0, i, i, 1), (i, 0, i, 1)]
    return CommAlg(d, unit_vector(d, 0), Trilinear.from_entries((d, d, d), items))


__all__ = [
    "CommAlg", "check_comm_assoc", "jacobson_radical", "is_local_over_C", "is_assoc_ideal",
    "idempotents_in", "primitive_idempotents", "all_idempotents", "trivial_algebra",
    "product_algebra", "dual_numbers", "square_zero_extension",
]
