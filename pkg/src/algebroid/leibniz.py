"""Finite-dimensional left Leibniz algebras and their modules.

The bracket satisfies [a,[b,c]] = [[a,b],c] + [b,[a,c]]. Structural
invariants (radical, simplicity) are decided through the Lie algebra
L / Leib(L), where Killing-form and envelope tests apply.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .exactlin import (
    DimensionError, Subspace, Trilinear, add, envelope, kernel, matmul, matvec,
    subspace_intersect, subspace_sum, trace, unit_vector,
)
from .report import AxiomViolation, PreconditionError


@dataclass(frozen=True)
class LeibnizAlg:
    dim: int
    bracket: Trilinear

    def __post_init__(self):
        if tuple(self.bracket.dims) != (self.dim,) * 3:
            raise DimensionError("bracket dims %r do not match %d" % (self.bracket.dims, self.dim))

    def basis(self, i: int) -> tuple:
        return unit_vector(self.dim, i)

    def br(self, x: Sequence, y: Sequence) -> tuple:
        return self.bracket(x, y)

    def ad(self, x: Sequence):
        """Matrix of y -> [x, y]."""
        return self.bracket.left_operator(x)


@dataclass(frozen=True)
class LeibnizModule:
    alg: LeibnizAlg
    dim: int
    action: Trilinear

    def __post_init__(self):
        if tuple(self.action.dims) != (self.alg.dim, self.dim, self.dim):
            raise DimensionError("action dims %r do not match (%d, %d, %d)"
                                 % (self.action.dims, self.alg.dim, self.dim, self.dim))

    def op(self, x: Sequence):
        """Matrix of m -> x . m."""
        return self.action.left_operator(x)

    def ops(self) -> list:
        return [self.op(self.alg.basis(i)) for i in range(self.alg.dim)]


def check_left_leibniz(l: LeibnizAlg) -> list[AxiomViolation]:
    n = l.dim
    b = l.bracket
    e = [l.basis(i) for i in range(n)]
    out = []
    for i, j, k in product(range(n), repeat=3):
        lhs = b(e[i], b.basis_product(j, k))
        rhs = add(b(b.basis_product(i, j), e[k]), b(e[j], b.basis_product(i, k)))
        if lhs != rhs:
            out.append(AxiomViolation("leibniz", (("L", i), ("L", j), ("L", k)), lhs, rhs))
    return out


def check_module(m: LeibnizModule) -> list[AxiomViolation]:
    g = m.alg
    act = m.action
    out = []
    for i, j, k in product(range(g.dim), range(g.dim), range(m.dim)):
        mk = unit_vector(m.dim, k)
        lhs = act(g.bracket.basis_product(i, j), mk)
        rhs = tuple(x - y for x, y in zip(act(g.basis(i), act.basis_product(j, k)),
                                          act(g.basis(j), act.basis_product(i, k))))
        if lhs != rhs:
            out.append(AxiomViolation("module", (("L", i), ("L", j), ("M", k)), lhs, rhs))
    return out


def is_antisymmetric(l: LeibnizAlg) -> bool:
    return all(add(l.bracket.basis_product(i, j), l.bracket.basis_product(j, i)) == (0,) * l.dim
               for i in range(l.dim) for j in range(i, l.dim))


def _require(l: LeibnizAlg) -> None:
    bad = check_left_leibniz(l)
    if bad:
        raise PreconditionError("not a left Leibniz algebra: " + bad[0].describe())


def leib_ideal(l: LeibnizAlg) -> Subspace:
    b = l.bracket
    vecs = [add(b.basis_product(i, j), b.basis_product(j, i))
            for i in range(l.dim) for j in range(i, l.dim)]
    return Subspace.span(vecs, l.dim)


def bracket_span(l: LeibnizAlg, u: Subspace, v: Subspace) -> Subspace:
    return Subspace.span([l.br(x, y) for x in u.basis for y in v.basis], l.dim)


def derived_series(l: LeibnizAlg, start: Subspace | None = None) -> list[Subspace]:
    """L, [L,L], [[L,L],[L,L]], ... ending at the first repeat or at 0."""
    cur = Subspace.full(l.dim) if start is None else start
    series = [cur]
    for _ in range(l.dim + 1):
        if cur.is_zero():
            break
        nxt = bracket_span(l, cur, cur)
        series.append(nxt)
        if nxt == cur:
            break
        cur = nxt
    return series


def is_solvable(l: LeibnizAlg, start: Subspace | None = None) -> bool:
    return derived_series(l, start)[-1].is_zero()


def is_leibniz_ideal(l: LeibnizAlg, s: Subspace, side: str = "two-sided") -> bool:
    if s.ambient_dim != l.dim:
        raise DimensionError("subspace of Q^%d in algebra of dim %d" % (s.ambient_dim, l.dim))
    if side not in ("left", "right", "two-sided"):
        raise ValueError("side must be left, right or two-sided")
    e = [l.basis(i) for i in range(l.dim)]
    if side in ("left", "two-sided"):
        if not all(s.contains(l.br(x, w)) for x in e for w in s.basis):
            return False
    if side in ("right", "two-sided"):
        if not all(s.contains(l.br(w, x)) for x in e for w in s.basis):
            return False
    return True


def is_subalgebra(l: LeibnizAlg, s: Subspace) -> bool:
    return all(s.contains(l.br(x, y)) for x in s.basis for y in s.basis)


def restrict(l: LeibnizAlg, s: Subspace) -> LeibnizAlg:
    """The subalgebra ``s`` in the coordinates of its RREF basis."""
    if not is_subalgebra(l, s):
        raise ValueError("subspace is not closed under the bracket")
    d = s.dim
    return LeibnizAlg(d, Trilinear.from_function(
        (d, d, d), lambda i, j: s.coords_in_basis(l.br(s.basis[i], s.basis[j]))))


def quotient(l: LeibnizAlg, ideal: Subspace) -> LeibnizAlg:
    """L / ideal on the basis of non-pivot coordinates of ``ideal``."""
    if not is_leibniz_ideal(l, ideal):
        raise ValueError("subspace is not a two-sided ideal")
    comp = ideal.complement_indices()
    d = len(comp)
    return LeibnizAlg(d, Trilinear.from_function(
        (d, d, d), lambda i, j: ideal.quotient_coords(l.bracket.basis_product(comp[i], comp[j]))))


def killing_form(l: LeibnizAlg):
    """Gram matrix of (x, y) -> tr(ad x ad y)."""
    ads = [l.ad(l.basis(i)) for i in range(l.dim)]
    return tuple(tuple(trace(matmul(ads[i], ads[j])) for j in range(l.dim)) for i in range(l.dim))


def _lie_radical(g: LeibnizAlg) -> Subspace:
    # char 0: rad(g) is the Killing-orthogonal of [g, g]
    kappa = killing_form(g)
    derived = bracket_span(g, Subspace.full(g.dim), Subspace.full(g.dim))
    rows = tuple(matvec(kappa, y) for y in derived.basis)
    if not rows:
        return Subspace.full(g.dim)
    return kernel(rows, g.dim)


def radical(l: LeibnizAlg) -> Subspace:
    _require(l)
    leib = leib_ideal(l)
    q = quotient(l, leib)
    rad_q = _lie_radical(q)
    lifted = [leib.lift(v) for v in rad_q.basis]
    return subspace_sum(Subspace.span(lifted, l.dim), leib)


def is_semisimple(l: LeibnizAlg) -> bool:
    return radical(l) == leib_ideal(l)


def _is_simple_lie(g: LeibnizAlg) -> bool:
    if g.dim == 0:
        return False
    kappa = killing_form(g)
    if kernel(kappa, g.dim).dim:
        return False
    full = Subspace.full(g.dim)
    if bracket_span(g, full, full).is_zero():
        return False
    ads = [g.ad(g.basis(i)) for i in range(g.dim)]
    return envelope(ads, g.dim).dim == g.dim ** 2


def action_on_subspace(l: LeibnizAlg, s: Subspace) -> list:
    """Matrices of w -> [x, w] on ``s`` (left-invariant) for each basis x."""
    d = s.dim
    mats = []
    for i in range(l.dim):
        cols = [s.coords_in_basis(l.br(l.basis(i), w)) for w in s.basis]
        mats.append(tuple(tuple(cols[c][r] for c in range(d)) for r in range(d)))
    return mats


def is_simple(l: LeibnizAlg) -> bool:
    """Simplicity via the Lie quotient.

    Leib = 0: a simple Lie algebra (Killing form nondegenerate, adjoint
    envelope of full dimension, nonabelian). Leib != 0: L/Leib simple Lie,
    Leib an irreducible nontrivial module over it, and [L, L] != Leib.
    """
    _require(l)
    leib = leib_ideal(l)
    if leib.is_zero():
        return _is_simple_lie(l)
    if not _is_simple_lie(quotient(l, leib)):
        return False
    ops = action_on_subspace(l, leib)
    if all(not any(any(r) for r in m) for m in ops):
        return False
    if envelope(ops, leib.dim).dim != leib.dim ** 2:
        return False
    full = Subspace.full(l.dim)
    return bracket_span(l, full, full) != leib


def verify_levi(l: LeibnizAlg, s: Subspace) -> bool:
    if s.ambient_dim != l.dim:
        raise DimensionError("subspace of Q^%d in algebra of dim %d" % (s.ambient_dim, l.dim))
    if not is_subalgebra(l, s):
        return False
    if not is_antisymmetric(restrict(l, s)):
        return False
    rad = radical(l)
    return subspace_intersect(s, rad).is_zero() and subspace_sum(s, rad).is_full()


def build_hemisemidirect(g: LeibnizAlg, m: LeibnizModule) -> LeibnizAlg:
    """g + M with [x + u, y + w] = [x, y] + x . w."""
    if m.alg != g:
        raise ValueError("module is over a different algebra")
    if not is_antisymmetric(g) or check_left_leibniz(g):
        raise PreconditionError("base algebra is not a Lie algebra")
    bad = check_module(m)
    if bad:
        raise PreconditionError("invalid module: " + bad[0].describe())
    dg, dm = g.dim, m.dim
    n = dg + dm
    items = [(i, j, k, c) for (i, j, k), c in g.bracket.entries.items()]
    items += [(i, dg + j, dg + k, c) for (i, j, k), c in m.action.entries.items()]
    return LeibnizAlg(n, Trilinear.from_entries((n, n, n), items))


# -- sl2 and its modules -----------------------------------------------------

E, F, H = 0, 1, 2


def sl2() -> LeibnizAlg:
    """Basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    items = [
        (E, F, H, 1), (F, E, H, -1),
        (H, E, E, 2), (E, H, E, -2),
        (H, F, F, -2), (F, H, F, 2),
    ]
    return LeibnizAlg(3, Trilinear.from_entries((3, 3, 3), items))


def sl2_module(m: int) -> LeibnizModule:
    """Irreducible module of highest weight ``m`` on a_0..a_m.

    h a_i = (m - 2i) a_i, f a_i = (i + 1) a_{i+1}, e a_i = (m - i + 1) a_{i-1}.
    """
    if m < 0:
        raise ValueError("highest weight must be >= 0")
    d = m + 1
    items = []
    for i in range(d):
        items.append((H, i, i, m - 2 * i))
        if i + 1 < d:
            items.append((F, i, i + 1, i + 1))
        if i >= 1:
            items.append((E, i, i - 1, m - i + 1))
    return LeibnizModule(sl2(), d, Trilinear.from_entries((3, d, d), items))


def trivial_module(g: LeibnizAlg, d: int) -> LeibnizModule:
    return LeibnizModule(g, d, Trilinear((g.dim, d, d), {}))


def direct_sum(*mods: LeibnizModule) -> LeibnizModule:
    g = mods[0].alg
    if any(x.alg != g for x in mods):
        raise ValueError("modules over different algebras")
    items, off = [], 0
    for x in mods:
        items += [(i, off + j, off + k, c) for (i, j, k), c in x.action.entries.items()]
        off += x.dim
    return LeibnizModule(g, off, Trilinear.from_entries((g.dim, off, off), items))


def adjoint_module(g: LeibnizAlg) -> LeibnizModule:
    return LeibnizModule(g, g.dim, g.bracket)


def trace_form(m: LeibnizModule):
    """Gram matrix of (x, y) -> tr(rho(x) rho(y))."""
    ops = m.ops()
    n = m.alg.dim
    return tuple(tuple(trace(matmul(ops[i], ops[j])) for j in range(n)) for i in range(n))


def is_invariant_form(g: LeibnizAlg, form) -> bool:
    """<[x,y],z> = <x,[y,z]> on all basis triples; ``form`` is a Gram matrix."""
    n = g.dim
    for i, j, k in product(range(n), repeat=3):
        lhs = sum((c * form[p][k] for p, c in enumerate(g.bracket.basis_product(i, j)) if c), Fraction(0))
        rhs = sum((c * form[i][p] for p, c in enumerate(g.bracket.basis_product(j, k)) if c), Fraction(0))
        if lhs != rhs:
            return False
    return True
