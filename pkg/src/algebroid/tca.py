"""1-truncated conformal algebras C = C0 + C1.

Only the degree-legal products are stored: u_0 a (act0), u_0 v (brk0) and
u_1 v (pair1). The product a_0 u is -u_0 a by definition; everything else
lands in negative degree and is zero.

Elements of C are full coordinate vectors of length d0 + d1, C0 first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .exactlin import (
    DimensionError, Trilinear, add, is_zero, matrix, matvec, rank, scale, solve_linear, sub,
    unit_vector, zero_vector,
)
from .leibniz import (
    LeibnizAlg, LeibnizModule, check_left_leibniz, check_module, is_antisymmetric,
    is_invariant_form,
)
from .report import AxiomViolation, PreconditionError, Report


@dataclass(frozen=True)
class TCA:
    d0: int
    d1: int
    partial: tuple
    act0: Trilinear
    brk0: Trilinear
    pair1: Trilinear

    def __post_init__(self):
        p = matrix(self.partial)
        if len(p) != self.d1 or any(len(r) != self.d0 for r in p):
            raise DimensionError("partial must be %d x %d" % (self.d1, self.d0))
        object.__setattr__(self, "partial", p)
        want = {"act0": (self.d1, self.d0, self.d0), "brk0": (self.d1, self.d1, self.d1),
                "pair1": (self.d1, self.d1, self.d0)}
        for name, dims in want.items():
            if tuple(getattr(self, name).dims) != dims:
                raise DimensionError("%s dims %r, expected %r" % (name, getattr(self, name).dims, dims))

    @property
    def dim(self) -> int:
        return self.d0 + self.d1

    def split(self, x: Sequence) -> tuple[tuple, tuple]:
        return tuple(x[:self.d0]), tuple(x[self.d0:])

    def join(self, a: Sequence, u: Sequence) -> tuple:
        return tuple(a) + tuple(u)

    def d(self, a: Sequence) -> tuple:
        """partial on C0 coordinates, as a C1 vector."""
        if not self.d1:
            return ()
        return matvec(self.partial, a)

    def dfull(self, x: Sequence) -> tuple:
        """partial extended by zero on C1, as a full vector."""
        a, _ = self.split(x)
        return self.join(zero_vector(self.d0), self.d(a))

    def prod(self, i: int, x: Sequence, y: Sequence) -> tuple:
        """x_i y for full vectors x, y."""
        xa, xu = self.split(x)
        ya, yu = self.split(y)
        if i == 0:
            c0 = sub(self.act0(xu, ya), self.act0(yu, xa))
            c1 = self.brk0(xu, yu)
            return self.join(c0, c1)
        if i == 1:
            return self.join(self.pair1(xu, yu), zero_vector(self.d1))
        return zero_vector(self.dim)

    def e0(self, k: int) -> tuple:
        return unit_vector(self.dim, k)

    def e1(self, k: int) -> tuple:
        return unit_vector(self.dim, self.d0 + k)

    def tag(self, idx: int) -> tuple:
        return ("C0", idx) if idx < self.d0 else ("C1", idx - self.d0)


def check_tca(c: TCA) -> list[AxiomViolation]:
    out = []
    n = c.dim
    zero = zero_vector(n)
    a_basis = [c.e0(k) for k in range(c.d0)]
    u_basis = [c.e1(k) for k in range(c.d1)]
    all_basis = [unit_vector(n, k) for k in range(n)]

    def note(axiom, wit, lhs, rhs):
        if lhs != rhs:
            out.append(AxiomViolation(axiom, tuple(c.tag(w) for w in wit), lhs, rhs))

    # derivation
    for ia, a in enumerate(a_basis):
        da = c.dfull(a)
        for x in range(n):
            note("derivation/(da)_0=0", (ia, x), c.prod(0, da, all_basis[x]), zero)
            note("derivation/(da)_1=-a_0", (ia, x),
                 c.prod(1, da, all_basis[x]), scale(-1, c.prod(0, a, all_basis[x])))
        for iu, u in enumerate(u_basis):
            note("derivation/d(u_0a)=u_0da", (c.d0 + iu, ia),
                 c.dfull(c.prod(0, u, a)), c.prod(0, u, da))
    # commutativity
    for iu, u in enumerate(u_basis):
        for ia, a in enumerate(a_basis):
            note("commutativity/u_0a=-a_0u", (c.d0 + iu, ia),
                 c.prod(0, u, a), scale(-1, c.prod(0, a, u)))
        for iv, v in enumerate(u_basis):
            wit = (c.d0 + iu, c.d0 + iv)
            note("commutativity/u_0v=-v_0u+d(u_1v)", wit,
                 c.prod(0, u, v), add(scale(-1, c.prod(0, v, u)), c.dfull(c.prod(1, u, v))))
            note("commutativity/u_1v=v_1u", wit, c.prod(1, u, v), c.prod(1, v, u))
    # associativity
    for i in (0, 1):
        for x, y, z in product(range(n), repeat=3):
            al, be, ga = all_basis[x], all_basis[y], all_basis[z]
            lhs = c.prod(0, al, c.prod(i, be, ga))
            rhs = add(c.prod(i, be, c.prod(0, al, ga)), c.prod(i, c.prod(0, al, be), ga))
            note("associativity/i=%d" % i, (x, y, z), lhs, rhs)
    return out


def check_prop_C0C1(c: TCA) -> Report:
    """Evaluate the module-theoretic characterization clause by clause."""
    rep = Report("C0C1")
    a_basis = [c.e0(k) for k in range(c.d0)]
    u_basis = [c.e1(k) for k in range(c.d1)]
    all_basis = a_basis + u_basis

    def first(pairs):
        for wit, lhs, rhs in pairs:
            if lhs != rhs:
                return [c.tag(w) for w in wit]
        return None

    def clause(id, text, pairs):
        wit = first(pairs)
        rep.add(id, wit is None, text, wit)

    lie = LeibnizAlg(c.d1, c.brk0)
    bad = check_left_leibniz(lie)
    rep.add("C0C1-i-leibniz", not bad, "C1 is a Leibniz algebra under u_0v",
            list(bad[0].witness) if bad else None)
    u0 = lambda x, y: c.prod(0, x, y)
    u1 = lambda x, y: c.prod(1, x, y)
    d0 = c.d0
    clause("C0C1-i-module", "C0 is a C1-module", (
        ((d0 + i, d0 + j, k), u0(u0(u, v), a), sub(u0(u, u0(v, a)), u0(v, u0(u, a))))
        for i, u in enumerate(u_basis) for j, v in enumerate(u_basis) for k, a in enumerate(a_basis)))
    clause("C0C1-ii-hom", "partial is a C1-module homomorphism", (
        ((d0 + i, k), c.dfull(u0(u, a)), u0(u, c.dfull(a)))
        for i, u in enumerate(u_basis) for k, a in enumerate(a_basis)))
    clause("C0C1-ii-annihilates", "partial C0 annihilates C0 + C1", (
        ((k, x), u0(c.dfull(a), y), zero_vector(c.dim))
        for k, a in enumerate(a_basis) for x, y in enumerate(all_basis)))
    clause("C0C1-iii-hom", "the pairing is a C1-module homomorphism", (
        ((d0 + i, d0 + j, d0 + k), u0(u, u1(v, w)), add(u1(u0(u, v), w), u1(v, u0(u, w))))
        for i, u in enumerate(u_basis) for j, v in enumerate(u_basis) for k, w in enumerate(u_basis)))
    clause("C0C1-iii-u_0a=-a_0u", "u_0a = -a_0u", (
        ((d0 + i, k), u0(u, a), scale(-1, u0(a, u)))
        for i, u in enumerate(u_basis) for k, a in enumerate(a_basis)))
    clause("C0C1-iii-<da,u>=-a_0u", "<da, u> = -a_0u", (
        ((k, d0 + i), u1(c.dfull(a), u), scale(-1, u0(a, u)))
        for i, u in enumerate(u_basis) for k, a in enumerate(a_basis)))
    clause("C0C1-iii-[u,v]+[v,u]=d<u,v>", "[u,v] + [v,u] = d<u,v>", (
        ((d0 + i, d0 + j), add(u0(u, v), u0(v, u)), c.dfull(u1(u, v)))
        for i, u in enumerate(u_basis) for j, v in enumerate(u_basis)))
    clause("C0C1-iii-symmetric", "<u,v> = <v,u>", (
        ((d0 + i, d0 + j), u1(u, v), u1(v, u))
        for i, u in enumerate(u_basis) for j, v in enumerate(u_basis)))
    return rep


def zero_tca(d0: int, d1: int) -> TCA:
    return TCA(d0, d1, tuple(zero_vector(d0) for _ in range(d1)),
               Trilinear((d1, d0, d0), {}), Trilinear((d1, d1, d1), {}), Trilinear((d1, d1, d0), {}))


def _form_matrix(form, n: int):
    if isinstance(form, Trilinear):
        if tuple(form.dims) != (n, n, 1):
            raise DimensionError("form must have dims (%d, %d, 1)" % (n, n))
        return tuple(tuple(form.get(i, j, 0) for j in range(n)) for i in range(n))
    f = matrix(form)
    if len(f) != n or any(len(r) != n for r in f):
        raise DimensionError("form must be %d x %d" % (n, n))
    return f


def tca_from_lie_pair(g: LeibnizAlg, form, m: LeibnizModule, a_m: LeibnizModule, phi) -> TCA:
    """C0 = C + A_M, C1 = g + M, with partial = phi on A_M.

    ``form`` is a symmetric invariant form on g (Gram matrix or a Trilinear
    into a 1-dim space); ``phi`` is a dim M x dim A_M matrix.
    """
    if not is_antisymmetric(g) or check_left_leibniz(g):
        raise PreconditionError("g is not a Lie algebra")
    for mod in (m, a_m):
        if mod.alg != g:
            raise ValueError("module is over a different algebra")
        if check_module(mod):
            raise PreconditionError("invalid g-module")
    dg, dm, da = g.dim, m.dim, a_m.dim
    f = _form_matrix(form, dg)
    if any(f[i][j] != f[j][i] for i in range(dg) for j in range(dg)):
        raise PreconditionError("form is not symmetric")
    if not is_invariant_form(g, f):
        raise PreconditionError("form is not invariant")
    phi = matrix(phi) if dm else ()
    if dm != da or len(phi) != dm or any(len(r) != da for r in phi) or rank(phi) != dm:
        raise PreconditionError("phi is not bijective")
    for x in range(dg):
        ex = g.basis(x)
        for k in range(da):
            lhs = matvec(phi, a_m.action(ex, unit_vector(da, k)))
            rhs = m.action(ex, matvec(phi, unit_vector(da, k)))
            if lhs != rhs:
                raise PreconditionError("phi is not g-equivariant")
    # phi^{-1} on basis of M, for g_1 m = g . phi^{-1}(m)
    phi_inv_cols = []
    for j in range(dm):
        sol = solve_linear(phi, unit_vector(dm, j), da)
        phi_inv_cols.append(sol.particular)

    d0, d1 = 1 + da, dg + dm
    partial = [[Fraction(0)] * d0 for _ in range(d1)]
    for k in range(da):
        for r in range(dm):
            partial[dg + r][1 + k] = phi[r][k]
    act, brk, pair = {}, {}, {}
    for (i, j, k), c in g.bracket.entries.items():
        brk[(i, j, k)] = c
    for (i, j, k), c in m.action.entries.items():
        brk[(i, dg + j, dg + k)] = c
    for (i, j, k), c in a_m.action.entries.items():
        act[(i, 1 + j, 1 + k)] = c
    for i in range(dg):
        for j in range(dg):
            if f[i][j]:
                pair[(i, j, 0)] = f[i][j]
        for j in range(dm):
            val = a_m.action(g.basis(i), phi_inv_cols[j])
            for k, c in enumerate(val):
                if c:
                    pair[(i, dg + j, 1 + k)] = c
                    pair[(dg + j, i, 1 + k)] = c
    return TCA(d0, d1, partial, Trilinear((d1, d0, d0), act), Trilinear((d1, d1, d1), brk),
               Trilinear((d1, d1, d0), pair))


def tca_of_vertex_algebroid(b) -> TCA:
    """Forget the A-module structure: C0 = A, C1 = Gamma."""
    from .valgd import check_vertex_algebroid

    bad = check_vertex_algebroid(b)
    if bad:
        raise PreconditionError("invalid vertex algebroid: " + bad[0].describe())
    return TCA(b.a.dim, b.gdim, b.partial, b.act, b.brk, b.pair)


def is_zero_tca(c: TCA) -> bool:
    return (c.act0.is_zero() and c.brk0.is_zero() and c.pair1.is_zero()
            and all(is_zero(r) for r in c.partial))
