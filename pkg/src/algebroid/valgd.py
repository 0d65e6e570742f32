"""Vertex A-algebroids: axioms, derived subspaces, quotients and criteria.

Gamma is the Leibniz algebra B; its basis vectors are tagged ("G", i) in
witnesses, basis vectors of A are tagged ("A", i). The anchor pi(u)(a) is
also written u_0 a, the pairing <u, v> is u_1 v.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Sequence

from .calg import CommAlg, check_comm_assoc, idempotents_in, is_local_over_C
from .exactlin import (
    DimensionError, Subspace, Trilinear, add, envelope, format_rat, identity, image, is_zero,
    kernel, mat_sub, mat_scale, matrix, matvec, rational_eigenvalues, scale, spin, sub,
    unit_vector, zero_vector,
)
from .leibniz import (
    LeibnizAlg, check_left_leibniz, is_antisymmetric, is_leibniz_ideal, is_semisimple,
    is_simple, leib_ideal, verify_levi,
)
from .report import AxiomViolation, Check, PreconditionError, Report


@dataclass(frozen=True)
class VertexAlgebroid:
    a: CommAlg
    gdim: int
    mact: Trilinear
    brk: Trilinear
    pair: Trilinear
    act: Trilinear
    partial: tuple
    labels: dict | None = field(default=None, compare=False)

    def __post_init__(self):
        da, dg = self.a.dim, self.gdim
        want = {"mact": (da, dg, dg), "brk": (dg, dg, dg), "pair": (dg, dg, da), "act": (dg, da, da)}
        for name, dims in want.items():
            if tuple(getattr(self, name).dims) != dims:
                raise DimensionError("%s dims %r, expected %r" % (name, getattr(self, name).dims, dims))
        p = matrix(self.partial)
        if len(p) != dg or any(len(r) != da for r in p):
            raise DimensionError("partial must be %d x %d" % (dg, da))
        object.__setattr__(self, "partial", p)

    @property
    def adim(self) -> int:
        return self.a.dim

    def eA(self, i: int) -> tuple:
        return unit_vector(self.a.dim, i)

    def eG(self, i: int) -> tuple:
        return unit_vector(self.gdim, i)

    def times(self, x, y) -> tuple:
        return self.a.mul(x, y)

    def dot(self, a, v) -> tuple:
        return self.mact(a, v)

    def br(self, u, v) -> tuple:
        return self.brk(u, v)

    def pr(self, u, v) -> tuple:
        return self.pair(u, v)

    def pi(self, u, a) -> tuple:
        return self.act(u, a)

    def d(self, a) -> tuple:
        if not self.gdim:
            return ()
        return matvec(self.partial, a)

    def leibniz(self) -> LeibnizAlg:
        return LeibnizAlg(self.gdim, self.brk)

    def anchor_matrix(self, u):
        """Matrix of a -> pi(u)(a)."""
        return self.act.left_operator(u)

    def label(self, space: str, i: int) -> str:
        if self.labels and space in self.labels:
            return self.labels[space][i]
        return "%s%d" % (space, i)

    def describe_vector(self, space: str, v: Sequence) -> str:
        terms = []
        for i, c in enumerate(v):
            if c:
                name = self.label(space, i)
                terms.append(name if c == 1 else "%s*%s" % (format_rat(c), name))
        return " + ".join(terms) if terms else "0"


# -- axioms ------------------------------------------------------------------

def _families(b: VertexAlgebroid):
    """(name, thunk) pairs; each thunk returns a list of violations."""
    da, dg = b.a.dim, b.gdim
    A = [b.eA(i) for i in range(da)]
    G = [b.eG(i) for i in range(dg)]
    zA = zero_vector(da)
    one = b.a.unit

    def viol(axiom, wit, lhs, rhs):
        return AxiomViolation(axiom, wit, lhs, rhs)

    def run(axiom, ranges, fn):
        out = []
        for idx in product(*[range(n) for _, n in ranges]):
            lhs, rhs = fn(*idx)
            if lhs != rhs:
                out.append(viol(axiom, tuple((s, i) for (s, _), i in zip(ranges, idx)), lhs, rhs))
        return out

    def quasi_assoc(axiom):
        # a.(a'.v) - (a*a').v = pi(v)(a).da' + pi(v)(a').da
        def fn(i, j, k):
            a, a2, v = A[i], A[j], G[k]
            lhs = sub(b.dot(a, b.dot(a2, v)), b.dot(b.times(a, a2), v))
            rhs = add(b.dot(b.pi(v, a), b.d(a2)), b.dot(b.pi(v, a2), b.d(a)))
            return lhs, rhs
        return lambda: run(axiom, [("A", da), ("A", da), ("G", dg)], fn)

    def bracket_module(axiom):
        # [u, a.v] = pi(u)(a).v + a.[u, v]
        def fn(i, j, k):
            u, a, v = G[i], A[j], G[k]
            return b.br(u, b.dot(a, v)), add(b.dot(b.pi(u, a), v), b.dot(a, b.br(u, v)))
        return lambda: run(axiom, [("G", dg), ("A", da), ("G", dg)], fn)

    def anchor_linear(axiom):
        # pi(a.v)(a'') = a * pi(v)(a'')
        def fn(i, j, k):
            a, v, x = A[i], G[j], A[k]
            return b.pi(b.dot(a, v), x), b.times(a, b.pi(v, x))
        return lambda: run(axiom, [("A", da), ("G", dg), ("A", da)], fn)

    def pair_module(axiom):
        # <a.u, v> = a * <u, v> - pi(u)(pi(v)(a))
        def fn(i, j, k):
            a, u, v = A[i], G[j], G[k]
            return b.pr(b.dot(a, u), v), sub(b.times(a, b.pr(u, v)), b.pi(u, b.pi(v, a)))
        return lambda: run(axiom, [("A", da), ("G", dg), ("G", dg)], fn)

    def partial_product(axiom):
        # d(a*a') = a.da' + a'.da
        def fn(i, j):
            a, a2 = A[i], A[j]
            return b.d(b.times(a, a2)), add(b.dot(a, b.d(a2)), b.dot(a2, b.d(a)))
        return lambda: run(axiom, [("A", da), ("A", da)], fn)

    def anchor_derivation(axiom):
        # u_0(a*a') = a*(u_0a') + (u_0a)*a'
        def fn(i, j, k):
            u, a, a2 = G[i], A[j], A[k]
            return b.pi(u, b.times(a, a2)), add(b.times(a, b.pi(u, a2)), b.times(b.pi(u, a), a2))
        return lambda: run(axiom, [("G", dg), ("A", da), ("A", da)], fn)

    def a0_module(axiom):
        # a_0(a'.v) = a'*(a_0 v), with a_0 v = -v_0 a
        def fn(i, j, k):
            a, a2, v = A[i], A[j], G[k]
            return scale(-1, b.pi(b.dot(a2, v), a)), b.times(a2, scale(-1, b.pi(v, a)))
        return lambda: run(axiom, [("A", da), ("A", da), ("G", dg)], fn)

    fams = [
        ("def/quasi-assoc", quasi_assoc("a.(a'.v)-(a*a').v=pi(v)(a).da'+pi(v)(a').da")),
        ("def/bracket-module", bracket_module("[u,a.v]=pi(u)(a).v+a.[u,v]")),
        ("def/symmetrized-bracket", lambda: run(
            "[u,v]+[v,u]=d<u,v>", [("G", dg), ("G", dg)],
            lambda i, j: (add(b.br(G[i], G[j]), b.br(G[j], G[i])), b.d(b.pr(G[i], G[j]))))),
        ("def/anchor-linear", anchor_linear("pi(a.v)=a pi(v)")),
        ("def/pair-module", pair_module("<a.u,v>=a*<u,v>-pi(u)(pi(v)(a))")),
        ("def/pair-invariant", lambda: run(
            "pi(v)<v1,v2>=<[v,v1],v2>+<v1,[v,v2]>", [("G", dg)] * 3,
            lambda i, j, k: (b.pi(G[i], b.pr(G[j], G[k])),
                             add(b.pr(b.br(G[i], G[j]), G[k]), b.pr(G[j], b.br(G[i], G[k])))))),
        ("def/partial-product", partial_product("d(a*a')=a.da'+a'.da")),
        ("def/bracket-partial", lambda: run(
            "[v,da]=d(pi(v)a)", [("G", dg), ("A", da)],
            lambda i, j: (b.br(G[i], b.d(A[j])), b.d(b.pi(G[i], A[j]))))),
        ("def/pair-partial", lambda: run(
            "<v,da>=pi(v)(a)", [("G", dg), ("A", da)],
            lambda i, j: (b.pr(G[i], b.d(A[j])), b.pi(G[i], A[j])))),
        ("tca/quasi-assoc", quasi_assoc("a.(a'.u)-(a*a').u=(u_0a).da'+(u_0a').da")),
        ("tca/bracket-module", bracket_module("u_0(a.v)-a.(u_0v)=(u_0a).v")),
        ("tca/anchor-derivation", anchor_derivation("u_0(a*a')=a*(u_0a')+(u_0a)*a'")),
        ("tca/a0-module", a0_module("a_0(a'.v)=a'*(a_0v)")),
        ("tca/pair-module", pair_module("(a.u)_1v=a*(u_1v)-u_0v_0a")),
        ("tca/partial-product", partial_product("d(a*a')=a.da'+a'.da [tca]")),
        ("extra/unit", lambda: run(
            "1.v=v", [("G", dg)], lambda i: (b.dot(one, G[i]), G[i]))),
        ("extra/anchor-partial", lambda: run(
            "pi(da)=0", [("A", da), ("A", da)],
            lambda i, j: (b.pi(b.d(A[i]), A[j]), zA))),
        ("extra/pair-symmetric", lambda: run(
            "<u,v>=<v,u>", [("G", dg), ("G", dg)],
            lambda i, j: (b.pr(G[i], G[j]), b.pr(G[j], G[i])))),
        ("extra/leibniz", lambda: check_left_leibniz(b.leibniz())),
        ("extra/anchor-hom", lambda: run(
            "pi([u,v])=[pi(u),pi(v)]", [("G", dg), ("G", dg), ("A", da)],
            lambda i, j, k: (b.pi(b.br(G[i], G[j]), A[k]),
                             sub(b.pi(G[i], b.pi(G[j], A[k])), b.pi(G[j], b.pi(G[i], A[k])))))),
        ("extra/comm-assoc", lambda: [
            AxiomViolation("A/" + v.axiom_id, v.witness, v.lhs, v.rhs) for v in check_comm_assoc(b.a)]),
    ]
    return fams


def _parallel_enabled() -> bool:
    return not os.environ.get("ALGEBROID_NO_PARALLEL")


def check_vertex_algebroid(b: VertexAlgebroid, stop_at_first: bool = False,
                           parallel: bool | None = None) -> list[AxiomViolation]:
    """All violations, grouped by identity family in a fixed order."""
    fams = _families(b)
    if stop_at_first:
        for _, thunk in fams:
            found = thunk()
            if found:
                return found[:1]
        return []
    if parallel is None:
        parallel = _parallel_enabled()
    if parallel and len(fams) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(fams))) as pool:
            results = list(pool.map(lambda f: f[1](), fams))
    else:
        results = [thunk() for _, thunk in fams]
    return [v for group in results for v in group]


def axiom_families() -> list[str]:
    from .calg import trivial_algebra

    dummy = VertexAlgebroid(trivial_algebra(), 0, Trilinear((1, 0, 0)), Trilinear((0, 0, 0)),
                            Trilinear((0, 0, 1)), Trilinear((0, 1, 1)), ())
    return [name for name, _ in _families(dummy)]


def _require(b: VertexAlgebroid) -> None:
    bad = check_vertex_algebroid(b, stop_at_first=True)
    if bad:
        raise PreconditionError("not a vertex algebroid: " + bad[0].describe(b.labels and {
            "A": b.labels.get("A"), "G": b.labels.get("G")}))


# -- derived subspaces -------------------------------------------------------

def rad_pairing(b: VertexAlgebroid) -> Subspace:
    """{u : <u, v> = 0 for all v}."""
    dg, da = b.gdim, b.a.dim
    rows = tuple(tuple(b.pair.get(u, v, k) for u in range(dg)) for v in range(dg) for k in range(da))
    return kernel(rows, dg) if rows else Subspace.full(dg)


def annihilator(b: VertexAlgebroid) -> Subspace:
    """{u : u_0 a = 0 for all a}."""
    dg, da = b.gdim, b.a.dim
    rows = tuple(tuple(b.act.get(u, a, k) for u in range(dg)) for a in range(da) for k in range(da))
    return kernel(rows, dg)


def A0(b: VertexAlgebroid) -> Subspace:
    """{a : u_0 a = 0 for all u}."""
    dg, da = b.gdim, b.a.dim
    rows = tuple(tuple(b.act.get(u, a, k) for a in range(da)) for u in range(dg) for k in range(da))
    return kernel(rows, da) if rows else Subspace.full(da)


def a_partial_a(b: VertexAlgebroid) -> Subspace:
    da = b.a.dim
    return Subspace.span([b.dot(b.eA(i), b.d(b.eA(j))) for i in range(da) for j in range(da)], b.gdim)


def ker_partial(b: VertexAlgebroid) -> Subspace:
    if not b.gdim:
        return Subspace.full(b.a.dim)
    return kernel(b.partial, b.a.dim)


def image_partial(b: VertexAlgebroid) -> Subspace:
    if not b.gdim:
        return Subspace.zero(0)
    return image(b.partial, b.a.dim)


def is_algebroid_ideal(b: VertexAlgebroid, s: Subspace, side: str = "left") -> bool:
    """Leibniz ideal on ``side`` that is also stable under a . (-)."""
    if not is_leibniz_ideal(b.leibniz(), s, side):
        return False
    return all(s.contains(b.dot(b.eA(i), w)) for i in range(b.a.dim) for w in s.basis)


def _subalgebra_of_A(b: VertexAlgebroid, s: Subspace) -> bool:
    return all(s.contains(b.times(x, y)) for x in s.basis for y in s.basis)


def check_containments(b: VertexAlgebroid) -> Report:
    _require(b)
    rep = Report("containments")
    L = b.leibniz()
    rad, ann = rad_pairing(b), annihilator(b)
    leib, dA, apa, kd = leib_ideal(L), image_partial(b), a_partial_a(b), ker_partial(b)
    A = [b.eA(i) for i in range(b.a.dim)]
    G = [b.eG(i) for i in range(b.gdim)]

    rep.add("Prop-radann-i", is_leibniz_ideal(L, rad, "two-sided")
            and all(add(b.br(x, y), b.br(y, x)) == zero_vector(b.gdim)
                    for x in rad.basis for y in rad.basis),
            "rad<,> is a two-sided ideal and a Lie algebra")
    rep.add("Prop-radann-ii-ideal", is_leibniz_ideal(L, ann, "two-sided"), "Ann is a two-sided ideal")
    rep.add("Prop-radann-ii-rad<=Ann", rad <= ann, "rad<,> in Ann")
    rep.add("Prop-radann-ii-Leib<=dA", leib <= dA, "Leib in dA")
    rep.add("Prop-radann-ii-dA<=Ann", dA <= ann, "dA in Ann")
    ann_module = all(ann.contains(b.dot(a, w)) for a in A for w in ann.basis) and all(
        b.dot(b.times(x, y), w) == b.dot(x, b.dot(y, w)) for x in A for y in A for w in ann.basis)
    rep.add("Prop-radann-iii", ann_module and is_algebroid_ideal(b, ann),
            "Ann is an A-module and an algebroid ideal")
    rep.add("Prop-radann-iv", all(rad.contains(b.dot(a, w)) for a in A for w in rad.basis)
            and is_algebroid_ideal(b, rad), "rad<,> is an A-submodule and an algebroid ideal")
    rep.add("Cor-APartialA<=Ann", apa <= ann, "A dA in Ann")
    rep.add("Ex-APartialA-ideal", is_algebroid_ideal(b, apa), "A dA is an algebroid ideal")
    rep.add("Prop-ker-i", _subalgebra_of_A(b, kd) and kd.contains(b.a.unit), "Ker d is a subalgebra")
    rep.add("Prop-ker-ii", all(is_zero(b.pi(u, x)) for u in G for x in kd.basis),
            "Gamma acts trivially on Ker d")
    ker_mod = all(b.dot(b.times(x, y), u) == b.dot(x, b.dot(y, u))
                  for x in kd.basis for y in kd.basis for u in G)
    ker_mod = ker_mod and all(dA.contains(b.dot(x, w)) for x in kd.basis for w in dA.basis)
    rep.add("Prop-ker-iii", ker_mod, "Gamma and dA are Ker d-modules")
    rep.add("Prop-ker-iv-unit", kd.contains(b.a.unit), "1 in Ker d")
    idem = idempotents_in(b.a, kd)
    if idem is None:
        rep.add("Prop-ker-iv", True, "undetermined: A/J does not split over Q; no idempotent found outside")
    else:
        rep.add("Prop-ker-iv", idem, "every idempotent lies in Ker d")
    return rep


def verify_annba(b: VertexAlgebroid) -> Report:
    _require(b)
    rep = Report("Lemma-annba")
    L = b.leibniz()
    leib, ann, dA = leib_ideal(L), annihilator(b), image_partial(b)
    h1 = rep.add("Lemma-annba-hyp-simple", is_simple(L), "Gamma is a simple Leibniz algebra")
    h2 = rep.add("Lemma-annba-hyp-Leib!=0", not leib.is_zero(), "Leib != 0")
    h3 = rep.add("Lemma-annba-hyp-B!=Ann", not ann.is_full(), "Gamma != Ann")
    rep.applicable = h1.passed and h2.passed and h3.passed
    if rep.applicable:
        rep.add("Lemma-annba-Leib=dA", leib == dA, "Leib = dA")
        rep.add("Lemma-annba-dA=Ann", dA == ann, "dA = Ann")
        rep.add("Lemma-annba-Leib-ideal", is_algebroid_ideal(b, leib), "Leib is an algebroid ideal")
        rep.add("Lemma-annba-rad=0", rad_pairing(b).is_zero(), "rad<,> = 0")
    return rep


def verify_ker_eq_A0(b: VertexAlgebroid) -> Report:
    _require(b)
    rep = Report("Thm-ker")
    kd, a0 = ker_partial(b), A0(b)
    rad0 = rad_pairing(b).is_zero()
    rep.add("Prop-ker-ii", kd <= a0, "Ker d in A0")
    rep.applicable = rad0
    if rad0:
        rep.add("Thm-ker-A0", kd == a0, "rad<,> = 0, so Ker d = A0")
    return rep


# -- Lie algebroids ----------------------------------------------------------

@dataclass(frozen=True)
class LieAlgebroid:
    a: CommAlg
    ldim: int
    lie: Trilinear
    amod: Trilinear
    anchor: Trilinear

    def __post_init__(self):
        da, dl = self.a.dim, self.ldim
        for name, dims in {"lie": (dl, dl, dl), "amod": (da, dl, dl), "anchor": (dl, da, da)}.items():
            if tuple(getattr(self, name).dims) != dims:
                raise DimensionError("%s dims %r, expected %r" % (name, getattr(self, name).dims, dims))


@dataclass(frozen=True)
class AlgebroidModule:
    algd: LieAlgebroid
    dim: int
    gact: Trilinear
    aact: Trilinear

    def ops(self) -> list:
        g, a = self.algd, self.algd.a
        out = [self.gact.left_operator(unit_vector(g.ldim, i)) for i in range(g.ldim)]
        out += [self.aact.left_operator(unit_vector(a.dim, i)) for i in range(a.dim)]
        return out


def check_lie_algebroid(g: LieAlgebroid) -> list[AxiomViolation]:
    out = []
    dl, da = g.ldim, g.a.dim
    L = LeibnizAlg(dl, g.lie)
    if not is_antisymmetric(L):
        out.append(AxiomViolation("lie/antisymmetric", (), (), ()))
    out += check_left_leibniz(L)
    U = [unit_vector(dl, i) for i in range(dl)]
    A = [unit_vector(da, i) for i in range(da)]
    mul = g.a.mul
    for i, j, k in product(range(dl), range(da), range(dl)):
        lhs = g.lie(U[i], g.amod(A[j], U[k]))
        rhs = add(g.amod(A[j], g.lie(U[i], U[k])), g.amod(g.anchor(U[i], A[j]), U[k]))
        if lhs != rhs:
            out.append(AxiomViolation("[u,av]=a[u,v]+(ua)v", (("L", i), ("A", j), ("L", k)), lhs, rhs))
    for i, j, k in product(range(da), range(dl), range(da)):
        lhs = mul(A[i], g.anchor(U[j], A[k]))
        rhs = g.anchor(g.amod(A[i], U[j]), A[k])
        if lhs != rhs:
            out.append(AxiomViolation("a(ub)=(au)b", (("A", i), ("L", j), ("A", k)), lhs, rhs))
    for i, j, k in product(range(da), range(da), range(dl)):
        lhs = g.amod(mul(A[i], A[j]), U[k])
        rhs = g.amod(A[i], g.amod(A[j], U[k]))
        if lhs != rhs:
            out.append(AxiomViolation("A-module", (("A", i), ("A", j), ("L", k)), lhs, rhs))
    for k in range(dl):
        if g.amod(g.a.unit, U[k]) != U[k]:
            out.append(AxiomViolation("A-unit", (("L", k),), g.amod(g.a.unit, U[k]), U[k]))
    for i, j, k in product(range(dl), range(da), range(da)):
        lhs = g.anchor(U[i], mul(A[j], A[k]))
        rhs = add(mul(A[j], g.anchor(U[i], A[k])), mul(g.anchor(U[i], A[j]), A[k]))
        if lhs != rhs:
            out.append(AxiomViolation("anchor-derivation", (("L", i), ("A", j), ("A", k)), lhs, rhs))
    for i, j, k in product(range(dl), range(dl), range(da)):
        lhs = g.anchor(g.lie(U[i], U[j]), A[k])
        rhs = sub(g.anchor(U[i], g.anchor(U[j], A[k])), g.anchor(U[j], g.anchor(U[i], A[k])))
        if lhs != rhs:
            out.append(AxiomViolation("anchor-module", (("L", i), ("L", j), ("A", k)), lhs, rhs))
    return out


def check_algebroid_module(m: AlgebroidModule) -> list[AxiomViolation]:
    out = []
    g = m.algd
    dl, da, n = g.ldim, g.a.dim, m.dim
    U = [unit_vector(dl, i) for i in range(dl)]
    A = [unit_vector(da, i) for i in range(da)]
    W = [unit_vector(n, i) for i in range(n)]
    for i, j, k in product(range(dl), range(dl), range(n)):
        lhs = m.gact(g.lie(U[i], U[j]), W[k])
        rhs = sub(m.gact(U[i], m.gact(U[j], W[k])), m.gact(U[j], m.gact(U[i], W[k])))
        if lhs != rhs:
            out.append(AxiomViolation("g-module", (("L", i), ("L", j), ("W", k)), lhs, rhs))
    for i, j, k in product(range(da), range(da), range(n)):
        lhs = m.aact(g.a.mul(A[i], A[j]), W[k])
        rhs = m.aact(A[i], m.aact(A[j], W[k]))
        if lhs != rhs:
            out.append(AxiomViolation("A-module", (("A", i), ("A", j), ("W", k)), lhs, rhs))
    for k in range(n):
        if m.aact(g.a.unit, W[k]) != W[k]:
            out.append(AxiomViolation("A-unit", (("W", k),), m.aact(g.a.unit, W[k]), W[k]))
    for i, j, k in product(range(dl), range(da), range(n)):
        lhs = sub(m.gact(U[i], m.aact(A[j], W[k])), m.aact(A[j], m.gact(U[i], W[k])))
        rhs = m.aact(g.anchor(U[i], A[j]), W[k])
        if lhs != rhs:
            out.append(AxiomViolation("u(aw)-a(uw)=(ua)w", (("L", i), ("A", j), ("W", k)), lhs, rhs))
        lhs = m.aact(A[j], m.gact(U[i], W[k]))
        rhs = m.gact(g.amod(A[j], U[i]), W[k])
        if lhs != rhs:
            out.append(AxiomViolation("a(uw)=(au)w", (("A", j), ("L", i), ("W", k)), lhs, rhs))
    return out


def quotient_lie_algebroid(b: VertexAlgebroid, which: str = "Ann") -> tuple[LieAlgebroid, AlgebroidModule]:
    """Gamma / S for S = Ann or S = A dA, with A as its canonical module.

    The quotient basis is the set of non-pivot coordinates of S.
    """
    _require(b)
    if which == "Ann":
        s = annihilator(b)
    elif which == "APartialA":
        s = a_partial_a(b)
    else:
        raise ValueError("which must be 'Ann' or 'APartialA'")
    if not is_algebroid_ideal(b, s, "two-sided"):
        raise PreconditionError("%s is not a two-sided ideal stable under A" % which)
    if not s <= annihilator(b):
        raise PreconditionError("%s is not inside Ann, so the anchor does not descend" % which)
    comp = s.complement_indices()
    q, da = len(comp), b.a.dim
    lift = [b.eG(c) for c in comp]
    lie = Trilinear.from_function((q, q, q), lambda i, j: s.quotient_coords(b.br(lift[i], lift[j])))
    amod = Trilinear.from_function((da, q, q), lambda i, j: s.quotient_coords(b.dot(b.eA(i), lift[j])))
    anchor = Trilinear.from_function((q, da, da), lambda i, j: b.pi(lift[i], b.eA(j)))
    g = LieAlgebroid(b.a, q, lie, amod, anchor)
    bad = check_lie_algebroid(g)
    if bad:
        raise PreconditionError("quotient is not a Lie algebroid: " + bad[0].describe())
    mod = AlgebroidModule(g, da, anchor, b.a.mul)
    return g, mod


def _eigen_candidates(ops: list, n: int):
    for op in ops:
        if all(is_zero(r) for r in op):
            continue
        for lam in rational_eigenvalues(op):
            shifted = mat_sub(op, mat_scale(lam, identity(n)))
            for v in kernel(shifted, n).basis:
                yield v
    for i in range(n):
        yield unit_vector(n, i)


def module_simple_over_C(m: AlgebroidModule) -> tuple[bool, Subspace | None]:
    """Burnside test; a proper invariant subspace is returned when found."""
    n = m.dim
    ops = m.ops()
    if n <= 1:
        return True, None
    if envelope(ops, n).dim == n * n:
        return True, None
    best = None
    seen = set()
    for v in _eigen_candidates(ops, n):
        if v in seen:
            continue
        seen.add(v)
        w = spin([v], ops, n)
        if 0 < w.dim < n and (best is None or w.dim < best.dim):
            best = w
    return False, best


def is_invariant(ops: list, w: Subspace) -> bool:
    return all(w.contains(matvec(op, v)) for op in ops for v in w.basis)


# -- criteria engine ---------------------------------------------------------

@dataclass
class CriteriaVerdict:
    hypotheses: list = field(default_factory=list)
    conclusion: str = "NoVerdict"
    applicable: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)

    def clause(self, id: str):
        for c in self.hypotheses:
            if c.id == id:
                return c
        raise KeyError(id)

    @property
    def verdict(self) -> str:
        return self.conclusion

    def to_report(self) -> Report:
        rep = Report("criteria", list(self.hypotheses))
        return rep

    def lines(self) -> list[str]:
        out = [c.line() for c in self.hypotheses]
        for a in self.assumptions:
            out.append("ASSUME  " + a)
        out.append("verdict: " + self.conclusion)
        return out

    def to_json(self) -> dict:
        return {
            "checks": [c.to_json() for c in self.hypotheses],
            "assumptions": list(self.assumptions),
            "applicable": list(self.applicable),
            "verdict": self.conclusion,
        }


def _levi_rows(levi, gdim: int):
    if levi is None:
        return None
    if isinstance(levi, Subspace):
        rows = list(levi.basis)
    else:
        rows = [tuple(Fraction(x) for x in r) for r in levi]
    if any(len(r) != gdim for r in rows):
        raise DimensionError("levi rows must have length %d" % gdim)
    return rows


def _square_witness(b: VertexAlgebroid):
    """Some u with u_0 u != 0, or None when u -> [u, u] vanishes identically."""
    G = [b.eG(i) for i in range(b.gdim)]
    for i in range(b.gdim):
        if not is_zero(b.br(G[i], G[i])):
            return G[i]
    for i in range(b.gdim):
        for j in range(i + 1, b.gdim):
            if not is_zero(add(b.br(G[i], G[j]), b.br(G[j], G[i]))):
                return add(G[i], G[j])
    return None


def criteria_engine(b: VertexAlgebroid, levi=None) -> CriteriaVerdict:
    """Evaluate the hypotheses of both indecomposable/non-simple criteria.

    Clause ids are "Thm1.1-a" ... "Thm1.2-ii"; every clause is reported
    separately with a witness where one exists.
    """
    _require(b)
    out = CriteriaVerdict()
    H = out.hypotheses

    def add_check(id, ok, detail="", witness=None):
        c = Check(id, bool(ok), detail, witness)
        H.append(c)
        return c.passed

    L = b.leibniz()
    da, dg = b.a.dim, b.gdim
    dims_ok = 2 <= da and 1 <= dg
    out.assumptions.append("V is generated by V(0) and V(1) (holds for the algebra built from an algebroid)")
    a11 = add_check("Thm1.1-a", dims_ok, "dim A = %d, dim Gamma = %d" % (da, dg))
    local = is_local_over_C(b.a)
    b11 = add_check("Thm1.1-b", local, "A is local" if local else "A is not local")
    rad = rad_pairing(b)
    i11 = add_check("Thm1.1-i", not rad.is_zero(),
                    "rad<,> != 0, so the ideal it generates is nonzero" if not rad.is_zero() else "rad<,> = 0",
                    [list(r) for r in rad.basis] or None)

    def not_simple_over(which):
        try:
            _, mod = quotient_lie_algebroid(b, which)
        except PreconditionError as exc:
            return False, "quotient unavailable: %s" % exc, None
        simple, wit = module_simple_over_C(mod)
        if simple:
            return False, "A is a simple module over Gamma/%s" % which, None
        detail = "A is not simple over Gamma/%s" % which
        if wit is not None:
            detail += "; invariant subspace " + ", ".join(
                b.describe_vector("A", r) for r in wit.basis)
        return True, detail, [list(r) for r in wit.basis] if wit is not None else None

    ok, detail, wit = not_simple_over("Ann")
    ii11 = add_check("Thm1.1-ii", ok, detail, wit)
    ok, detail, wit = not_simple_over("APartialA")
    iii11 = add_check("Thm1.1-iii", ok, detail, wit)

    a12 = add_check("Thm1.2-a", dims_ok, "dim A = %d, dim Gamma = %d" % (da, dg))
    nontrivial = not annihilator(b).is_full()
    sq = _square_witness(b)
    b12 = add_check("Thm1.2-b", nontrivial and sq is not None,
                    "; ".join([
                        "A is %sa trivial Gamma-module" % ("not " if nontrivial else ""),
                        "u_0u != 0 for u = %s" % b.describe_vector("G", sq) if sq is not None
                        else "u_0u = 0 for all u"]),
                    list(sq) if sq is not None else None)
    c12 = _levi_clause(b, L, levi, add_check)
    i12 = add_check("Thm1.2-i", is_simple(L), "Gamma is %ssimple" % ("" if is_simple(L) else "not "))
    ss = is_semisimple(L)
    kd_eq = ker_partial(b) == A0(b)
    ii12 = add_check("Thm1.2-ii", ss and kd_eq, "Gamma %s semisimple; Ker d %s A0" % (
        "is" if ss else "is not", "=" if kd_eq else "!="))

    base11 = a11 and b11
    base12 = a12 and b12 and c12
    for ok, name in ((base12 and i12, "Thm 1.2(i)"), (base12 and ii12, "Thm 1.2(ii)"),
                     (base11 and i11, "Thm 1.1(i)"), (base11 and ii11, "Thm 1.1(ii)"),
                     (base11 and iii11, "Thm 1.1(iii)")):
        if ok:
            out.applicable.append(name)
    if out.applicable:
        out.conclusion = "IndecomposableNonSimple via " + out.applicable[0]
    elif not a11:
        # (a) is shared by both theorems
        out.conclusion = "NoVerdict: clause (a) fails"
    else:
        failed = [c.id for c in H if not c.passed]
        out.conclusion = "NoVerdict: failing clauses " + ", ".join(failed)
    return out


def _levi_clause(b: VertexAlgebroid, L: LeibnizAlg, levi, add_check) -> bool:
    rows = _levi_rows(levi, b.gdim)
    if rows is None:
        return add_check("Thm1.2-c", False, "no Levi candidate supplied")
    if len(rows) != 3:
        return add_check("Thm1.2-c", False, "Levi candidate must be an ordered triple (e, f, h)")
    e, f, h = rows
    s = Subspace.span(rows, b.gdim)
    problems = []
    if s.dim != 3:
        problems.append("e, f, h are not independent")
    elif not verify_levi(L, s):
        problems.append("span{e,f,h} is not a Levi factor")
    if b.br(e, f) != h:
        problems.append("e_0f != h")
    if b.br(h, e) != scale(2, e):
        problems.append("h_0e != 2e")
    if b.br(h, f) != scale(-2, f):
        problems.append("h_0f != -2f")
    ef = b.pr(e, f)
    k = None
    unit = b.a.unit
    p = next((i for i, x in enumerate(unit) if x), None)
    if p is not None and ef == scale(ef[p] / unit[p], unit):
        k = ef[p] / unit[p]
    if k is None or k == 0:
        problems.append("e_1f is not a nonzero multiple of 1")
    if problems:
        return add_check("Thm1.2-c", False, "; ".join(problems))
    return add_check("Thm1.2-c", True, "Levi factor span{e,f,h} with sl2 table; e_1f = k 1 with k = %s" % format_rat(k),
                     {"k": k})


def with_table(b: VertexAlgebroid, name: str, table) -> VertexAlgebroid:
    """Copy of ``b`` with one table replaced (``mul`` replaces the product of A)."""
    if name == "mul":
        return replace(b, a=replace(b.a, mul=table))
    return replace(b, **{name: table})


__all__ = [
    "VertexAlgebroid", "check_vertex_algebroid", "rad_pairing", "annihilator", "A0",
    "a_partial_a", "ker_partial", "image_partial", "check_containments", "verify_annba",
    "verify_ker_eq_A0", "LieAlgebroid", "AlgebroidModule", "quotient_lie_algebroid",
    "module_simple_over_C", "criteria_engine", "CriteriaVerdict", "is_invariant",
    "check_lie_algebroid", "check_algebroid_module", "is_algebroid_ideal", "with_table",
]
