"""The sl2 family of vertex algebroids and related constructions.

Index layout for l blocks N^1..N^l:

    A:     0 = 1,  a_{j,0} = 2j - 1,  a_{j,1} = 2j
    Gamma: e = 0, f = 1, h = 2,  da_{j,0} = 2j + 1,  da_{j,1} = 2j + 2
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .calg import CommAlg, is_assoc_ideal, is_local_over_C
from .exactlin import (
    Subspace, Trilinear, envelope, format_rat, is_zero, matrix, matvec, nullspace,
    rational_roots, scale, solve_linear, unit_vector,
)
from .leibniz import LeibnizAlg, build_hemisemidirect, direct_sum, leib_ideal, sl2, sl2_module
from .report import Report
from .valgd import (
    VertexAlgebroid, annihilator, check_containments, check_vertex_algebroid, criteria_engine,
    image_partial, ker_partial, quotient_lie_algebroid, rad_pairing,
)

E, F, H = 0, 1, 2


@dataclass(frozen=True)
class FamilySpec:
    l: int
    variant: str = ""

    def __post_init__(self):
        if not isinstance(self.l, int) or self.l < 1:
            raise ValueError("l must be an integer >= 1")
        v = self.variant or ("simple" if self.l == 1 else "semisimple")
        if v not in ("simple", "semisimple"):
            raise ValueError("variant must be simple or semisimple")
        if v == "simple" and self.l != 1:
            raise ValueError("the simple variant has l = 1")
        object.__setattr__(self, "variant", v)

    @property
    def adim(self) -> int:
        return 2 * self.l + 1

    @property
    def gdim(self) -> int:
        return 2 * self.l + 3


def _a(j: int, i: int) -> int:
    return 2 * j - 1 + i


def _da(j: int, i: int) -> int:
    return 2 * j + 1 + i


def family_labels(l: int) -> dict:
    if l == 1:
        return {"A": ["1", "a0", "a1"], "G": ["e", "f", "h", "da0", "da1"]}
    a = ["1"] + ["a%d_%d" % (j, i) for j in range(1, l + 1) for i in (0, 1)]
    g = ["e", "f", "h"] + ["da%d_%d" % (j, i) for j in range(1, l + 1) for i in (0, 1)]
    return {"A": a, "G": g}


def _coerce(spec) -> FamilySpec:
    return spec if isinstance(spec, FamilySpec) else FamilySpec(int(spec))


def build_sl2_algebroid(spec) -> VertexAlgebroid:
    spec = _coerce(spec)
    l, da, dg = spec.l, spec.adim, spec.gdim
    blocks = range(1, l + 1)

    mul = [(0, 0, 0, 1)]
    for k in range(1, da):
        mul += [(0, k, k, 1), (k, 0, k, 1)]

    mact = [(0, v, v, 1) for v in range(dg)]
    brk = [(E, F, H, 1), (F, E, H, -1), (H, E, E, 2), (E, H, E, -2), (H, F, F, -2), (F, H, F, 2)]
    act = []
    pair = [(E, F, 0, 1), (F, E, 0, 1), (H, H, 0, 2)]
    partial = [[0] * da for _ in range(dg)]
    for j in blocks:
        a0, a1, d0, d1 = _a(j, 0), _a(j, 1), _da(j, 0), _da(j, 1)
        partial[d0][a0] = 1
        partial[d1][a1] = 1
        mact += [(a0, F, d1, 1), (a0, H, d0, 1), (a1, E, d0, 1), (a1, H, d1, -1)]
        brk += [(H, d0, d0, 1), (H, d1, d1, -1), (F, d0, d1, 1), (E, d1, d0, 1)]
        act += [(H, a0, a0, 1), (H, a1, a1, -1), (F, a0, a1, 1), (E, a1, a0, 1)]
        for u, v, k, c in [(E, d1, a0, 1), (F, d0, a1, 1), (H, d0, a0, 1), (H, d1, a1, -1)]:
            pair += [(u, v, k, c), (v, u, k, c)]
    a = CommAlg(da, unit_vector(da, 0), Trilinear.from_entries((da, da, da), mul))
    return VertexAlgebroid(
        a, dg,
        Trilinear.from_entries((da, dg, dg), mact),
        Trilinear.from_entries((dg, dg, dg), brk),
        Trilinear.from_entries((dg, dg, da), pair),
        Trilinear.from_entries((dg, da, da), act),
        matrix(partial),
        labels=family_labels(l),
    )


def levi_rows(spec) -> list[tuple]:
    spec = _coerce(spec)
    return [unit_vector(spec.gdim, i) for i in (E, F, H)]


def block(spec, j: int) -> Subspace:
    """N^j = span{a_{j,0}, a_{j,1}} inside A."""
    spec = _coerce(spec)
    return Subspace.coordinate(spec.adim, [_a(j, 0), _a(j, 1)])


def _restricted_ops(ops, w: Subspace):
    mats = []
    d = w.dim
    for op in ops:
        cols = [w.coords_in_basis(matvec(op, v)) for v in w.basis]
        mats.append(tuple(tuple(cols[c][r] for c in range(d)) for r in range(d)))
    return mats


def verify_family_theorems(spec) -> Report:
    """Recompute every structural claim about the family from the built tables."""
    spec = _coerce(spec)
    b = build_sl2_algebroid(spec)
    l, da = spec.l, spec.adim
    thm = "Thm-Bsimple" if spec.variant == "simple" else "Thm-Bsemisimple"
    rep = Report("%s l=%d" % (thm, l))
    one = b.a.unit
    e, f, h = (b.eG(i) for i in (E, F, H))

    bad = check_vertex_algebroid(b)
    rep.add("axioms", not bad, "%d violations" % len(bad))
    ef = b.pr(e, f)
    rep.add(thm + "-i-k=1", ef == one, "e_1f = " + b.describe_vector("A", ef))
    hh = b.pr(h, h)
    rep.add(thm + "-i-h1h=2", hh == scale(2, one), "h_1h = " + b.describe_vector("A", hh))
    zeros = [b.pr(x, y) for x, y in ((e, e), (f, f), (e, h), (f, h))]
    rep.add(thm + "-i-zero-pairings", all(is_zero(z) for z in zeros), "e_1e = f_1f = e_1h = f_1h = 0")
    kd = ker_partial(b)
    rep.add(thm + "-ii-Ker", kd == Subspace.span([one], da),
            "Ker d = span{%s}" % ", ".join(b.describe_vector("A", r) for r in kd.basis))
    L = b.leibniz()
    leib = leib_ideal(L)
    d_images = Subspace.span([b.d(b.eA(_a(j, i))) for j in range(1, l + 1) for i in (0, 1)], b.gdim)
    rep.add(thm + "-iii-Leib", leib.dim == 2 * l and leib == d_images,
            "dim Leib = %d, spanned by the d a_{j,i}" % leib.dim)
    rep.add(thm + "-iv-local", is_local_over_C(b.a), "A is local")
    ann, dA = annihilator(b), image_partial(b)
    rep.add("Cor-Ann=dA=Leib", ann == dA == leib, "Ann = dA = Leib (dim %d)" % ann.dim)
    rep.add("Lemma-annba-rad=0", rad_pairing(b).is_zero(), "rad<,> = 0")

    g, mod = quotient_lie_algebroid(b, "Ann")
    rep.add("Rmk-quotient-sl2", g.ldim == 3 and g.lie == sl2().bracket, "Gamma/Ann has the sl2 table")
    ops = mod.ops()
    for j in range(1, l + 1):
        nj = block(spec, j)
        rep.add("N%d-dim" % j, nj.dim == 2, "dim N^%d = 2" % j)
        rep.add("N%d-ideal" % j, is_assoc_ideal(b.a, nj) and not nj.is_full(), "N^%d is a proper ideal of A" % j)
        invariant = all(nj.contains(v) for v in (m for op in ops for m in _images(op, nj)))
        env = envelope(_restricted_ops(ops, nj), 2).dim if invariant else 0
        rep.add("N%d-irreducible" % j, invariant and env == 4,
                "N^%d invariant, envelope dim %d" % (j, env))
    nonzero = Subspace.span([b.eA(k) for k in range(1, da)], da)
    rep.add("Rmk-A!=0-ideal", is_assoc_ideal(b.a, nonzero) and not nonzero.is_full(),
            "A_{!=0} is a proper ideal of A")
    cont = check_containments(b)
    rep.add("containments", cont.ok, "; ".join(c.id for c in cont.failed()) or "all hold")
    verdict = criteria_engine(b, levi_rows(spec))
    want = "IndecomposableNonSimple via Thm 1.2(%s)" % ("i" if spec.variant == "simple" else "ii")
    rep.add("criteria", verdict.conclusion == want, verdict.conclusion)
    return rep


def _images(op, w: Subspace):
    return [matvec(op, v) for v in w.basis]


def build_simple_leibniz_sl2(m: int, copies: int = 1) -> LeibnizAlg:
    """sl2 + V with V the irreducible module of dimension ``m``.

    With ``copies`` > 1 the module is a direct sum of that many copies.
    """
    if m < 1:
        raise ValueError("module dimension must be >= 1")
    if m == 1:
        warnings.warn("dimension 1 gives the trivial module: zero action, Leib = 0", stacklevel=2)
    mod = direct_sum(*[sl2_module(m - 1)] * copies) if copies > 1 else sl2_module(m - 1)
    return build_hemisemidirect(sl2(), mod)


# -- the dimension-1 probe ---------------------------------------------------

@dataclass
class ProbeResult:
    variant: str
    feasible: bool
    trace: list[str] = field(default_factory=list)
    model: VertexAlgebroid | None = None

    @property
    def verdict(self) -> str:
        return "FEASIBLE" if self.feasible else "INFEASIBLE"

    def to_json(self) -> dict:
        return {"variant": self.variant, "verdict": self.verdict, "trace": list(self.trace)}


# Gamma = span{e, f, h, da}; ad on Gamma, columns are images of basis vectors.
_PROBE_AD = {
    "h": {0: (2, 0, 0, 0), 1: (0, -2, 0, 0), 2: (0, 0, 0, 0), 3: (0, 0, 0, 0)},
    "e": {0: (0, 0, 0, 0), 1: (0, 0, 1, 0), 2: (-2, 0, 0, 0), 3: (0, 0, 0, 0)},
    "f": {0: (0, 0, -1, 0), 1: (0, 0, 0, 0), 2: (0, 2, 0, 0), 3: (0, 0, 0, 0)},
}
_PROBE_NAMES = ("e", "f", "h", "da")


def _ad(x: str, v):
    out = [0] * 4
    for k, c in enumerate(v):
        if c:
            for r, w in enumerate(_PROBE_AD[x][k]):
                out[r] += c * w
    return tuple(out)


def _fmt(v) -> str:
    terms = ["%s%s" % ("" if c == 1 else format_rat(c) + "*", n) for c, n in zip(v, _PROBE_NAMES) if c]
    return " + ".join(terms) or "0"


def _probe_constraints(unknowns):
    """Residuals u_0(a.v) - a.(u_0 v) for (u, v) = (h, e), (e, e), (f, e).

    ``unknowns`` holds the coordinates of a.e (first 4) and a.h (last 4);
    a.(h_0 e) = 2 a.e, a.(e_0 e) = 0, a.(f_0 e) = -a.h.
    """
    ae, ah = unknowns[:4], unknowns[4:]
    r1 = tuple(x - 2 * y for x, y in zip(_ad("h", ae), ae))
    r2 = _ad("e", ae)
    r3 = tuple(x + y for x, y in zip(_ad("f", ae), ah))
    return r1 + r2 + r3


def probe_dim1_extension(variant: str) -> ProbeResult:
    """Try to extend sl2 by a 1-dimensional N = span{a} with e_1f = k 1, k != 0.

    ``variant`` is "unit" (a*a = 1), "nil" (a*a = 0) or "reference", which
    instead certifies the l = 1 family model.
    """
    if variant == "reference":
        return _probe_reference()
    if variant not in ("unit", "nil"):
        raise ValueError("variant must be unit, nil or reference")
    t = []
    res = ProbeResult(variant, False, t)
    t.append("setup: A = span{1, a} with a*a = %s; Gamma = span{e, f, h, da}; Gamma acts trivially on a"
             % ("1" if variant == "unit" else "0"))
    t.append("unknowns: a.e = x1 e + y1 f + z1 h + b1 da, a.h = x2 e + y2 f + z2 h + b2 da")
    # linear system from the bracket-module identity with (u_0 a).v = 0
    cols = [_probe_constraints(unit_vector(8, k)) for k in range(8)]
    mat = tuple(tuple(cols[k][r] for k in range(8)) for r in range(12))
    kern = nullspace(mat, 8)
    t.append("step 1: impose u_0(a.v) - a.(u_0v) = 0 for (u,v) = (h,e), (e,e), (f,e): "
             "12 equations, solution space of dim %d" % len(kern))
    if len(kern) != 1:
        t.append("unexpected solution space; probe aborted")
        return res
    sol = kern[0]
    pivot = next(c for c in sol if c)
    sol = tuple(c / pivot for c in sol)
    t.append("  a.e = x (%s), a.h = x (%s)" % (_fmt(sol[:4]), _fmt(sol[4:])))
    # a.(a.e) - (a*a).e = 2 (e_0 a).da = 0, and a.(a.e) = x^2 e
    c = 1 if variant == "unit" else 0
    roots = rational_roots([1, 0, -c])
    t.append("step 2: a.(a.e) = (a*a).e gives x^2 e = %s, so x^2 = %d; roots x in {%s}"
             % ("e" if c else "0", c, ", ".join(format_rat(r) for r in roots)))
    for x in roots:
        # (a.e)_1 f = a*(e_1 f) - e_0 f_0 a = a*(k 1): x k 1 = k a, coordinates in (1, a)
        system = ((x,), (-1,))
        sol_k = solve_linear(system, (0, 0), 1)
        forced = sol_k is not None and not sol_k.kernel and sol_k.particular == (0,)
        t.append("step 3 [x = %s]: (a.e)_1f = a*(e_1f) gives %s k 1 = k a, i.e. k (%s, -1) = 0; "
                 "solutions: %s" % (format_rat(x), format_rat(x), format_rat(x),
                                    "k = 0 only" if forced else "k free"))
        if not forced:
            res.feasible = True
            t.append("  branch x = %s admits k != 0" % format_rat(x))
            return res
        t.append("  contradiction: k = 0 but e_1f = k 1 requires k != 0")
    t.append("INFEASIBLE: no 1-dimensional N exists (a*a = %s)" % ("1" if c else "0"))
    return res


def _probe_reference() -> ProbeResult:
    t = []
    b = build_sl2_algebroid(FamilySpec(1))
    t.append("reference: l = 1 family with dim N = 2")
    bad = check_vertex_algebroid(b)
    t.append("axiom check: %d violations" % len(bad))
    ef = b.pr(b.eG(E), b.eG(F))
    t.append("e_1f = %s" % b.describe_vector("A", ef))
    ok = not bad and not is_zero(ef) and ef == b.a.unit
    t.append("FEASIBLE" if ok else "INFEASIBLE")
    return ProbeResult("reference", ok, t, b if ok else None)


__all__ = [
    "FamilySpec", "build_sl2_algebroid", "verify_family_theorems", "build_simple_leibniz_sl2",
    "probe_dim1_extension", "ProbeResult", "levi_rows", "block", "family_labels",
]
