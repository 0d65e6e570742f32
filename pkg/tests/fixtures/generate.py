"""Rebuild the JSON fixture corpus in this directory.

Run ``python3 tests/fixtures/generate.py``; the test suite checks that the
committed files match what this script produces.
"""

from __future__ import annotations

import sys
from pathlib import Path

from algebroid.calg import CommAlg, dual_numbers, product_algebra
from algebroid.exactlin import Trilinear, unit_vector
from algebroid.fixtures import emit
from algebroid.leibniz import build_hemisemidirect, sl2, sl2_module, trace_form
from algebroid.mutation import mutants
from algebroid.sl2family import build_sl2_algebroid, levi_rows
from algebroid.tca import TCA, tca_from_lie_pair, tca_of_vertex_algebroid, zero_tca
from algebroid.valgd import VertexAlgebroid

HERE = Path(__file__).resolve().parent
E, F, H = 0, 1, 2
SL2_LABELS = ["e", "f", "h"]


def sl2_over_C() -> VertexAlgebroid:
    """A = C, Gamma = sl2, d = 0, pairing e_1f = 1, h_1h = 2."""
    g = sl2()
    a = CommAlg(1, (1,), Trilinear.from_entries((1, 1, 1), [(0, 0, 0, 1)]))
    return VertexAlgebroid(
        a, 3,
        Trilinear.from_entries((1, 3, 3), [(0, v, v, 1) for v in range(3)]),
        g.bracket,
        Trilinear.from_entries((3, 3, 1), [(E, F, 0, 1), (F, E, 0, 1), (H, H, 0, 2)]),
        Trilinear((3, 1, 1), {}),
        ((0,), (0,), (0,)),
        labels={"A": ["1"], "G": SL2_LABELS},
    )


def dual_numbers_algebroid() -> VertexAlgebroid:
    """A = C[x]/(x^2), Gamma = span{dx}, zero pairing, zero bracket."""
    a = dual_numbers()
    return VertexAlgebroid(
        a, 1,
        Trilinear.from_entries((2, 1, 1), [(0, 0, 0, 1)]),
        Trilinear((1, 1, 1), {}),
        Trilinear((1, 1, 2), {}),
        Trilinear((1, 2, 2), {}),
        ((0, 1),),
        labels={"A": ["1", "x"], "G": ["dx"]},
    )


def abelian_line() -> VertexAlgebroid:
    """A = C, Gamma one-dimensional with everything zero."""
    a = CommAlg(1, (1,), Trilinear.from_entries((1, 1, 1), [(0, 0, 0, 1)]))
    return VertexAlgebroid(
        a, 1, Trilinear.from_entries((1, 1, 1), [(0, 0, 0, 1)]), Trilinear((1, 1, 1), {}),
        Trilinear((1, 1, 1), {}), Trilinear((1, 1, 1), {}), ((0,),),
        labels={"A": ["1"], "G": ["u"]},
    )


def lie_pair_tca() -> TCA:
    v = sl2_module(2)
    return tca_from_lie_pair(sl2(), trace_form(sl2_module(1)), v, v, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def _mutant(obj, where):
    for w, m in mutants(obj):
        if w == where:
            return m
    raise KeyError(where)


def corpus() -> dict[str, str]:
    files = {}

    def put(name, obj, **kw):
        files[name + ".json"] = emit(obj, name, **kw)

    for l in range(1, 5):
        put("sl2-family-l%d" % l, build_sl2_algebroid(l), subspaces={"levi": levi_rows(l)})
    fam = build_sl2_algebroid(1)
    levi1 = {"levi": levi_rows(1)}
    put("sl2-over-C", sl2_over_C(), subspaces={"levi": [unit_vector(3, i) for i in range(3)]})
    put("dual-numbers", dual_numbers_algebroid())
    put("abelian-line", abelian_line())
    for where in (("mul", 1, 1, 0), ("brk", 0, 1, 2), ("pair", 2, 2, 0), ("partial", 3, 0)):
        put("mutant-family-l1-" + "-".join(map(str, where)), _mutant(fam, where), subspaces=levi1)

    put("comm-dual-numbers", dual_numbers(), labels={"A": ["1", "x"]})
    put("comm-product-2", product_algebra(2))
    put("leibniz-sl2", sl2(), labels={"L": SL2_LABELS})
    put("leibniz-sl2-V3", build_hemisemidirect(sl2(), sl2_module(2)))

    t1 = tca_of_vertex_algebroid(fam)
    put("tca-family-l1", t1)
    put("tca-family-l2", tca_of_vertex_algebroid(build_sl2_algebroid(2)))
    put("tca-sl2-over-C", tca_of_vertex_algebroid(sl2_over_C()))
    put("tca-dual-numbers", tca_of_vertex_algebroid(dual_numbers_algebroid()))
    put("tca-zero-1-1", zero_tca(1, 1))
    put("tca-zero-2-3", zero_tca(2, 3))
    put("tca-lie-pair-sl2-V3", lie_pair_tca())
    for where in (("act0", 0, 1, 1), ("brk0", 0, 1, 2), ("pair1", 0, 1, 0), ("pair1", 0, 0, 1),
                  ("partial", 3, 1), ("partial", 0, 0)):
        put("tca-mutant-family-l1-" + "-".join(map(str, where)), _mutant(t1, where))
    put("tca-mutant-lie-pair-brk0-3-4-5", _mutant(lie_pair_tca(), ("brk0", 3, 4, 5)))
    return files


def main(argv=None) -> int:
    for name, text in corpus().items():
        (HERE / name).write_text(text)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
