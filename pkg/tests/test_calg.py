from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from algebroid.calg import (
    CommAlg, all_idempotents, check_comm_assoc, dual_numbers, idempotents_in, is_assoc_ideal,
    is_local_over_C, jacobson_radical, primitive_idempotents, product_algebra,
    square_zero_extension, trivial_algebra,
)
from algebroid.exactlin import DimensionError, Subspace, Trilinear
from algebroid.report import PreconditionError

T = sympy.Symbol("t")


def truncated_poly_algebra(coeffs):
    """Q[t]/(p) in the basis 1, t, ..., t^(n-1) for monic p given low degree first."""
    n = len(coeffs)
    p = sympy.Poly([1] + list(reversed(coeffs)), T)
    items = []
    for i in range(n):
        for j in range(n):
            r = sympy.Poly(T ** (i + j), T).rem(p)
            for k, c in enumerate(reversed(r.all_coeffs())):
                if c:
                    items.append((i, j, k, Fraction(int(c.p), int(c.q))))
    unit = tuple(1 if k == 0 else 0 for k in range(n))
    return CommAlg(n, unit, Trilinear.from_entries((n, n, n), items)), p


poly_coeffs = st.lists(st.integers(-3, 3), min_size=1, max_size=4)
split_roots = st.lists(st.integers(-3, 3), min_size=1, max_size=4)


@settings(max_examples=40, deadline=None)
@given(poly_coeffs)
def test_polynomial_quotients_are_comm_assoc(coeffs):
    a, _ = truncated_poly_algebra(coeffs)
    assert check_comm_assoc(a) == []


@settings(max_examples=40, deadline=None)
@given(poly_coeffs)
def test_radical_dimension_matches_squarefree_degree(coeffs):
    a, p = truncated_poly_algebra(coeffs)
    sqf = sympy.quo(p, sympy.gcd(p, p.diff(T)))
    assert jacobson_radical(a).dim == a.dim - sqf.degree()
    assert is_local_over_C(a) == (sqf.degree() == 1)


@settings(max_examples=30, deadline=None)
@given(split_roots)
def test_idempotent_count_for_split_polynomials(roots):
    p = sympy.Poly(sympy.prod([T - r for r in roots]), T)
    coeffs = [int(c) for c in reversed(p.all_coeffs()[1:])]
    a, _ = truncated_poly_algebra(coeffs)
    idem = all_idempotents(a)
    assert idem is not None and len(idem) == 2 ** len(set(roots))
    for e in idem:
        assert a.times(e, e) == e
    prims = primitive_idempotents(a)
    assert sum(map(lambda e: e[0], prims)) == 1  # primitives sum to the unit


def test_builders():
    for a in (trivial_algebra(), product_algebra(3), dual_numbers(), square_zero_extension(3)):
        assert check_comm_assoc(a) == []
    assert is_local_over_C(dual_numbers()) and not is_local_over_C(product_algebra(2))
    assert jacobson_radical(square_zero_extension(3)).dim == 3
    assert len(all_idempotents(product_algebra(3))) == 8


def test_irrational_split_is_undetermined():
    # Q[t]/(t^2 - 2) is a field over Q but splits over C
    a, _ = truncated_poly_algebra([-2, 0])
    assert jacobson_radical(a).dim == 0
    assert primitive_idempotents(a) is None
    assert idempotents_in(a, Subspace.full(2)) is None


def test_violations_have_ids_and_witnesses():
    bad = CommAlg(2, (1, 0), Trilinear.from_entries((2, 2, 2), [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 0, 1)]))
    ids = {v.axiom_id for v in check_comm_assoc(bad)}
    assert "comm" in ids
    with pytest.raises(PreconditionError):
        jacobson_radical(bad)


def test_ideals():
    a = square_zero_extension(2)
    assert is_assoc_ideal(a, Subspace.coordinate(3, [1]))
    assert not is_assoc_ideal(a, Subspace.coordinate(3, [0]))
    with pytest.raises(DimensionError):
        is_assoc_ideal(a, Subspace.zero(2))


def test_dimension_zero_rejected():
    with pytest.raises(DimensionError):
        CommAlg(0, (), Trilinear((0, 0, 0), {}))
