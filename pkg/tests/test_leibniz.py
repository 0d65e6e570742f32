import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebroid.exactlin import Subspace, Trilinear, envelope
from algebroid.leibniz import (
    LeibnizAlg, adjoint_module, build_hemisemidirect, check_left_leibniz, check_module,
    derived_series, direct_sum, is_antisymmetric, is_invariant_form, is_leibniz_ideal,
    is_semisimple, is_simple, is_solvable, killing_form, leib_ideal, quotient, radical, sl2,
    sl2_module, trace_form, trivial_module, verify_levi,
)
from algebroid.report import PreconditionError
from algebroid.sl2family import build_simple_leibniz_sl2


def affine_line() -> LeibnizAlg:
    """[x, y] = y, the nonabelian 2-dimensional Lie algebra."""
    return LeibnizAlg(2, Trilinear.from_entries((2, 2, 2), [(0, 1, 1, 1), (1, 0, 1, -1)]))


def test_sl2_is_simple_lie():
    g = sl2()
    assert check_left_leibniz(g) == [] and is_antisymmetric(g)
    assert leib_ideal(g).is_zero() and is_simple(g) and is_semisimple(g)
    # tr(ad x ad y) for (e, f, h)
    assert killing_form(g) == ((0, 4, 0), (4, 0, 0), (0, 0, 8))


@pytest.mark.parametrize("m", range(0, 6))
def test_sl2_modules_are_irreducible(m):
    mod = sl2_module(m)
    assert check_module(mod) == []
    assert envelope(mod.ops(), m + 1).dim == (m + 1) ** 2


@pytest.mark.parametrize("d", range(2, 6))
def test_hemisemidirect_with_irreducible_is_simple(d):
    l = build_simple_leibniz_sl2(d)
    assert check_left_leibniz(l) == []
    v = Subspace.coordinate(3 + d, range(3, 3 + d))
    assert leib_ideal(l) == v
    assert is_simple(l) and is_semisimple(l)
    series = derived_series(l, leib_ideal(l))
    assert series[-1].is_zero() and len(series) == 2


def test_two_copies_semisimple_not_simple():
    l = build_simple_leibniz_sl2(2, copies=2)
    assert is_semisimple(l) and not is_simple(l)
    assert leib_ideal(l).dim == 4


def test_trivial_module_warning_and_errors():
    with pytest.warns(UserWarning):
        l = build_simple_leibniz_sl2(1)
    assert leib_ideal(l).is_zero() and not is_simple(l)
    with pytest.raises(ValueError):
        build_simple_leibniz_sl2(0)


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_leib_is_the_nontrivial_part(weights):
    mods = [sl2_module(w) for w in weights]
    l = build_hemisemidirect(sl2(), direct_sum(*mods))
    assert check_left_leibniz(l) == []
    assert leib_ideal(l).dim == sum(w + 1 for w in weights if w > 0)
    # Leib is a two-sided ideal that is abelian and acts by zero from the left
    leib = leib_ideal(l)
    assert is_leibniz_ideal(l, leib, "two-sided")
    assert all(not any(l.br(x, y)) for x in leib.basis for y in Subspace.full(l.dim).basis)
    # a trivial summand is central, so it sits in the radical but not in Leib
    assert is_semisimple(l) == all(w > 0 for w in weights)
    nontrivial = [w for w in weights if w > 0]
    assert is_simple(l) == (len(nontrivial) == 1 and len(weights) == 1)


def test_solvable_algebra():
    g = affine_line()
    assert check_left_leibniz(g) == [] and is_solvable(g)
    assert radical(g).is_full() and not is_semisimple(g) and not is_simple(g)


def test_levi_verification():
    l = build_simple_leibniz_sl2(3)
    assert verify_levi(l, Subspace.coordinate(6, [0, 1, 2]))
    assert not verify_levi(l, Subspace.coordinate(6, [0, 1]))
    assert not verify_levi(sl2(), Subspace.zero(3))


def test_quotient_and_forms():
    l = build_simple_leibniz_sl2(3)
    q = quotient(l, leib_ideal(l))
    assert q.bracket == sl2().bracket
    assert is_invariant_form(sl2(), trace_form(sl2_module(1)))
    assert trace_form(adjoint_module(sl2())) == killing_form(sl2())
    with pytest.raises(ValueError):
        quotient(l, Subspace.coordinate(6, [0]))


def test_non_leibniz_rejected():
    bad = LeibnizAlg(2, Trilinear.from_entries((2, 2, 2), [(0, 0, 1, 1), (1, 1, 0, 1)]))
    assert check_left_leibniz(bad)
    with pytest.raises(PreconditionError):
        radical(bad)
    with pytest.raises(PreconditionError):
        build_hemisemidirect(bad, trivial_module(bad, 1))
