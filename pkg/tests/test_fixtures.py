import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebroid.fixtures import FixtureError, emit, emit_fixture, load, parse
from algebroid.sl2family import build_sl2_algebroid, levi_rows

from .conftest import FIXTURES
from .fixtures.generate import corpus

ALL = sorted(p.name for p in FIXTURES.glob("*.json"))


def test_corpus_is_up_to_date():
    expected = corpus()
    assert sorted(expected) == ALL
    for name, text in expected.items():
        assert (FIXTURES / name).read_text() == text, name


@pytest.mark.parametrize("name", ALL)
def test_round_trip_is_byte_identical(name):
    text = (FIXTURES / name).read_text()
    assert emit_fixture(parse(text)) == text


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_family_round_trip(l):
    b = build_sl2_algebroid(l)
    text = emit(b, "f", subspaces={"levi": levi_rows(l)})
    fx = parse(text)
    assert fx.obj == b and fx.subspaces["levi"] == levi_rows(l)
    assert emit_fixture(fx) == text


def _base():
    return json.loads((FIXTURES / "comm-dual-numbers.json").read_text())


@pytest.mark.parametrize("mutate,fragment", [
    (lambda d: d.pop("kind"), "missing field 'kind'"),
    (lambda d: d.update(kind="ring"), "unknown kind"),
    (lambda d: d["dims"].update(A=0), "dim A >= 1"),
    (lambda d: d["tables"]["mul"].append([5, 0, 0, "1"]), "out of range"),
    (lambda d: d["tables"]["mul"].__setitem__(0, [0, 0, 0, "2/2"]), "not canonical"),
    (lambda d: d["tables"]["mul"].append(d["tables"]["mul"][0]), "duplicate"),
    (lambda d: d["tables"].update(extra=[]), "unknown tables"),
    (lambda d: d["tables"].pop("mul"), "missing field 'mul'"),
    (lambda d: d.update(unit=["1"]), "unit must list"),
    (lambda d: d["labels"].update(A=["1"]), "labels for 'A'"),
    (lambda d: d["tables"]["mul"][0].__setitem__(3, 1), "must be a string"),
])
def test_shape_errors_are_located(mutate, fragment):
    d = _base()
    mutate(d)
    with pytest.raises(FixtureError) as exc:
        parse(json.dumps(d), "x.json")
    assert fragment in str(exc.value) and str(exc.value).startswith("x.json")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 400))
def test_truncation_reports_line_and_column(cut):
    text = (FIXTURES / "sl2-family-l1.json").read_text()
    with pytest.raises(FixtureError) as exc:
        parse(text[:cut], "t.json")
    assert exc.value.where.startswith("t.json:")


def test_load_missing_file(tmp_path):
    with pytest.raises(FixtureError):
        load(tmp_path / "nope.json")
