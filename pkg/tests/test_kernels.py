import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebroid import _pykernels, kernels

int_rows = st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), max_size=5)))

needs_compiled = pytest.mark.skipif(kernels.COMPILED is None, reason="extension not built")


def _echelon(mod, rows, n):
    e = mod.Echelon(n)
    for r in rows:
        e.insert(list(r))
    return e.rows(), e.pivots()


@needs_compiled
@settings(max_examples=100, deadline=None)
@given(int_rows)
def test_compiled_echelon_matches_python(nr):
    n, rows = nr
    assert _echelon(kernels.COMPILED, rows, n) == _echelon(_pykernels, rows, n)


@needs_compiled
@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=9, max_size=9), max_size=3),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_compiled_closures_match_python(ops, seed):
    assert kernels.COMPILED.spin_closure([seed], ops, 3, 4) == _pykernels.spin_closure([seed], ops, 3, 4)
    assert kernels.COMPILED.envelope_closure(ops, 3, 10) == _pykernels.envelope_closure(ops, 3, 10)


def test_overflow_falls_back_to_python():
    big = 2 ** 70
    rows, piv = kernels.echelon_rows([[big, 1], [1, big]], 2)
    assert piv == [0, 1]
    assert kernels.spin_closure([[big, 0]], [[0, 1, 1, 0]], 2, 3)


def test_backend_selection_respects_env():
    env = dict(os.environ, ALGEBROID_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import algebroid.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_insert_reports_new_directions():
    e = _pykernels.Echelon(2)
    assert e.insert([1, 1]) and not e.insert([2, 2]) and e.insert([0, 3])
    assert e.rank == 2


@needs_compiled
def test_benchmark_runs(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--repeat", "1"]) == 0
    assert "envelope dim 9" in capsys.readouterr().out
