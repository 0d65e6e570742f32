"""Time the compiled kernels against their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat N]

Workloads are the closures the verifiers actually run: row reduction of
small random integer matrices (large dense ones overflow int64 and take
the Python path anyway), spinning a vector under sl2-module operators, and
the Burnside envelope of those operators.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from algebroid import _pykernels, kernels
from algebroid.exactlin import flatten
from algebroid.leibniz import sl2_module


def _int_ops(weight: int):
    return [[int(x) for x in flatten(op)] for op in sl2_module(weight).ops()]


def workloads():
    rng = random.Random(0)
    dense = [[rng.randint(-3, 3) for _ in range(12)] for _ in range(12)]
    sparse = []
    for _ in range(120):
        r = [0] * 40
        for c in rng.sample(range(40), 3):
            r[c] = rng.choice((-1, 1))
        sparse.append(r)
    ops6 = _int_ops(5)
    ops9 = _int_ops(8)
    seed9 = [0] * 8 + [1]

    def echelon(rows, n):
        def run(mod):
            e = mod.Echelon(n)
            for r in rows:
                e.insert(r)
            return e.rows()
        return run

    return {
        "echelon 12x12": echelon(dense, 12),
        "echelon 120x40": echelon(sparse, 40),
        "spin dim 9": lambda mod: mod.spin_closure([seed9], ops9, 9, 10),
        "envelope dim 6": lambda mod: mod.envelope_closure(ops6, 6, 37),
        "envelope dim 9": lambda mod: mod.envelope_closure(ops9, 9, 82),
    }


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if kernels.COMPILED is None:
        print("compiled extension not available; build with `pip install -e . --no-build-isolation`")
        return 1
    print("%-16s %12s %12s %8s" % ("workload", "python (ms)", "compiled (ms)", "speedup"))
    for name, fn in workloads().items():
        assert fn(_pykernels) == fn(kernels.COMPILED), name
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        cc = min(timeit.repeat(lambda: fn(kernels.COMPILED), number=1, repeat=args.repeat)) * 1e3
        print("%-16s %12.2f %12.2f %7.1fx" % (name, py, cc, py / cc if cc else float("inf")))
    return 0


if __name__ == "__main__":
    sys.exit(main())
