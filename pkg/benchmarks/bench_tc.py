"""Benchmark: compiled vs interpreted coset-enumeration kernel.

The package ships `_tc_core` as Cython pure-mode source; when built it is a
compiled extension, and the same file runs unmodified under CPython.  This
script loads both variants side by side and times them on presentations of
increasing order.

Usage: python benchmarks/bench_tc.py [--repeat N]
"""

import argparse
import importlib.util
import pathlib
import statistics
import sys
import time

import mfdeg._tc_core as built
from mfdeg.catalog import expand_catalog
from mfdeg.presentation import _word_to_cols

SRC = pathlib.Path(built.__file__).parent / "_tc_core.py"


def load_interpreted():
    spec = importlib.util.spec_from_file_location("_tc_core_interp", SRC)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert not mod.COMPILED
    return mod


CASES = [
    ("xsp_p3_expP", 3, {}),
    ("hxcp2", 3, {}),
    ("tower", 5, {"n": 4, "i": 2}),
    ("phi4_221b", 5, {}),
    ("phi9", 5, {}),
]


def bench(mod, ncols, relators, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        order, _ = mod.enumerate_cosets(ncols, relators, 200_000)
        times.append(time.perf_counter() - t0)
    return order, min(times), statistics.median(times)


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    interp = load_interpreted()
    if not built.COMPILED:
        print("note: installed kernel is not compiled; comparing interpreter to itself")

    print("%-14s %8s %12s %12s %8s" % ("group", "order", "compiled", "interpreted", "speedup"))
    for fam, p, params in CASES:
        spec = expand_catalog(fam, p, params)
        relators = [_word_to_cols(w) for w in spec.relators if w]
        ncols = 2 * len(spec.generators)
        order_b, tb, _ = bench(built, ncols, relators, args.repeat)
        order_i, ti, _ = bench(interp, ncols, relators, args.repeat)
        assert order_b == order_i
        print("%-14s %8d %10.4fs %10.4fs %7.1fx" % (fam, order_b, tb, ti, ti / tb))


if __name__ == "__main__":
    sys.exit(main())
